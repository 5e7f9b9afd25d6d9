#include "cotlab/sample.hpp"

#include <algorithm>

#include "cotlab/errors.hpp"

namespace cotlab {

void validate_sample(const QASample& s, const Vocab& vocab) {
  if (s.id.empty()) throw ValidationError("sample with empty id");
  if (s.options.size() < 2 || s.options.size() > 4) {
    throw ValidationError("sample '" + s.id + "': expected 2..4 options, got " +
                          std::to_string(s.options.size()));
  }
  for (char c : s.options) {
    if (!Vocab::is_option_letter(c))
      throw ValidationError("sample '" + s.id + "': option letter '" + std::string(1, c) +
                            "' outside A..D");
  }
  if (std::adjacent_find(s.options.begin(), s.options.end()) != s.options.end() ||
      !std::is_sorted(s.options.begin(), s.options.end())) {
    throw ValidationError("sample '" + s.id + "': options must be strictly ascending letters");
  }
  if (!s.has_option(s.gold)) {
    throw ValidationError("sample '" + s.id + "': gold '" + std::string(1, s.gold) +
                          "' not among its options");
  }
  for (TokenId t : s.context) {
    if (!vocab.is_content(t))
      throw ValidationError("sample '" + s.id + "': context token " + std::to_string(t) +
                            " is not a content token");
  }
  for (TokenId t : s.question) {
    if (Vocab::is_special(t))
      throw ValidationError("sample '" + s.id + "': question contains a special token");
  }
  if (s.cot) {
    for (TokenId t : *s.cot) {
      if (Vocab::is_special(t))
        throw ValidationError("sample '" + s.id + "': cot contains a special token");
    }
  }
}

const Outcome& OutcomeLog::at(const std::string& id) const {
  auto it = entries.find(id);
  if (it == entries.end()) throw ValidationError("id '" + id + "' missing from outcome log");
  return it->second;
}

}  // namespace cotlab
