#include "cotlab/vocab.hpp"

#include "cotlab/errors.hpp"

namespace cotlab {

namespace {
constexpr const char* kSpecialNames[Vocab::kNumSpecials] = {
    "<pad>", "<eos>", "<think>", "</think>", "<answer>", "</answer>"};
}

TokenId Vocab::intern(std::string_view word) {
  auto it = index_.find(std::string(word));
  if (it != index_.end()) return it->second;
  TokenId id = kContentBase + static_cast<TokenId>(words_.size());
  words_.emplace_back(word);
  index_.emplace(words_.back(), id);
  return id;
}

std::optional<TokenId> Vocab::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Vocab::token_string(TokenId t) const {
  if (is_special(t)) return kSpecialNames[t];
  if (is_option(t)) return std::string(1, option_letter(t));
  return word(t);
}

TokenId Vocab::token_from_string(std::string_view s) {
  for (int i = 0; i < kNumSpecials; ++i) {
    if (s == kSpecialNames[i]) return static_cast<TokenId>(i);
  }
  if (s.size() == 1 && is_option_letter(s[0])) return option_id(s[0]);
  return intern(s);
}

const std::string& Vocab::word(TokenId t) const {
  std::size_t idx = static_cast<std::size_t>(t - kContentBase);
  if (t < kContentBase || idx >= words_.size()) {
    throw ValidationError("token id " + std::to_string(t) + " is not an interned content word");
  }
  return words_[idx];
}

}  // namespace cotlab
