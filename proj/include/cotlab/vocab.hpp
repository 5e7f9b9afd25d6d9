#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cotlab {

using TokenId = std::int32_t;

// Token id space. Layout is fixed: 6 special ids, then the 4 option letters,
// then content words. Content words are interned in first-seen order, which
// is what makes tokenization deterministic for a given file. Unknown words
// extend the content block instead of erroring, so corpus-shaped JSONL loads
// without a pre-built lexicon.
class Vocab {
 public:
  static constexpr TokenId kPad = 0;
  static constexpr TokenId kEos = 1;
  static constexpr TokenId kThinkOpen = 2;
  static constexpr TokenId kThinkClose = 3;
  static constexpr TokenId kAnswerOpen = 4;
  static constexpr TokenId kAnswerClose = 5;
  static constexpr int kNumSpecials = 6;
  static constexpr int kNumOptions = 4;
  static constexpr int kContentBase = kNumSpecials + kNumOptions;
  static constexpr int kDefaultContentSlots = 64;

  Vocab() : Vocab(kDefaultContentSlots) {}
  explicit Vocab(int min_content_slots) : min_content_slots_(min_content_slots) {}

  static bool is_special(TokenId t) { return t >= 0 && t < kNumSpecials; }
  static bool is_option(TokenId t) { return t >= kNumSpecials && t < kContentBase; }
  bool is_content(TokenId t) const { return t >= kContentBase && t < size(); }

  static TokenId option_id(char letter) { return kNumSpecials + (letter - 'A'); }
  static char option_letter(TokenId t) { return static_cast<char>('A' + (t - kNumSpecials)); }
  static bool is_option_letter(char c) { return c >= 'A' && c <= 'D'; }

  // Content word -> id, interning on first sight.
  TokenId intern(std::string_view word);
  std::optional<TokenId> find(std::string_view word) const;

  // Display string for any id: "<think>", "A", "dog", ...
  std::string token_string(TokenId t) const;
  // Inverse of token_string; interns unknown content words.
  TokenId token_from_string(std::string_view s);

  const std::string& word(TokenId t) const;

  int content_count() const { return static_cast<int>(words_.size()); }
  // Total V. At least kContentBase + min_content_slots so policies sized off
  // a fresh vocabulary have room for the default lexicon.
  int size() const {
    int content = static_cast<int>(words_.size());
    if (content < min_content_slots_) content = min_content_slots_;
    return kContentBase + content;
  }

  const std::vector<std::string>& words() const { return words_; }

  bool operator==(const Vocab& other) const { return words_ == other.words_; }

 private:
  int min_content_slots_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, TokenId> index_;
};

}  // namespace cotlab
