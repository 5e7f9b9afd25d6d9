#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cotlab/vocab.hpp"

namespace cotlab {

// One question instance. The context token sequence is the audio surrogate;
// there is no audio decoding anywhere in this project. Option meaning
// strings are kept for report readability and for the synthetic oracle.
struct QASample {
  std::string id;
  std::vector<TokenId> context;
  std::vector<TokenId> question;
  std::vector<char> options;                // ascending subset of {A..D}, size 2..4
  std::map<char, std::string> option_texts; // letter -> meaning
  char gold = 'A';
  std::optional<std::vector<TokenId>> cot;
  std::string modality_tag = "sound";

  bool has_option(char letter) const {
    for (char c : options)
      if (c == letter) return true;
    return false;
  }
  TokenId gold_token() const { return Vocab::option_id(gold); }
};

// Throws ValidationError when a domain invariant is broken. Context must be
// content tokens, the CoT must not contain special tokens, gold must be one
// of the sample's options.
void validate_sample(const QASample& s, const Vocab& vocab);

struct Outcome {
  bool pretrained_correct = false;
  bool sft_correct = false;

  bool operator==(const Outcome&) const = default;
};

// Per-sample correctness of the pretrained and SFT passes; the raw material
// for difficulty binning.
struct OutcomeLog {
  std::map<std::string, Outcome> entries;

  const Outcome& at(const std::string& id) const;
  bool contains(const std::string& id) const { return entries.count(id) != 0; }
  std::size_t size() const { return entries.size(); }
};

enum class DifficultyBin { Easy = 0, Medium = 1, Hard = 2 };

inline const char* bin_name(DifficultyBin b) {
  switch (b) {
    case DifficultyBin::Easy: return "easy";
    case DifficultyBin::Medium: return "medium";
    default: return "hard";
  }
}

}  // namespace cotlab
