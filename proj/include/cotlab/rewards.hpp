#pragma once

#include <span>
#include <vector>

#include "cotlab/vocab.hpp"

namespace cotlab {

struct RewardWeights {
  double lambda_acc = 2.0;
  double lambda_fmt = 1.0;

  void validate() const;
};

// Strict: the answer span must be exactly the gold option token.
// ContainsGold: any span containing the gold token scores 1 (lenient mode
// for ablation; never the default).
enum class AccuracyMode { Strict, ContainsGold };

struct ParsedResponse {
  std::vector<TokenId> think_span;
  std::vector<TokenId> answer_span;
  bool well_formed = false;
};

// Recognizes exactly:
//   <think> (non-special)* </think> <answer> (non-special)+ </answer> <eos>?
// with nothing after. Malformed input is a value, not an error: spans come
// back empty and well_formed is false.
ParsedResponse parse_format(std::span<const TokenId> response);

int accuracy_reward(const ParsedResponse& parsed, TokenId gold,
                    AccuracyMode mode = AccuracyMode::Strict);
int format_reward(const ParsedResponse& parsed);

double total_reward(std::span<const TokenId> response, TokenId gold, const RewardWeights& w,
                    AccuracyMode mode = AccuracyMode::Strict);

}  // namespace cotlab
