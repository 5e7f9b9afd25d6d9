#include "cotlab/rewards.hpp"

#include <algorithm>
#include <cmath>

#include "cotlab/errors.hpp"

namespace cotlab {

void RewardWeights::validate() const {
  if (!(std::isfinite(lambda_acc) && lambda_acc >= 0.0) ||
      !(std::isfinite(lambda_fmt) && lambda_fmt >= 0.0)) {
    throw ConfigError("reward weights must be finite and non-negative");
  }
}

ParsedResponse parse_format(std::span<const TokenId> response) {
  ParsedResponse out;
  std::size_t i = 0;
  const std::size_t n = response.size();
  auto inner = [](TokenId t) { return !Vocab::is_special(t); };

  if (i >= n || response[i] != Vocab::kThinkOpen) return out;
  ++i;
  std::size_t think_begin = i;
  while (i < n && inner(response[i])) ++i;
  if (i >= n || response[i] != Vocab::kThinkClose) return out;
  std::size_t think_end = i;
  ++i;
  if (i >= n || response[i] != Vocab::kAnswerOpen) return out;
  ++i;
  std::size_t ans_begin = i;
  while (i < n && inner(response[i])) ++i;
  if (i == ans_begin) return out;  // answer span must be non-empty
  if (i >= n || response[i] != Vocab::kAnswerClose) return out;
  std::size_t ans_end = i;
  ++i;
  if (i < n && response[i] == Vocab::kEos) ++i;
  if (i != n) return out;  // nothing after

  out.think_span.assign(response.begin() + think_begin, response.begin() + think_end);
  out.answer_span.assign(response.begin() + ans_begin, response.begin() + ans_end);
  out.well_formed = true;
  return out;
}

int accuracy_reward(const ParsedResponse& parsed, TokenId gold, AccuracyMode mode) {
  if (!parsed.well_formed) return 0;
  if (mode == AccuracyMode::Strict)
    return parsed.answer_span.size() == 1 && parsed.answer_span[0] == gold ? 1 : 0;
  return std::find(parsed.answer_span.begin(), parsed.answer_span.end(), gold) !=
                 parsed.answer_span.end()
             ? 1
             : 0;
}

int format_reward(const ParsedResponse& parsed) { return parsed.well_formed ? 1 : 0; }

double total_reward(std::span<const TokenId> response, TokenId gold, const RewardWeights& w,
                    AccuracyMode mode) {
  ParsedResponse parsed = parse_format(response);
  return w.lambda_acc * accuracy_reward(parsed, gold, mode) + w.lambda_fmt * format_reward(parsed);
}

}  // namespace cotlab
