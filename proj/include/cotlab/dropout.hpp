#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cotlab/sample.hpp"

namespace cotlab {

// Keep/drop policy for CoT spans in SFT targets. Guided is the mechanism of
// interest: drop the CoT exactly when the pretrained pass answered the
// sample correctly. Random is the ablation baseline.
struct DropoutPolicy {
  enum class Kind { Guided, Random, None, All };
  Kind kind = Kind::Guided;
  double p = 0.5;  // Random only

  // Accepts "guided", "random:<p>", "none", "all".
  static DropoutPolicy parse(std::string_view spec);
  std::string to_string() const;
  void validate() const;
};

// Output sample i has no cot iff log[i].pretrained_correct; everything else
// is unchanged, order preserved. Ids missing from the log raise
// ValidationError naming the id. Idempotent.
std::vector<QASample> apply_guided(std::vector<QASample> samples, const OutcomeLog& log);

// Each sample's cot is removed independently with probability p, one derived
// seed per index.
std::vector<QASample> apply_random(std::vector<QASample> samples, double p, std::uint64_t seed);

std::vector<QASample> apply_dropout(std::vector<QASample> samples, const DropoutPolicy& policy,
                                    const OutcomeLog* log, std::uint64_t seed);

// SFT target sequence:
//   <think> cot... </think> <answer> gold </answer> <eos>
// with an empty think span when the cot is absent. The empty tags keep the
// single format grammar satisfiable by both reasoning and non-reasoning
// targets; set empty_think_tags=false to emit bare answer spans instead
// (those do not parse as well-formed).
std::vector<TokenId> render_target(const QASample& s, bool empty_think_tags = true);

}  // namespace cotlab
