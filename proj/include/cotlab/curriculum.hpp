#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cotlab/sample.hpp"

namespace cotlab {

// Training-set composition plan. ratio has three entries (easy:medium:hard)
// or two (easy : medium+hard merged, the pretrained-correct:incorrect
// baseline). Quotas are apportioned by largest remainder so they always sum
// exactly to budget.
struct CurriculumPlan {
  enum class Ordering { Progressive, Shuffled };

  std::vector<int> ratio = {3, 20, 7};
  int budget = 15000;
  Ordering ordering = Ordering::Progressive;
  std::uint64_t seed = 0;
  // When a bin is smaller than its quota, top up by sampling with
  // replacement instead of aborting. Strict mode errors instead.
  bool allow_replacement = true;

  static std::vector<int> parse_ratio(const std::string& spec);  // "3:20:7" or "1:5"
  void validate() const;
};

// (pretrained correct)            -> Easy
// (pretrained wrong, sft correct) -> Medium
// (pretrained wrong, sft wrong)   -> Hard
DifficultyBin bin_sample(const Outcome& outcome);

struct Bins {
  std::array<std::vector<QASample>, 3> by_bin;

  const std::vector<QASample>& of(DifficultyBin b) const {
    return by_bin[static_cast<int>(b)];
  }
  std::array<std::size_t, 3> sizes() const {
    return {by_bin[0].size(), by_bin[1].size(), by_bin[2].size()};
  }
};

// Partition preserving within-bin input order. Missing ids raise
// ValidationError.
Bins bin_all(std::span<const QASample> samples, const OutcomeLog& log);

// Largest-remainder quotas for the plan's ratio (2 or 3 entries, summing to
// budget; ties broken toward earlier bins).
std::vector<int> curriculum_quotas(const CurriculumPlan& plan);

struct CurriculumSelection {
  std::vector<QASample> samples;
  std::vector<DifficultyBin> bins;  // parallel to samples
  std::array<int, 3> selected_per_bin = {0, 0, 0};
  std::array<std::size_t, 3> bin_sizes = {0, 0, 0};
};

// Seeded selection without replacement up to each bin's size, with
// replacement for any shortfall (unless strict). Progressive ordering emits
// easy, then medium, then hard, shuffled within bin; Shuffled applies one
// global seeded shuffle instead.
CurriculumSelection sample_curriculum(const Bins& bins, const CurriculumPlan& plan);

}  // namespace cotlab
