#include "cotlab/curriculum.hpp"

#include <algorithm>
#include <numeric>

#include "cotlab/errors.hpp"
#include "cotlab/rng.hpp"

namespace cotlab {

std::vector<int> CurriculumPlan::parse_ratio(const std::string& spec) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t colon = spec.find(':', pos);
    std::string part = spec.substr(pos, colon == std::string::npos ? colon : colon - pos);
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw ConfigError("bad ratio '" + spec + "' (expected e:m:h or e:rest)");
    }
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (out.size() != 2 && out.size() != 3)
    throw ConfigError("ratio '" + spec + "' must have 2 or 3 components");
  return out;
}

void CurriculumPlan::validate() const {
  if (ratio.size() != 2 && ratio.size() != 3)
    throw ConfigError("curriculum ratio must have 2 or 3 components");
  int total = 0;
  for (int r : ratio) {
    if (r < 0) throw ConfigError("curriculum ratio components must be non-negative");
    total += r;
  }
  if (total == 0) throw ConfigError("curriculum ratio must not be all zero");
  if (budget < 0) throw ConfigError("curriculum budget must be non-negative");
}

DifficultyBin bin_sample(const Outcome& outcome) {
  if (outcome.pretrained_correct) return DifficultyBin::Easy;
  return outcome.sft_correct ? DifficultyBin::Medium : DifficultyBin::Hard;
}

Bins bin_all(std::span<const QASample> samples, const OutcomeLog& log) {
  Bins bins;
  for (const QASample& s : samples) {
    bins.by_bin[static_cast<int>(bin_sample(log.at(s.id)))].push_back(s);
  }
  return bins;
}

std::vector<int> curriculum_quotas(const CurriculumPlan& plan) {
  plan.validate();
  long total = std::accumulate(plan.ratio.begin(), plan.ratio.end(), 0L);
  std::size_t k = plan.ratio.size();
  std::vector<int> quotas(k);
  std::vector<long> remainders(k);
  long assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    long num = static_cast<long>(plan.budget) * plan.ratio[i];
    quotas[i] = static_cast<int>(num / total);
    remainders[i] = num % total;
    assigned += quotas[i];
  }
  long leftover = plan.budget - assigned;
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (long i = 0; i < leftover; ++i) quotas[order[static_cast<std::size_t>(i)]] += 1;
  return quotas;
}

namespace {

// Quota items from one pool: a seeded shuffle prefix, topped up with
// replacement on shortfall.
std::vector<std::size_t> pick_indices(std::size_t pool_size, int quota, bool allow_replacement,
                                      std::uint64_t seed, const char* pool_name) {
  std::vector<std::size_t> out;
  if (quota == 0) return out;
  if (pool_size == 0)
    throw ValidationError(std::string("curriculum quota of ") + std::to_string(quota) +
                          " cannot be met: " + pool_name + " pool is empty");
  if (static_cast<std::size_t>(quota) > pool_size && !allow_replacement)
    throw ValidationError(std::string("curriculum quota of ") + std::to_string(quota) +
                          " exceeds " + pool_name + " pool of " + std::to_string(pool_size) +
                          " and replacement is disabled");
  Rng rng(seed);
  std::vector<std::size_t> perm(pool_size);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::size_t take = std::min<std::size_t>(quota, pool_size);
  out.assign(perm.begin(), perm.begin() + take);
  while (out.size() < static_cast<std::size_t>(quota)) out.push_back(rng.below(pool_size));
  return out;
}

}  // namespace

CurriculumSelection sample_curriculum(const Bins& bins, const CurriculumPlan& plan) {
  std::vector<int> quotas = curriculum_quotas(plan);
  CurriculumSelection sel;
  sel.bin_sizes = bins.sizes();

  struct Pool {
    std::vector<const QASample*> items;
    std::vector<DifficultyBin> labels;
    const char* name;
  };
  std::vector<Pool> pools;
  if (plan.ratio.size() == 3) {
    const char* names[3] = {"easy", "medium", "hard"};
    for (int b = 0; b < 3; ++b) {
      Pool p;
      p.name = names[b];
      for (const QASample& s : bins.by_bin[b]) {
        p.items.push_back(&s);
        p.labels.push_back(static_cast<DifficultyBin>(b));
      }
      pools.push_back(std::move(p));
    }
  } else {
    Pool easy{{}, {}, "easy"};
    for (const QASample& s : bins.by_bin[0]) {
      easy.items.push_back(&s);
      easy.labels.push_back(DifficultyBin::Easy);
    }
    Pool rest{{}, {}, "medium+hard"};
    for (int b = 1; b < 3; ++b) {
      for (const QASample& s : bins.by_bin[b]) {
        rest.items.push_back(&s);
        rest.labels.push_back(static_cast<DifficultyBin>(b));
      }
    }
    pools.push_back(std::move(easy));
    pools.push_back(std::move(rest));
  }

  for (std::size_t pi = 0; pi < pools.size(); ++pi) {
    auto indices = pick_indices(pools[pi].items.size(), quotas[pi], plan.allow_replacement,
                                Rng::derive(plan.seed, {1, pi}), pools[pi].name);
    for (std::size_t idx : indices) {
      sel.samples.push_back(*pools[pi].items[idx]);
      DifficultyBin b = pools[pi].labels[idx];
      sel.bins.push_back(b);
      sel.selected_per_bin[static_cast<int>(b)] += 1;
    }
  }

  if (plan.ordering == CurriculumPlan::Ordering::Shuffled) {
    Rng rng(Rng::derive(plan.seed, {2}));
    std::vector<std::size_t> perm(sel.samples.size());
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<QASample> samples;
    std::vector<DifficultyBin> bins_out;
    samples.reserve(perm.size());
    bins_out.reserve(perm.size());
    for (std::size_t i : perm) {
      samples.push_back(std::move(sel.samples[i]));
      bins_out.push_back(sel.bins[i]);
    }
    sel.samples = std::move(samples);
    sel.bins = std::move(bins_out);
  }
  return sel;
}

}  // namespace cotlab
