#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

#include "cotlab/sample.hpp"

namespace cotlab {

// One categorical choice made while emitting a response: the distribution
// over alternatives (already temperature-scaled) and which alternative the
// response realized. For the tiny net a decision is one token position; for
// the templated tabular policy the decisions are the think gate and the
// answer pick.
struct Decision {
  std::vector<double> probs;
  int realized = 0;
};

// A parameterized sampler/scorer of token sequences with exact per-decision
// distributions and analytic gradients. Frozen clones serve as the rollout
// and reference policies.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual const Vocab& vocab() const = 0;
  virtual std::size_t param_count() const = 0;
  virtual std::vector<double> params() const = 0;
  virtual void set_params(std::span<const double> p) = 0;
  // theta += scale * grad. grad may be shorter than param_count (parameters
  // materialized after the gradient was taken); the tail is left unchanged.
  virtual void add_scaled(std::span<const double> grad, double scale) = 0;
  virtual std::unique_ptr<Policy> clone() const = 0;

  // Decision chain of `response` under this policy, probabilities at the
  // given temperature. Throws if the response is not scoreable (token out of
  // vocabulary; non-template response for the tabular policy).
  virtual std::vector<Decision> decisions(const QASample& sample,
                                          std::span<const TokenId> response,
                                          double temperature) const = 0;

  // Accumulates d(loss)/d(theta) given d(loss)/d(logits) for every decision,
  // at temperature 1. Materializes lazily-created parameters, so grad is
  // resized to param_count() first.
  virtual void accumulate_grad(const QASample& sample, std::span<const TokenId> response,
                               const std::vector<std::vector<double>>& dlogits,
                               std::vector<double>& grad) = 0;

  virtual std::vector<TokenId> sample_response(const QASample& sample, double temperature,
                                               int max_len, std::uint64_t seed) const = 0;
  // Argmax decoding; ties resolve to the lowest index.
  virtual std::vector<TokenId> greedy_response(const QASample& sample, int max_len) const = 0;

  // P(non-empty think span) for this sample.
  virtual double think_probability(const QASample& sample) const = 0;
};

// Sum over decisions of log P(realized). Probabilities are evaluated at
// `temperature`; importance ratios and losses use 1.0, the sampling
// temperature is a rollout-time device.
double sequence_logprob(const Policy& policy, const QASample& sample,
                        std::span<const TokenId> response, double temperature = 1.0);

// Analytic grad of sequence_logprob at temperature 1. Matches central finite
// differences.
std::vector<double> grad_logprob(Policy& policy, const QASample& sample,
                                 std::span<const TokenId> response);

// Mean over decisions of sum_v p_v log(p_v / q_v) on the prefixes realized by
// `response`. Non-negative; +inf when q has a zero where p does not.
double exact_kl(const Policy& p, const Policy& q, const QASample& sample,
                std::span<const TokenId> response);

// Mean over decisions of (r - log r - 1) with r = q(realized)/p(realized);
// the low-variance single-sample KL(p||q) estimator.
double k3_kl(const Policy& p, const Policy& q, const QASample& sample,
             std::span<const TokenId> response);

// Binary checkpoint with a shape header and the vocabulary word list;
// round-trips bit-exactly.
void save_policy(const Policy& policy, const std::filesystem::path& path);

struct LoadedPolicy {
  std::unique_ptr<Policy> policy;
  std::shared_ptr<Vocab> vocab;
};
LoadedPolicy load_policy(const std::filesystem::path& path);

enum class PolicyKind { Tabular, TinyNet };

std::unique_ptr<Policy> make_policy(PolicyKind kind, std::shared_ptr<Vocab> vocab,
                                    std::uint64_t init_seed);

}  // namespace cotlab
