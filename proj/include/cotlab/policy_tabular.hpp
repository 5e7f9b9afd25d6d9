#pragma once

#include <array>
#include <unordered_map>

#include "cotlab/policy.hpp"

namespace cotlab {

// Templated tabular policy: per context key (hash of the context multiset
// and question) a think-gate logit and one answer logit per option letter.
// Responses are assembled from a fixed template and are always well-formed:
//
//   <think> [context tokens when the gate fires] </think>
//   <answer> letter </answer> <eos>
//
// Unseen keys behave as all-zero logits (uniform). Keys materialize into the
// parameter vector only when a gradient touches them, always at zero, so
// materialization never changes behavior. A brute-force-verifiable stand-in
// for the full model.
class TabularPolicy final : public Policy {
 public:
  explicit TabularPolicy(std::shared_ptr<Vocab> vocab) : vocab_(std::move(vocab)) {}

  const Vocab& vocab() const override { return *vocab_; }
  std::size_t param_count() const override { return keys_.size() * kParamsPerKey; }
  std::vector<double> params() const override;
  void set_params(std::span<const double> p) override;
  void add_scaled(std::span<const double> grad, double scale) override;
  std::unique_ptr<Policy> clone() const override;

  std::vector<Decision> decisions(const QASample& sample, std::span<const TokenId> response,
                                  double temperature) const override;
  void accumulate_grad(const QASample& sample, std::span<const TokenId> response,
                       const std::vector<std::vector<double>>& dlogits,
                       std::vector<double>& grad) override;
  std::vector<TokenId> sample_response(const QASample& sample, double temperature, int max_len,
                                       std::uint64_t seed) const override;
  std::vector<TokenId> greedy_response(const QASample& sample, int max_len) const override;
  double think_probability(const QASample& sample) const override;

  static constexpr int kParamsPerKey = 5;  // gate, then answers A..D

  std::uint64_t key_of(const QASample& sample) const;
  double gate_logit(std::uint64_t key) const;
  std::array<double, 4> answer_logits(std::uint64_t key) const;
  std::size_t key_count() const { return keys_.size(); }

  // Serialization hooks.
  const std::vector<std::uint64_t>& key_order() const { return keys_; }
  void load_table(std::vector<std::uint64_t> keys, std::vector<double> flat);
  std::shared_ptr<Vocab> vocab_ptr() const { return vocab_; }

 private:
  std::size_t ensure_key(std::uint64_t key);
  // gate decision then answer decision for a parsed response
  struct TemplateView {
    bool think_used = false;
    int option_index = 0;  // into sample.options
  };
  TemplateView parse_template(const QASample& sample, std::span<const TokenId> response) const;
  std::vector<double> option_probs(const QASample& sample, std::uint64_t key,
                                   double temperature) const;
  std::vector<TokenId> assemble(const QASample& sample, bool think, char letter,
                                int max_len) const;

  std::shared_ptr<Vocab> vocab_;
  std::vector<std::uint64_t> keys_;          // insertion order
  std::vector<double> flat_;                 // kParamsPerKey per key
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace cotlab
