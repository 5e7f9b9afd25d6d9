#pragma once

#include "cotlab/policy.hpp"

namespace cotlab {

// Small autoregressive net with exact per-position categorical
// distributions:
//
//   x_t = concat(mean emb(context+question), mean emb(generated prefix))
//   logits_t = W2 tanh(W1 x_t + b1) + b2
//
// The prefix half of x_t is zero at the first position. Vocabulary size is
// pinned at construction; scoring a token id outside it is an error.
class TinyNetPolicy final : public Policy {
 public:
  TinyNetPolicy(std::shared_ptr<Vocab> vocab, std::uint64_t init_seed, int embed_dim = 16,
                int hidden_dim = 32);

  const Vocab& vocab() const override { return *vocab_; }
  std::size_t param_count() const override { return theta_.size(); }
  std::vector<double> params() const override { return theta_; }
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

  // Exact next-token distribution given a generated prefix.
  std::vector<double> step_dist(const QASample& sample, std::span<const TokenId> prefix,
                                double temperature) const;

  int vocab_size() const { return V_; }
  int embed_dim() const { return d_; }
  int hidden_dim() const { return h_; }

  // Serialization hooks.
  void load_params(std::vector<double> theta);
  std::shared_ptr<Vocab> vocab_ptr() const { return vocab_; }

 private:
  struct Forward {
    std::vector<double> x;       // 2d
    std::vector<double> hidden;  // h, post-tanh
    std::vector<double> logits;  // V
  };
  Forward forward(const QASample& sample, std::span<const TokenId> prefix) const;
  void context_encoding(const QASample& sample, double* out) const;
  void check_token(TokenId t) const;

  // Flat layout offsets.
  std::size_t emb_at(TokenId t) const { return static_cast<std::size_t>(t) * d_; }
  std::size_t w1_at(int row) const { return emb_size_ + static_cast<std::size_t>(row) * 2 * d_; }
  std::size_t b1_at() const { return emb_size_ + static_cast<std::size_t>(h_) * 2 * d_; }
  std::size_t w2_at(int row) const {
    return b1_at() + h_ + static_cast<std::size_t>(row) * h_;
  }
  std::size_t b2_at() const { return b1_at() + h_ + static_cast<std::size_t>(V_) * h_; }

  std::shared_ptr<Vocab> vocab_;
  int V_, d_, h_;
  std::size_t emb_size_;
  std::vector<double> theta_;
};

}  // namespace cotlab
