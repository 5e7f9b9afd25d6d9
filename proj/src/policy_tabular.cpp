#include "cotlab/policy_tabular.hpp"

#include <algorithm>
#include <cmath>

#include "cotlab/errors.hpp"
#include "cotlab/keys.hpp"
#include "cotlab/rewards.hpp"
#include "cotlab/rng.hpp"

namespace cotlab {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

std::uint64_t TabularPolicy::key_of(const QASample& sample) const {
  return sample_key_hash(sample, *vocab_);
}

double TabularPolicy::gate_logit(std::uint64_t key) const {
  auto it = index_.find(key);
  return it == index_.end() ? 0.0 : flat_[it->second * kParamsPerKey];
}

std::array<double, 4> TabularPolicy::answer_logits(std::uint64_t key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return {0.0, 0.0, 0.0, 0.0};
  const double* base = flat_.data() + it->second * kParamsPerKey + 1;
  return {base[0], base[1], base[2], base[3]};
}

std::size_t TabularPolicy::ensure_key(std::uint64_t key) {
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  std::size_t idx = keys_.size();
  keys_.push_back(key);
  flat_.resize(flat_.size() + kParamsPerKey, 0.0);
  index_.emplace(key, idx);
  return idx;
}

std::vector<double> TabularPolicy::params() const { return flat_; }

void TabularPolicy::set_params(std::span<const double> p) {
  if (p.size() != flat_.size())
    throw ConfigError("tabular parameter vector size mismatch: " + std::to_string(p.size()) +
                      " vs " + std::to_string(flat_.size()));
  flat_.assign(p.begin(), p.end());
}

void TabularPolicy::add_scaled(std::span<const double> grad, double scale) {
  if (grad.size() > flat_.size()) throw ConfigError("gradient longer than parameter vector");
  for (std::size_t i = 0; i < grad.size(); ++i) flat_[i] += scale * grad[i];
}

std::unique_ptr<Policy> TabularPolicy::clone() const {
  auto copy = std::make_unique<TabularPolicy>(vocab_);
  copy->keys_ = keys_;
  copy->flat_ = flat_;
  copy->index_ = index_;
  return copy;
}

void TabularPolicy::load_table(std::vector<std::uint64_t> keys, std::vector<double> flat) {
  if (flat.size() != keys.size() * kParamsPerKey)
    throw ParseError("tabular checkpoint table size mismatch");
  keys_ = std::move(keys);
  flat_ = std::move(flat);
  index_.clear();
  for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
}

std::vector<double> TabularPolicy::option_probs(const QASample& sample, std::uint64_t key,
                                                double temperature) const {
  std::array<double, 4> logits = answer_logits(key);
  std::vector<double> z;
  z.reserve(sample.options.size());
  for (char c : sample.options) z.push_back(logits[c - 'A'] / temperature);
  double zmax = *std::max_element(z.begin(), z.end());
  double total = 0.0;
  for (double& v : z) {
    v = std::exp(v - zmax);
    total += v;
  }
  for (double& v : z) v /= total;
  return z;
}

TabularPolicy::TemplateView TabularPolicy::parse_template(const QASample& sample,
                                                          std::span<const TokenId> response) const {
  ParsedResponse parsed = parse_format(response);
  if (!parsed.well_formed)
    throw UnsupportedError("tabular policy cannot score a non-template response");
  TemplateView view;
  view.think_used = !parsed.think_span.empty();
  if (view.think_used &&
      !std::equal(parsed.think_span.begin(), parsed.think_span.end(), sample.context.begin(),
                  sample.context.end()))
    throw UnsupportedError("tabular policy think span must replay the sample context");
  if (parsed.answer_span.size() != 1 || !Vocab::is_option(parsed.answer_span[0]))
    throw UnsupportedError("tabular policy answer span must be a single option token");
  char letter = Vocab::option_letter(parsed.answer_span[0]);
  auto it = std::find(sample.options.begin(), sample.options.end(), letter);
  if (it == sample.options.end())
    throw UnsupportedError("response answer letter is not among the sample's options");
  view.option_index = static_cast<int>(it - sample.options.begin());
  return view;
}

std::vector<Decision> TabularPolicy::decisions(const QASample& sample,
                                               std::span<const TokenId> response,
                                               double temperature) const {
  if (temperature <= 0.0) throw ConfigError("temperature must be positive");
  TemplateView view = parse_template(sample, response);
  std::uint64_t key = key_of(sample);
  double pg = sigmoid(gate_logit(key) / temperature);
  Decision gate{{1.0 - pg, pg}, view.think_used ? 1 : 0};
  Decision answer{option_probs(sample, key, temperature), view.option_index};
  return {std::move(gate), std::move(answer)};
}

void TabularPolicy::accumulate_grad(const QASample& sample, std::span<const TokenId> response,
                                    const std::vector<std::vector<double>>& dlogits,
                                    std::vector<double>& grad) {
  if (dlogits.size() != 2) throw ConfigError("tabular policy expects 2 decisions");
  std::size_t idx = ensure_key(key_of(sample));
  grad.resize(param_count(), 0.0);
  // Gate is a two-way softmax with the first logit pinned at zero, so the
  // parameter gradient is the second logit's slot.
  grad[idx * kParamsPerKey] += dlogits[0][1];
  for (std::size_t j = 0; j < sample.options.size(); ++j) {
    int slot = sample.options[j] - 'A';
    grad[idx * kParamsPerKey + 1 + slot] += dlogits[1][j];
  }
}

std::vector<TokenId> TabularPolicy::assemble(const QASample& sample, bool think, char letter,
                                             int max_len) const {
  std::vector<TokenId> out;
  out.push_back(Vocab::kThinkOpen);
  if (think) out.insert(out.end(), sample.context.begin(), sample.context.end());
  out.push_back(Vocab::kThinkClose);
  out.push_back(Vocab::kAnswerOpen);
  out.push_back(Vocab::option_id(letter));
  out.push_back(Vocab::kAnswerClose);
  out.push_back(Vocab::kEos);
  if (static_cast<int>(out.size()) > max_len) out.resize(max_len);
  return out;
}

std::vector<TokenId> TabularPolicy::sample_response(const QASample& sample, double temperature,
                                                    int max_len, std::uint64_t seed) const {
  if (temperature <= 0.0) throw ConfigError("temperature must be positive");
  if (max_len < 7) throw ConfigError("max_len must be at least 7");
  Rng rng(seed);
  std::uint64_t key = key_of(sample);
  bool think = rng.bernoulli(sigmoid(gate_logit(key) / temperature));
  std::vector<double> probs = option_probs(sample, key, temperature);
  std::size_t pick = rng.categorical(probs);
  return assemble(sample, think, sample.options[pick], max_len);
}

std::vector<TokenId> TabularPolicy::greedy_response(const QASample& sample, int max_len) const {
  std::uint64_t key = key_of(sample);
  bool think = sigmoid(gate_logit(key)) > 0.5;
  std::vector<double> probs = option_probs(sample, key, 1.0);
  std::size_t best = 0;
  for (std::size_t j = 1; j < probs.size(); ++j)
    if (probs[j] > probs[best]) best = j;
  return assemble(sample, think, sample.options[best], max_len);
}

double TabularPolicy::think_probability(const QASample& sample) const {
  return sigmoid(gate_logit(key_of(sample)));
}

}  // namespace cotlab
