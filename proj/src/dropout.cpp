#include "cotlab/dropout.hpp"

#include <charconv>

#include "cotlab/errors.hpp"
#include "cotlab/rng.hpp"

namespace cotlab {

DropoutPolicy DropoutPolicy::parse(std::string_view spec) {
  DropoutPolicy out;
  if (spec == "guided") {
    out.kind = Kind::Guided;
  } else if (spec == "none") {
    out.kind = Kind::None;
  } else if (spec == "all") {
    out.kind = Kind::All;
  } else if (spec.rfind("random:", 0) == 0) {
    out.kind = Kind::Random;
    std::string_view num = spec.substr(7);
    double p = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc() || ptr != num.data() + num.size())
      throw ConfigError("bad dropout probability in '" + std::string(spec) + "'");
    out.p = p;
  } else if (spec == "random") {
    out.kind = Kind::Random;
  } else {
    throw ConfigError("unknown dropout policy '" + std::string(spec) +
                      "' (expected guided|random:<p>|none|all)");
  }
  out.validate();
  return out;
}

std::string DropoutPolicy::to_string() const {
  switch (kind) {
    case Kind::Guided: return "guided";
    case Kind::None: return "none";
    case Kind::All: return "all";
    default: return "random:" + std::to_string(p);
  }
}

void DropoutPolicy::validate() const {
  if (kind == Kind::Random && !(p >= 0.0 && p <= 1.0))
    throw ConfigError("random dropout probability must lie in [0, 1]");
}

std::vector<QASample> apply_guided(std::vector<QASample> samples, const OutcomeLog& log) {
  for (QASample& s : samples) {
    if (log.at(s.id).pretrained_correct) s.cot.reset();
  }
  return samples;
}

std::vector<QASample> apply_random(std::vector<QASample> samples, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("dropout probability must lie in [0, 1]");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Rng rng(Rng::derive(seed, {i}));
    if (rng.bernoulli(p)) samples[i].cot.reset();
  }
  return samples;
}

std::vector<QASample> apply_dropout(std::vector<QASample> samples, const DropoutPolicy& policy,
                                    const OutcomeLog* log, std::uint64_t seed) {
  switch (policy.kind) {
    case DropoutPolicy::Kind::Guided:
      if (log == nullptr) throw ConfigError("guided dropout requires an outcome log");
      return apply_guided(std::move(samples), *log);
    case DropoutPolicy::Kind::Random:
      return apply_random(std::move(samples), policy.p, seed);
    case DropoutPolicy::Kind::None:
      return samples;
    default:
      for (QASample& s : samples) s.cot.reset();
      return samples;
  }
}

std::vector<TokenId> render_target(const QASample& s, bool empty_think_tags) {
  std::vector<TokenId> out;
  bool has_cot = s.cot && !s.cot->empty();
  out.reserve((has_cot ? s.cot->size() : 0) + 7);
  if (has_cot || empty_think_tags) {
    out.push_back(Vocab::kThinkOpen);
    if (has_cot) out.insert(out.end(), s.cot->begin(), s.cot->end());
    out.push_back(Vocab::kThinkClose);
  }
  out.push_back(Vocab::kAnswerOpen);
  out.push_back(s.gold_token());
  out.push_back(Vocab::kAnswerClose);
  out.push_back(Vocab::kEos);
  return out;
}

}  // namespace cotlab
