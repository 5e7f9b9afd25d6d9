#pragma once

#include <cstdint>
#include <span>

#include "cotlab/sample.hpp"
#include "cotlab/vocab.hpp"

namespace cotlab {

// Order-invariant hash of (context multiset, question sequence), computed
// over word strings so it is stable across vocabularies built in different
// orders. Used as the tabular policy's context key and by the generator to
// derive content-addressed option layouts (same scene and question always
// get the same options and gold letter).
std::uint64_t key_hash(std::span<const TokenId> context, std::span<const TokenId> question,
                       const Vocab& vocab);

inline std::uint64_t sample_key_hash(const QASample& s, const Vocab& vocab) {
  return key_hash(s.context, s.question, vocab);
}

}  // namespace cotlab
