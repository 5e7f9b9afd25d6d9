#include "cotlab/keys.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cotlab {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  h ^= 0x1F;  // word separator
  h *= kFnvPrime;
}

}  // namespace

std::uint64_t key_hash(std::span<const TokenId> context, std::span<const TokenId> question,
                       const Vocab& vocab) {
  std::vector<std::string> ctx_words;
  ctx_words.reserve(context.size());
  for (TokenId t : context) ctx_words.push_back(vocab.token_string(t));
  std::sort(ctx_words.begin(), ctx_words.end());

  std::uint64_t h = kFnvOffset;
  for (const auto& w : ctx_words) fnv_mix(h, w);
  h ^= 0x1E;  // section separator
  h *= kFnvPrime;
  for (TokenId t : question) fnv_mix(h, vocab.token_string(t));
  return h;
}

}  // namespace cotlab
