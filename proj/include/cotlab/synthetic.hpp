#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cotlab/sample.hpp"

namespace cotlab {

enum class QuestionKind { Presence, Count, Order };

// Audio-surrogate QA generator. Scenes are event-token sequences; questions
// come in three template families:
//   Presence: "is there <event>"            options yes/no/maybe/silence
//   Count:    "how many <event>"            options: 4 consecutive integers
//   Order:    "which came first <a> or <b>" options: 4 event names
// Presence and Count are answerable from the scene multiset alone; Order
// needs positions, so context-keyed policies can only learn it up to the
// majority arrangement. That is what makes the hard bin non-empty at desk
// scale.
struct GenConfig {
  int n_event_types = 8;
  int scene_len_min = 3;
  int scene_len_max = 12;
  double mix_presence = 0.3;
  double mix_count = 0.4;
  double mix_order = 0.3;
  double difficulty_knob = 0.0;  // scales scene length and palette size
  std::uint64_t seed = 0;

  void validate() const;
};

// n samples, deterministic in (config, n): sample i depends only on
// derive(seed, i), so parallel generation by index matches serial output.
// Interns the full lexicon into vocab up front.
std::vector<QASample> generate(const GenConfig& config, int n, Vocab& vocab,
                               std::string_view id_prefix = "q");

// Recomputes the correct option directly from the scene by scanning or
// counting. Throws UnsupportedError for samples not shaped like generator
// output.
char oracle_answer(const QASample& s, const Vocab& vocab);

QuestionKind classify_question(const QASample& s, const Vocab& vocab);

}  // namespace cotlab
