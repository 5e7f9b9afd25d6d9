#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cotlab/sample.hpp"

namespace cotlab {

// Sample JSONL schema, one object per line:
//   {"id": str, "context": [str], "question": [str], "options": ["A".."D"],
//    "option_texts": {letter: str}, "gold": str, "cot": [str]?, "modality_tag": str?}
// Outcome JSONL schema:
//   {"id": str, "pretrained_correct": bool, "sft_correct": bool}

nlohmann::json sample_to_json(const QASample& s, const Vocab& vocab);
QASample sample_from_json(const nlohmann::json& j, Vocab& vocab, long line_no);

// Returns samples in file order; interns unseen words in first-seen order.
// Malformed line -> ParseError with line number; invalid sample or duplicate
// id -> ValidationError naming the id.
std::vector<QASample> load_samples(const std::filesystem::path& path, Vocab& vocab);
void save_samples(std::span<const QASample> samples, const Vocab& vocab,
                  const std::filesystem::path& path);

OutcomeLog load_outcomes(const std::filesystem::path& path);
void save_outcomes(const OutcomeLog& log, const std::filesystem::path& path);

// Content equality irrespective of token id assignment (samples loaded
// through different vocabularies compare by their words).
bool samples_equivalent(const QASample& a, const Vocab& va, const QASample& b, const Vocab& vb);

}  // namespace cotlab
