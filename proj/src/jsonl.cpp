#include "cotlab/jsonl.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cotlab/errors.hpp"

namespace cotlab {

using nlohmann::json;

namespace {

std::vector<std::string> detokenize(std::span<const TokenId> tokens, const Vocab& vocab) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (TokenId t : tokens) out.push_back(vocab.token_string(t));
  return out;
}

std::vector<TokenId> tokenize_words(const json& arr, Vocab& vocab, const char* field,
                                    long line_no) {
  if (!arr.is_array()) throw ParseError(std::string(field) + " must be an array", line_no);
  std::vector<TokenId> out;
  out.reserve(arr.size());
  for (const auto& w : arr) {
    if (!w.is_string()) throw ParseError(std::string(field) + " entries must be strings", line_no);
    out.push_back(vocab.token_from_string(w.get<std::string>()));
  }
  return out;
}

char parse_letter(const json& j, const char* field, long line_no) {
  if (!j.is_string() || j.get<std::string>().size() != 1)
    throw ParseError(std::string(field) + " must be a single-letter string", line_no);
  return j.get<std::string>()[0];
}

}  // namespace

json sample_to_json(const QASample& s, const Vocab& vocab) {
  json j;
  j["id"] = s.id;
  j["context"] = detokenize(s.context, vocab);
  j["question"] = detokenize(s.question, vocab);
  json opts = json::array();
  for (char c : s.options) opts.push_back(std::string(1, c));
  j["options"] = opts;
  json texts = json::object();
  for (const auto& [letter, text] : s.option_texts) texts[std::string(1, letter)] = text;
  j["option_texts"] = texts;
  j["gold"] = std::string(1, s.gold);
  if (s.cot) j["cot"] = detokenize(*s.cot, vocab);
  if (!s.modality_tag.empty()) j["modality_tag"] = s.modality_tag;
  return j;
}

QASample sample_from_json(const json& j, Vocab& vocab, long line_no) {
  if (!j.is_object()) throw ParseError("expected a JSON object", line_no);
  for (const char* req : {"id", "context", "question", "options", "gold"}) {
    if (!j.contains(req)) throw ParseError(std::string("missing field '") + req + "'", line_no);
  }
  QASample s;
  if (!j["id"].is_string()) throw ParseError("id must be a string", line_no);
  s.id = j["id"].get<std::string>();
  s.context = tokenize_words(j["context"], vocab, "context", line_no);
  s.question = tokenize_words(j["question"], vocab, "question", line_no);
  if (!j["options"].is_array()) throw ParseError("options must be an array", line_no);
  for (const auto& o : j["options"]) s.options.push_back(parse_letter(o, "options", line_no));
  if (j.contains("option_texts")) {
    if (!j["option_texts"].is_object()) throw ParseError("option_texts must be an object", line_no);
    for (const auto& [k, v] : j["option_texts"].items()) {
      if (k.size() != 1 || !v.is_string())
        throw ParseError("option_texts must map letters to strings", line_no);
      s.option_texts[k[0]] = v.get<std::string>();
    }
  }
  s.gold = parse_letter(j["gold"], "gold", line_no);
  if (j.contains("cot") && !j["cot"].is_null())
    s.cot = tokenize_words(j["cot"], vocab, "cot", line_no);
  if (j.contains("modality_tag")) {
    if (!j["modality_tag"].is_string()) throw ParseError("modality_tag must be a string", line_no);
    s.modality_tag = j["modality_tag"].get<std::string>();
  }
  validate_sample(s, vocab);
  return s;
}

std::vector<QASample> load_samples(const std::filesystem::path& path, Vocab& vocab) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<QASample> samples;
  std::set<std::string> seen;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    QASample s = sample_from_json(j, vocab, line_no);
    if (!seen.insert(s.id).second)
      throw ValidationError("duplicate sample id '" + s.id + "' at line " +
                            std::to_string(line_no));
    samples.push_back(std::move(s));
  }
  return samples;
}

void save_samples(std::span<const QASample> samples, const Vocab& vocab,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  for (const QASample& s : samples) out << sample_to_json(s, vocab).dump() << '\n';
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

OutcomeLog load_outcomes(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  OutcomeLog log;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string())
      throw ParseError("outcome line must be an object with a string id", line_no);
    std::string id = j["id"].get<std::string>();
    Outcome o;
    for (auto [field, slot] : {std::pair<const char*, bool*>{"pretrained_correct", &o.pretrained_correct},
                               std::pair<const char*, bool*>{"sft_correct", &o.sft_correct}}) {
      if (!j.contains(field))
        throw ParseError("outcome for '" + id + "' missing field '" + field + "'", line_no);
      if (!j[field].is_boolean())
        throw ParseError("outcome field '" + std::string(field) + "' for '" + id +
                             "' must be a boolean",
                         line_no);
      *slot = j[field].get<bool>();
    }
    if (!log.entries.emplace(id, o).second)
      throw ValidationError("duplicate outcome id '" + id + "' at line " +
                            std::to_string(line_no));
  }
  return log;
}

void save_outcomes(const OutcomeLog& log, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  for (const auto& [id, o] : log.entries) {
    json j;
    j["id"] = id;
    j["pretrained_correct"] = o.pretrained_correct;
    j["sft_correct"] = o.sft_correct;
    out << j.dump() << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

bool samples_equivalent(const QASample& a, const Vocab& va, const QASample& b, const Vocab& vb) {
  return sample_to_json(a, va) == sample_to_json(b, vb);
}

}  // namespace cotlab
