#include "cotlab/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "cotlab/errors.hpp"
#include "cotlab/keys.hpp"
#include "cotlab/rng.hpp"

namespace cotlab {

namespace {

const char* kEventWords[] = {"dog",  "car",   "bird", "rain",  "horn", "siren", "drum", "bell",
                             "wind", "glass", "door", "step",  "clock", "cat",  "train", "wave"};
constexpr int kNamedEvents = 16;

std::string event_word(int type) {
  if (type < kNamedEvents) return kEventWords[type];
  return "evt" + std::to_string(type);
}

struct Lexicon {
  std::vector<TokenId> events;
  TokenId w_is, w_there, w_how, w_many, w_which, w_came, w_first, w_or;
  TokenId w_event, w_total, w_answer, w_yes, w_no, w_at;
  std::vector<TokenId> numbers;  // "0".."<scene_len_max>"

  Lexicon(const GenConfig& cfg, Vocab& vocab) {
    events.reserve(cfg.n_event_types);
    for (int t = 0; t < cfg.n_event_types; ++t) events.push_back(vocab.intern(event_word(t)));
    w_is = vocab.intern("is");
    w_there = vocab.intern("there");
    w_how = vocab.intern("how");
    w_many = vocab.intern("many");
    w_which = vocab.intern("which");
    w_came = vocab.intern("came");
    w_first = vocab.intern("first");
    w_or = vocab.intern("or");
    w_event = vocab.intern("event");
    w_total = vocab.intern("total");
    w_answer = vocab.intern("answer");
    w_yes = vocab.intern("yes");
    w_no = vocab.intern("no");
    w_at = vocab.intern("at");
    numbers.reserve(cfg.scene_len_max + 1);
    for (int i = 0; i <= cfg.scene_len_max; ++i) numbers.push_back(vocab.intern(std::to_string(i)));
  }
};

// Assigns meaning strings to letters with a content-addressed shuffle, so the
// same (scene multiset, question) always yields the same layout and the gold
// letter is uniform across keys.
void assign_options(QASample& s, const std::vector<std::string>& texts,
                    const std::string& gold_text, std::uint64_t layout_key) {
  Rng layout_rng(Rng::derive(layout_key, {0xA11A}));
  std::vector<int> perm(texts.size());
  std::iota(perm.begin(), perm.end(), 0);
  layout_rng.shuffle(perm);
  s.options.clear();
  s.option_texts.clear();
  for (std::size_t slot = 0; slot < perm.size(); ++slot) {
    char letter = static_cast<char>('A' + slot);
    s.options.push_back(letter);
    s.option_texts[letter] = texts[perm[slot]];
    if (texts[perm[slot]] == gold_text) s.gold = letter;
  }
}

std::vector<int> present_types(const std::vector<int>& scene, int n_types) {
  std::vector<bool> seen(n_types, false);
  for (int t : scene) seen[t] = true;
  std::vector<int> out;
  for (int t = 0; t < n_types; ++t)
    if (seen[t]) out.push_back(t);
  return out;
}

QASample make_sample(const GenConfig& cfg, const Lexicon& lex, Vocab& vocab, int index,
                     std::string_view id_prefix) {
  Rng rng(Rng::derive(cfg.seed, {static_cast<std::uint64_t>(index)}));

  // Scene: palette of a few event types, length scaled by the knob.
  int palette_size = 2 + static_cast<int>(std::lround(cfg.difficulty_knob * (cfg.n_event_types - 2)));
  palette_size = std::clamp(palette_size, 2, cfg.n_event_types);
  int span = cfg.scene_len_max - cfg.scene_len_min;
  int len_hi = cfg.scene_len_min + static_cast<int>(std::lround(cfg.difficulty_knob * span));
  int len = static_cast<int>(rng.range(cfg.scene_len_min, len_hi));

  std::vector<int> all_types(cfg.n_event_types);
  std::iota(all_types.begin(), all_types.end(), 0);
  rng.shuffle(all_types);
  std::vector<int> palette(all_types.begin(), all_types.begin() + palette_size);

  std::vector<int> scene(len);
  for (int i = 0; i < len; ++i) scene[i] = palette[rng.below(palette.size())];

  QASample s;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*s%06d", static_cast<int>(id_prefix.size()),
                id_prefix.data(), index);
  s.id = buf;
  s.context.reserve(len);
  for (int t : scene) s.context.push_back(lex.events[t]);

  std::vector<int> present = present_types(scene, cfg.n_event_types);
  std::vector<int> absent;
  for (int t = 0; t < cfg.n_event_types; ++t)
    if (!std::binary_search(present.begin(), present.end(), t)) absent.push_back(t);

  double mix[3] = {cfg.mix_presence, cfg.mix_count, cfg.mix_order};
  auto kind = static_cast<QuestionKind>(rng.categorical(mix));

  auto num_word = [&](int i) { return lex.numbers[i]; };

  switch (kind) {
    case QuestionKind::Presence: {
      bool ask_present = absent.empty() ? true : rng.bernoulli(0.5);
      int target = ask_present ? present[rng.below(present.size())]
                               : absent[rng.below(absent.size())];
      s.question = {lex.w_is, lex.w_there, lex.events[target]};
      std::vector<TokenId> cot;
      if (ask_present) {
        int pos = 0;
        while (scene[pos] != target) ++pos;
        cot = {lex.w_event, num_word(pos + 1), lex.w_is, lex.events[target], lex.w_answer,
               lex.w_yes};
      } else {
        cot = {lex.w_no, lex.events[target], lex.w_answer, lex.w_no};
      }
      s.cot = std::move(cot);
      assign_options(s, {"yes", "no", "maybe", "silence"}, ask_present ? "yes" : "no",
                     key_hash(s.context, s.question, vocab));
      break;
    }
    case QuestionKind::Count: {
      int target = present[rng.below(present.size())];
      int count = static_cast<int>(std::count(scene.begin(), scene.end(), target));
      s.question = {lex.w_how, lex.w_many, lex.events[target]};
      std::vector<TokenId> cot;
      for (int i = 0; i < len; ++i) {
        if (scene[i] == target) {
          cot.insert(cot.end(), {lex.w_event, num_word(i + 1), lex.w_is, lex.events[target]});
        }
      }
      cot.insert(cot.end(), {lex.w_total, lex.events[target], num_word(count)});
      s.cot = std::move(cot);
      // Window of four consecutive integers containing the count; the offset
      // is content-addressed so a key always sees the same window.
      std::uint64_t lk = key_hash(s.context, s.question, vocab);
      Rng window_rng(Rng::derive(lk, {0xC0DE}));
      int offset = static_cast<int>(window_rng.below(4));
      int lo = std::max(0, count - offset);
      std::vector<std::string> texts;
      for (int v = lo; v < lo + 4; ++v) texts.push_back(std::to_string(v));
      s.options = {'A', 'B', 'C', 'D'};
      s.option_texts.clear();
      for (int slot = 0; slot < 4; ++slot) s.option_texts[static_cast<char>('A' + slot)] = texts[slot];
      s.gold = static_cast<char>('A' + (count - lo));
      break;
    }
    case QuestionKind::Order: {
      int a = present[rng.below(present.size())];
      int b;
      bool b_present = present.size() >= 2 && (absent.empty() || rng.bernoulli(0.5));
      if (b_present) {
        do {
          b = present[rng.below(present.size())];
        } while (b == a);
      } else {
        b = absent[rng.below(absent.size())];
      }
      if (rng.bernoulli(0.5)) std::swap(a, b);  // candidate order in the question
      s.question = {lex.w_which, lex.w_came, lex.w_first, lex.events[a], lex.w_or, lex.events[b]};

      auto first_pos = [&](int t) {
        for (int i = 0; i < len; ++i)
          if (scene[i] == t) return i;
        return -1;
      };
      int pa = first_pos(a), pb = first_pos(b);
      int winner = (pb < 0 || (pa >= 0 && pa < pb)) ? a : b;

      std::vector<TokenId> cot;
      auto first_clause = [&](int t, int p) {
        if (p >= 0)
          cot.insert(cot.end(), {lex.w_first, lex.events[t], lex.w_at, num_word(p + 1)});
        else
          cot.insert(cot.end(), {lex.w_no, lex.events[t]});
      };
      first_clause(a, pa);
      first_clause(b, pb);
      cot.insert(cot.end(), {lex.w_answer, lex.events[winner]});
      s.cot = std::move(cot);

      // Distractor texts: two event names distinct from both candidates.
      std::vector<std::string> texts = {vocab.token_string(lex.events[a]),
                                        vocab.token_string(lex.events[b])};
      for (int t : all_types) {
        if (t != a && t != b && texts.size() < 4) texts.push_back(vocab.token_string(lex.events[t]));
      }
      assign_options(s, texts, vocab.token_string(lex.events[winner]),
                     key_hash(s.context, s.question, vocab));
      break;
    }
  }
  return s;
}

}  // namespace

void GenConfig::validate() const {
  if (n_event_types < 4) throw ConfigError("n_event_types must be at least 4");
  if (scene_len_min < 1) throw ConfigError("scene_len_min must be at least 1");
  if (scene_len_max < scene_len_min) throw ConfigError("scene length range is empty");
  if (mix_presence < 0 || mix_count < 0 || mix_order < 0)
    throw ConfigError("question mix weights must be non-negative");
  if (std::abs(mix_presence + mix_count + mix_order - 1.0) > 1e-9)
    throw ConfigError("question mix weights must sum to 1");
  if (difficulty_knob < 0.0 || difficulty_knob > 1.0)
    throw ConfigError("difficulty_knob must lie in [0, 1]");
}

std::vector<QASample> generate(const GenConfig& config, int n, Vocab& vocab,
                               std::string_view id_prefix) {
  config.validate();
  if (n < 0) throw ConfigError("sample count must be non-negative");
  Lexicon lex(config, vocab);
  std::vector<QASample> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(make_sample(config, lex, vocab, i, id_prefix));
  return out;
}

QuestionKind classify_question(const QASample& s, const Vocab& vocab) {
  auto word_is = [&](std::size_t i, const char* w) {
    return i < s.question.size() && vocab.is_content(s.question[i]) &&
           vocab.word(s.question[i]) == w;
  };
  if (s.question.size() == 3 && word_is(0, "is") && word_is(1, "there"))
    return QuestionKind::Presence;
  if (s.question.size() == 3 && word_is(0, "how") && word_is(1, "many")) return QuestionKind::Count;
  if (s.question.size() == 6 && word_is(0, "which") && word_is(1, "came") && word_is(2, "first") &&
      word_is(4, "or"))
    return QuestionKind::Order;
  throw UnsupportedError("sample '" + s.id + "' does not match a generator question template");
}

char oracle_answer(const QASample& s, const Vocab& vocab) {
  QuestionKind kind = classify_question(s, vocab);
  auto option_with_text = [&](const std::string& text) {
    for (const auto& [letter, t] : s.option_texts) {
      if (t == text) return letter;
    }
    throw UnsupportedError("sample '" + s.id + "': no option with text '" + text + "'");
  };
  auto count_of = [&](TokenId t) {
    return std::count(s.context.begin(), s.context.end(), t);
  };

  switch (kind) {
    case QuestionKind::Presence: {
      TokenId target = s.question[2];
      return option_with_text(count_of(target) > 0 ? "yes" : "no");
    }
    case QuestionKind::Count: {
      TokenId target = s.question[2];
      return option_with_text(std::to_string(count_of(target)));
    }
    default: {
      TokenId a = s.question[3], b = s.question[5];
      auto first_pos = [&](TokenId t) -> int {
        for (std::size_t i = 0; i < s.context.size(); ++i)
          if (s.context[i] == t) return static_cast<int>(i);
        return -1;
      };
      int pa = first_pos(a), pb = first_pos(b);
      if (pa < 0 && pb < 0)
        throw UnsupportedError("sample '" + s.id + "': neither order candidate occurs");
      TokenId winner = (pb < 0 || (pa >= 0 && pa < pb)) ? a : b;
      return option_with_text(vocab.token_string(winner));
    }
  }
}

}  // namespace cotlab
