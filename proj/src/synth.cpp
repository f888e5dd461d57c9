#include "abbrev/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "abbrev/candgen.hpp"
#include "abbrev/rng.hpp"
#include "abbrev/utf8.hpp"

namespace abbrev {

const std::vector<std::string>& synth_vocabulary() {
  static const std::vector<std::string> words = {
      "пациент",     "болезнь",     "лечение",      "диагноз",      "терапия",
      "синдром",     "давление",    "сердце",       "сосуды",       "кровь",
      "анализ",      "уровень",     "глюкоза",      "инсулин",      "печень",
      "почки",       "легкие",      "желудок",      "кишечник",     "инфекция",
      "вирус",       "бактерия",    "препарат",     "доза",         "таблетка",
      "инъекция",    "операция",    "хирург",       "клиника",      "отделение",
      "осмотр",      "жалобы",      "симптом",      "признак",      "температура",
      "пульс",       "дыхание",     "боль",         "голова",       "спина",
      "сустав",      "мышца",       "кость",        "ткань",        "клетка",
      "орган",       "система",     "функция",      "норма",        "отклонение",
      "результат",   "исследование","процедура",    "курс",         "период",
      "состояние",   "улучшение",   "ухудшение",    "контроль",     "наблюдение",
      "выписка",     "рецепт",      "назначение",   "схема",        "режим",
      "диета",       "питание",     "вес",          "рост",         "возраст",
      "группа",      "риск",        "фактор",       "причина",      "следствие",
      "осложнение",  "профилактика","вакцина",      "иммунитет",    "аллергия",
      "реакция",     "проба",       "тест",         "показатель",   "динамика",
      "статистика",  "метод",       "подход",       "оценка",       "степень",
      "стадия",      "форма",       "тип",          "вид",          "случай",
      "практика",    "опыт",        "помощь",       "служба",       "участок"};
  return words;
}

namespace {

char32_t upper_cp(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  if (cp >= 0x0430 && cp <= 0x044F) return cp - 0x20;  // а..я
  if (cp == 0x0451) return 0x0401;                     // ё
  return cp;
}

std::string capitalize(const std::string& word) {
  const std::vector<char32_t> cps = utf8::decode(word);
  std::string out;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    utf8::append(out, i == 0 ? upper_cp(cps[i]) : cps[i]);
  }
  return out;
}

// Picks definition words with pairwise-distinct initials and returns the
// uppercase abbreviation built from them; resamples until the candidate
// rules accept the pair, so planted gold pairs always survive generation.
struct PlantedPair {
  std::vector<std::string> definition;
  std::string abbrev;
};

PlantedPair plan_pair(Rng& rng) {
  const auto& vocab = synth_vocabulary();
  const CandidateRuleConfig rules;
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int def_len = 2 + static_cast<int>(rng.below(2));  // 2..3 words
    std::vector<std::string> words;
    std::vector<char32_t> initials;
    bool ok = true;
    for (int k = 0; k < def_len && ok; ++k) {
      const std::string& w = vocab[rng.below(vocab.size())];
      const char32_t initial = utf8::decode(w).front();
      if (std::find(initials.begin(), initials.end(), initial) != initials.end()) {
        ok = false;
        break;
      }
      words.push_back(w);
      initials.push_back(initial);
    }
    if (!ok) continue;

    std::string abbrev;
    for (char32_t cp : initials) utf8::append(abbrev, upper_cp(cp));

    std::vector<Token> span;
    for (const auto& w : words) span.push_back(Token{w, 0, 0, false});
    if (!passes_rules(abbrev, span, rules)) continue;
    return {std::move(words), std::move(abbrev)};
  }
  throw std::runtime_error("could not plan a rule-passing synthetic pair");
}

std::string decoy_token(Rng& rng) {
  char buf[32];
  switch (rng.below(3)) {
    case 0:
      std::snprintf(buf, sizeof buf, "%d", 1990 + static_cast<int>(rng.below(40)));
      break;
    case 1:
      std::snprintf(buf, sizeof buf, "%d/%d", 90 + static_cast<int>(rng.below(90)),
                    50 + static_cast<int>(rng.below(60)));
      break;
    default:
      std::snprintf(buf, sizeof buf, "%d", 1 + static_cast<int>(rng.below(200)));
      break;
  }
  return buf;
}

}  // namespace

Corpus synth_corpus(const SynthConfig& cfg) {
  if (cfg.target_tokens < 1) throw std::invalid_argument("target_tokens must be >= 1");
  if (cfg.abbrev_ratio < 0.0 || cfg.abbrev_ratio >= 0.3) {
    throw std::invalid_argument("abbrev_ratio must lie in [0, 0.3)");
  }
  Rng rng(cfg.seed);
  const auto& vocab = synth_vocabulary();

  // Probability of starting an abbreviation event at a token slot, solved
  // from the average event footprint (~3.6 tokens per planted abbreviation).
  const double event_prob =
      cfg.abbrev_ratio > 0.0 ? cfg.abbrev_ratio / (1.0 - cfg.abbrev_ratio * 2.6) : 0.0;

  Corpus corpus;
  int total_tokens = 0;
  int doc_no = 0;
  while (total_tokens < cfg.target_tokens) {
    Document doc;
    char id[32];
    std::snprintf(id, sizeof id, "synth-%04d", doc_no++);
    doc.doc_id = id;

    int sent = 0;
    while (static_cast<int>(doc.tokens.size()) < cfg.tokens_per_doc) {
      const int sent_len = 6 + static_cast<int>(rng.below(9));  // 6..14 slots
      const std::size_t sent_start = doc.tokens.size();
      for (int slot = 0; slot < sent_len; ++slot) {
        if (rng.chance(event_prob)) {
          if (rng.chance(cfg.missing_def_prob)) {
            // Abbreviation with no definition anywhere nearby.
            PlantedPair plan = plan_pair(rng);
            const int depth = rng.chance(cfg.paren_prob) ? 1 : 0;
            doc.tokens.push_back(Token{plan.abbrev, depth, sent, true});
            continue;
          }
          PlantedPair plan = plan_pair(rng);
          const int def_start = static_cast<int>(doc.tokens.size());
          for (const auto& w : plan.definition) {
            doc.tokens.push_back(Token{w, 0, sent, false});
          }
          const int def_end = static_cast<int>(doc.tokens.size()) - 1;
          if (rng.chance(cfg.jitter_prob)) {
            const int pad = 1 + static_cast<int>(rng.below(2));
            for (int k = 0; k < pad; ++k) {
              doc.tokens.push_back(Token{vocab[rng.below(vocab.size())], 0, sent, false});
            }
          }
          const int depth = rng.chance(cfg.paren_prob) ? 1 : 0;
          const int a = static_cast<int>(doc.tokens.size());
          doc.tokens.push_back(Token{plan.abbrev, depth, sent, true});
          doc.gold_pairs.push_back(GoldPair{a, def_start, def_end});
        } else if (rng.chance(cfg.decoy_prob)) {
          doc.tokens.push_back(Token{decoy_token(rng), 0, sent, false});
        } else {
          doc.tokens.push_back(Token{vocab[rng.below(vocab.size())], 0, sent, false});
        }
      }
      // Capitalize the sentence-initial token the way prose would.
      if (doc.tokens.size() > sent_start) {
        Token& first = doc.tokens[sent_start];
        if (!first.is_abbrev) first.text = capitalize(first.text);
        ++sent;
      }
    }
    total_tokens += static_cast<int>(doc.tokens.size());
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

void make_separable_dataset(int n, std::uint64_t seed, ml::Matrix* x, ml::Labels* y) {
  if (n < 2) throw std::invalid_argument("dataset needs at least 2 points");
  Rng rng(seed);
  x->clear();
  y->clear();
  for (int i = 0; i < n; ++i) {
    const int label = i % 2;
    const double center = label == 1 ? 2.0 : -2.0;
    x->push_back({center + rng.real01() - 0.5, 2.0 * rng.real01() - 1.0});
    y->push_back(label);
  }
}

void make_xor_dataset(int n, std::uint64_t seed, ml::Matrix* x, ml::Labels* y) {
  if (n < 4) throw std::invalid_argument("dataset needs at least 4 points");
  Rng rng(seed);
  x->clear();
  y->clear();
  for (int i = 0; i < n; ++i) {
    const int corner = static_cast<int>(rng.below(4));
    const double cx = corner & 1 ? 1.0 : 0.0;
    const double cy = corner & 2 ? 1.0 : 0.0;
    x->push_back({cx + (rng.real01() - 0.5) * 0.1, cy + (rng.real01() - 0.5) * 0.1});
    y->push_back(static_cast<int>(cx != cy));
  }
}

}  // namespace abbrev
