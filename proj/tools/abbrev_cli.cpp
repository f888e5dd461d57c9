// Command-line front end wiring the pipeline together: tokenization,
// detector/matcher training, candidate generation, end-to-end identification,
// evaluation, hyperparameter sweeps, and synthetic corpus generation.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "abbrev/candgen.hpp"
#include "abbrev/corpus.hpp"
#include "abbrev/detect.hpp"
#include "abbrev/evalx.hpp"
#include "abbrev/identify.hpp"
#include "abbrev/logging.hpp"
#include "abbrev/matchfeat.hpp"
#include "abbrev/ml.hpp"
#include "abbrev/rng.hpp"
#include "abbrev/runconfig.hpp"
#include "abbrev/synth.hpp"
#include "abbrev/textprep.hpp"
#include "json.hpp"

namespace {

using namespace abbrev;

// Writes either to a file or to stdout when no path is given.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

// First line of every JSON Lines output: the effective configuration, so any
// artifact documents the run that produced it.  Loaders skip this line.
void write_config_header(std::ostream& out, const RunConfig& cfg) {
  out << nlohmann::json{{"_config", cfg.to_json()}}.dump() << '\n';
}

TokenizerConfig tokenizer_config(const RunConfig& cfg) {
  TokenizerConfig tok = TokenizerConfig::defaults();
  if (!cfg.stopwords.empty()) tok.stopwords = load_stopwords(cfg.stopwords);
  return tok;
}

Dictionary load_dict_opt(const std::string& path) {
  return path.empty() ? Dictionary{} : load_dictionary(path);
}

std::unique_ptr<EmbeddingProvider> make_provider(const RunConfig& cfg) {
  if (cfg.embeddings.empty()) return std::make_unique<HashNgramEmbedder>();
  return std::make_unique<TableEmbedder>(TableEmbedder::load(cfg.embeddings));
}

DetectorConfig detector_config(const RunConfig& cfg) {
  DetectorConfig dc;
  dc.members = cfg.members;
  dc.train = cfg.train_config();
  dc.threshold = cfg.threshold;
  dc.class_weight = cfg.class_weight;
  return dc;
}

void print_importance(const char* title, const std::vector<double>& values,
                      const std::vector<std::string>& names) {
  std::printf("\n%s\n", title);
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::printf("  %-22s %.4f\n", names[i].c_str(), values[i]);
  }
}

void check_split_unit(const RunConfig& cfg) {
  if (cfg.split_unit != "document" && cfg.split_unit != "token") {
    throw std::runtime_error("split_unit must be 'document' or 'token'");
  }
}

// Token-level 4:1 split for stage-1 work: detection features depend on the
// token alone, so tokens can be partitioned directly.  Gold definition spans
// cannot survive such a partition, which is why stage-2 commands refuse it.
std::pair<Corpus, Corpus> split_corpus_tokens(const Corpus& corpus, double ratio,
                                              std::uint64_t seed) {
  if (ratio <= 0.0 || ratio >= 1.0) {
    throw std::invalid_argument("split ratio must be in (0, 1)");
  }
  std::vector<Token> all;
  for (const Document& doc : corpus.documents) {
    all.insert(all.end(), doc.tokens.begin(), doc.tokens.end());
  }
  const std::size_t n = all.size();
  if (n < 2) throw std::invalid_argument("cannot split a corpus with fewer than 2 tokens");
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);
  auto n_train = static_cast<std::size_t>(std::lround(ratio * static_cast<double>(n)));
  n_train = std::clamp<std::size_t>(n_train, 1, n - 1);
  std::vector<bool> in_train(n, false);
  for (std::size_t i = 0; i < n_train; ++i) in_train[order[i]] = true;

  Document train_doc, test_doc;
  train_doc.doc_id = "train-tokens";
  test_doc.doc_id = "test-tokens";
  for (std::size_t i = 0; i < n; ++i) {
    (in_train[i] ? train_doc : test_doc).tokens.push_back(std::move(all[i]));
  }
  return {Corpus{{std::move(train_doc)}}, Corpus{{std::move(test_doc)}}};
}

std::pair<Corpus, Corpus> split_for_stage1(const Corpus& corpus, const RunConfig& cfg) {
  check_split_unit(cfg);
  if (cfg.split_unit == "token") {
    return split_corpus_tokens(corpus, cfg.split_ratio, cfg.seed);
  }
  return split_corpus(corpus, cfg.split_ratio, cfg.seed);
}

int run_tokenize(const RunConfig& cfg) {
  std::ifstream in(cfg.corpus);
  if (!in) throw std::runtime_error("cannot open input text: " + cfg.corpus);
  const TokenizerConfig tok = tokenizer_config(cfg);

  OutputTarget target(cfg.out);
  write_config_header(target.stream(), cfg);
  std::string line;
  int doc_no = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Document doc;
    doc.tokens = tokenize(line, tok);
    if (doc.tokens.empty()) continue;
    char id[32];
    std::snprintf(id, sizeof id, "doc-%04d", doc_no++);
    doc.doc_id = id;
    target.stream() << document_to_json(doc).dump() << '\n';
  }
  return 0;
}

int run_train_detector(const RunConfig& cfg) {
  const Corpus corpus = load_corpus(cfg.corpus);
  const TokenizerConfig tok = tokenizer_config(cfg);
  const Dictionary dict = load_dict_opt(cfg.dict);
  const auto [train, test] = split_for_stage1(corpus, cfg);

  const DetectorModel model = train_detector(train, dict, detector_config(cfg), tok);
  if (!cfg.model_out.empty()) save_detector(model, cfg.model_out);

  if (test.documents.empty()) {
    log::warn("held-out split is empty; skipping evaluation");
  } else {
    const MetricsReport report = evaluate_detection(model, test, dict, tok);
    std::cout << report.to_table();
  }
  const std::vector<double> importance = detector_importance(model);
  print_importance("feature importance (detection):", importance,
                   {kDetectionFeatureNames.begin(), kDetectionFeatureNames.end()});
  return 0;
}

int run_detect(const RunConfig& cfg) {
  const Corpus corpus = load_corpus(cfg.corpus);
  const TokenizerConfig tok = tokenizer_config(cfg);
  const Dictionary dict = load_dict_opt(cfg.dict);
  const DetectorModel model = load_detector(cfg.model_in);

  OutputTarget target(cfg.out);
  write_config_header(target.stream(), cfg);
  for (const Document& doc : corpus.documents) {
    const std::vector<int> hits = detect(model, doc, dict, tok);
    const std::vector<double> scores = detection_scores(model, doc, dict, tok);
    for (int i : hits) {
      target.stream() << nlohmann::json{{"doc_id", doc.doc_id},
                                        {"token_index", i},
                                        {"text", doc.tokens[i].text},
                                        {"score", scores[i]}}
                             .dump()
                      << '\n';
    }
  }
  return 0;
}

int run_gen_candidates(const RunConfig& cfg) {
  const Corpus corpus = load_corpus(cfg.corpus);
  const CandidateRuleConfig rules = cfg.rule_config();

  // With a detector model the candidates come from detected tokens;
  // otherwise from the gold abbreviation labels.
  std::optional<DetectorModel> detector;
  Dictionary dict;
  TokenizerConfig tok = TokenizerConfig::defaults();
  if (!cfg.model_in.empty()) {
    detector = load_detector(cfg.model_in);
    dict = load_dict_opt(cfg.dict);
    tok = tokenizer_config(cfg);
  }

  OutputTarget target(cfg.out);
  write_config_header(target.stream(), cfg);
  for (const Document& doc : corpus.documents) {
    std::vector<int> abbrevs;
    if (detector) {
      abbrevs = detect(*detector, doc, dict, tok);
    } else {
      for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
        if (doc.tokens[i].is_abbrev) abbrevs.push_back(i);
      }
    }
    for (int a : abbrevs) {
      for (const CandidateDefinition& cand : generate_candidates(doc, a, rules)) {
        target.stream() << nlohmann::json{{"doc_id", doc.doc_id},
                                          {"abbrev_index", cand.abbrev_index},
                                          {"start", cand.start},
                                          {"end", cand.end}}
                               .dump()
                        << '\n';
      }
    }
  }
  return 0;
}

int run_train_matcher(const RunConfig& cfg) {
  check_split_unit(cfg);
  if (cfg.split_unit == "token") {
    throw std::runtime_error(
        "train-matcher needs document-level splits: gold definition spans "
        "cannot survive a token split");
  }
  const Corpus corpus = load_corpus(cfg.corpus);
  const auto [train, test] = split_corpus(corpus, cfg.split_ratio, cfg.seed);
  const CandidateRuleConfig rules = cfg.rule_config();
  const std::unique_ptr<EmbeddingProvider> provider = make_provider(cfg);

  const PairDataset dataset = build_pair_dataset(train, rules, *provider);
  std::printf("pair dataset: %zu examples, generation recall %.3f (%d of %d gold)\n",
              dataset.examples.size(), dataset.generation_recall(), dataset.gold_covered,
              dataset.gold_total);

  const MatcherModel model =
      train_matcher(dataset.examples, cfg.matcher, cfg.train_config(), cfg.threshold);
  if (!cfg.model_out.empty()) save_matcher(model, cfg.model_out);

  if (test.documents.empty()) {
    log::warn("held-out split is empty; skipping evaluation");
  } else {
    const MetricsReport report =
        evaluate_identification(test, nullptr, model, rules, *provider, Dictionary{},
                                EvalAbbrevSource::gold);
    std::cout << report.to_table();
  }
  print_importance("feature importance (identification):",
                   ml::feature_importance(model.model),
                   {kPairFeatureNames.begin(), kPairFeatureNames.end()});
  return 0;
}

int run_identify(const RunConfig& cfg) {
  check_split_unit(cfg);
  if (cfg.split_unit == "token") {
    throw std::runtime_error(
        "identify needs whole documents: definition spans cannot survive a "
        "token split");
  }
  const Corpus corpus = load_corpus(cfg.corpus);
  const TokenizerConfig tok = tokenizer_config(cfg);
  const Dictionary dict = load_dict_opt(cfg.dict);
  const DetectorModel detector = load_detector(cfg.detector_model);
  const MatcherModel matcher = load_matcher(cfg.matcher_model);
  const CandidateRuleConfig rules = cfg.rule_config();
  const std::unique_ptr<EmbeddingProvider> provider = make_provider(cfg);

  OutputTarget target(cfg.out);
  write_config_header(target.stream(), cfg);
  for (const Document& doc : corpus.documents) {
    const DocumentResult result =
        identify(doc, detector, matcher, rules, *provider, dict, tok);
    for (const AcceptedPair& p : result.pairs) {
      target.stream() << nlohmann::json{{"doc_id", result.doc_id},
                                        {"abbrev_index", p.abbrev_index},
                                        {"abbrev_text", p.abbrev_text},
                                        {"start", p.start},
                                        {"end", p.end},
                                        {"definition_text", p.definition_text},
                                        {"score", p.score},
                                        {"best", p.best}}
                             .dump()
                      << '\n';
    }
  }
  return 0;
}

int run_evaluate(const RunConfig& cfg) {
  check_split_unit(cfg);
  if (cfg.detector_model.empty() && cfg.matcher_model.empty()) {
    throw std::runtime_error("evaluate needs --detector-model and/or --matcher-model");
  }
  if (cfg.split_unit == "token" && cfg.detector_model.empty()) {
    throw std::runtime_error("evaluate with split_unit=token reports detection only"
                             " and needs --detector-model");
  }
  const Corpus corpus = load_corpus(cfg.corpus);
  const TokenizerConfig tok = tokenizer_config(cfg);
  const Dictionary dict = load_dict_opt(cfg.dict);

  nlohmann::json out_json{{"_config", cfg.to_json()}};

  std::optional<DetectorModel> detector;
  if (!cfg.detector_model.empty()) {
    detector = load_detector(cfg.detector_model);
    const MetricsReport report = evaluate_detection(*detector, corpus, dict, tok);
    std::printf("detection (token level):\n");
    std::cout << report.to_table();
    out_json["detection"] = report.to_json();
  }

  if (!cfg.matcher_model.empty() && cfg.split_unit == "token") {
    log::warn("identification needs document-level spans; skipping it under"
              " split_unit=token");
  } else if (!cfg.matcher_model.empty()) {
    const MatcherModel matcher = load_matcher(cfg.matcher_model);
    const CandidateRuleConfig rules = cfg.rule_config();
    const std::unique_ptr<EmbeddingProvider> provider = make_provider(cfg);
    const EvalAbbrevSource source = cfg.eval_on == "gold" ? EvalAbbrevSource::gold
                                                          : EvalAbbrevSource::detected;
    if (source == EvalAbbrevSource::detected && !detector) {
      throw std::runtime_error("--eval-on detected needs --detector-model");
    }
    const MetricsReport report =
        evaluate_identification(corpus, detector ? &*detector : nullptr, matcher, rules,
                                *provider, dict, source, tok);
    std::printf("\nidentification (pair level, on %s abbreviations):\n",
                cfg.eval_on.c_str());
    std::cout << report.to_table();
    out_json["identification"] = report.to_json();
  }

  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out);
    if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
    file << out_json.dump(2) << '\n';
  }
  return 0;
}

int run_sweep(const RunConfig& cfg, const std::string& param,
              const std::vector<double>& values) {
  if (values.empty()) throw std::runtime_error("sweep needs at least one --values entry");
  const Corpus corpus = load_corpus(cfg.corpus);
  const TokenizerConfig tok = tokenizer_config(cfg);
  const Dictionary dict = load_dict_opt(cfg.dict);
  const auto [train, test] = split_for_stage1(corpus, cfg);
  if (test.documents.empty()) throw std::runtime_error("sweep needs a non-empty held-out split");

  const auto apply = [&](RunConfig base, double v) {
    if (param == "n_trees") base.n_trees = static_cast<int>(v);
    else if (param == "max_depth") base.max_depth = static_cast<int>(v);
    else if (param == "min_samples_split") base.min_samples_split = static_cast<int>(v);
    else if (param == "min_samples_leaf") base.min_samples_leaf = static_cast<int>(v);
    else if (param == "boosting_rounds") base.boosting_rounds = static_cast<int>(v);
    else if (param == "learning_rate") base.learning_rate = v;
    else if (param == "svm_epochs") base.svm_epochs = static_cast<int>(v);
    else if (param == "svm_regularization") base.svm_regularization = v;
    else throw std::runtime_error("unknown sweep parameter '" + param + "'");
    return base;
  };

  std::printf("%-14s %s\n", param.c_str(), "roc_auc");
  nlohmann::json rows = nlohmann::json::array();
  for (double v : values) {
    const RunConfig varied = apply(cfg, v);
    const DetectorModel model = train_detector(train, dict, detector_config(varied), tok);
    const MetricsReport report = evaluate_detection(model, test, dict, tok);
    const double auc = report.rows.back().roc_auc;  // ensemble row
    std::printf("%-14g %.4f\n", v, auc);
    rows.push_back({{"value", v}, {"roc_auc", auc}});
  }
  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out);
    if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
    file << nlohmann::json{{"_config", cfg.to_json()}, {"param", param}, {"rows", rows}}
                .dump(2)
         << '\n';
  }
  return 0;
}

int run_synth(const RunConfig& cfg) {
  const Corpus corpus = synth_corpus(cfg.synth_config());
  OutputTarget target(cfg.out);
  write_config_header(target.stream(), cfg);
  for (const Document& doc : corpus.documents) {
    target.stream() << document_to_json(doc).dump() << '\n';
  }
  if (!cfg.out.empty()) {
    std::cout << corpus_manifest(corpus).dump(2) << '\n';
  } else {
    log::info("generated " + std::to_string(corpus.documents.size()) + " documents");
  }
  return 0;
}

std::optional<std::string> find_config_flag(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (arg.rfind("--config=", 0) == 0) return std::string(arg.substr(9));
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    if (const auto config_path = find_config_flag(argc, argv)) {
      cfg = RunConfig::load(*config_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  CLI::App app{"Two-stage abbreviation identification for Russian medical text"};
  app.require_subcommand(1);

  std::string config_path_unused;  // recognized everywhere; loaded above
  std::string sweep_param;
  std::vector<double> sweep_values;

  const auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path_unused,
                    "JSON config file with defaults; explicit flags override");
  };
  const auto add_train_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--n-trees", cfg.n_trees, "trees per forest");
    sub->add_option("--max-depth", cfg.max_depth, "tree depth cap (0 = default)");
    sub->add_option("--min-samples-split", cfg.min_samples_split,
                    "minimum samples to split a node");
    sub->add_option("--min-samples-leaf", cfg.min_samples_leaf,
                    "minimum samples per leaf");
    sub->add_option("--boosting-rounds", cfg.boosting_rounds, "boosting stages");
    sub->add_option("--learning-rate", cfg.learning_rate, "boosting learning rate");
    sub->add_option("--svm-epochs", cfg.svm_epochs, "SVM training epochs");
    sub->add_option("--svm-regularization", cfg.svm_regularization,
                    "SVM L2 regularization strength");
    sub->add_flag("--per-split-features", cfg.per_split_features,
                  "forests resample features at every split instead of per tree");
    sub->add_flag("--adaboost", cfg.adaboost,
                  "boosting uses AdaBoost stage weights instead of logistic loss");
  };
  const auto add_split_unit = [&](CLI::App* sub) {
    sub->add_option("--split-unit", cfg.split_unit,
                    "4:1 split granularity for stage-1 (document|token)")
        ->check(CLI::IsMember({"document", "token"}));
  };
  const auto add_rule_flags = [&](CLI::App* sub) {
    sub->add_option("--coverage-min", cfg.coverage_min,
                    "minimum fraction of abbreviation characters in a span");
    sub->add_option("--max-missing", cfg.max_missing,
                    "maximum abbreviation characters missing from a span");
    sub->add_flag("--sentence-bound", cfg.sentence_bound,
                  "candidates may not cross sentence boundaries");
  };

  CLI::App* tok = app.add_subcommand("tokenize", "raw text (one document per line) to corpus JSON Lines");
  tok->add_option("--corpus", cfg.corpus, "input UTF-8 text file")->required();
  tok->add_option("--stopwords", cfg.stopwords, "stopword list, one per line");
  tok->add_option("--out", cfg.out, "output path (default stdout)");
  add_config(tok);
  tok->callback([&] { run_tokenize(cfg); });

  CLI::App* td = app.add_subcommand("train-detector", "train the stage-1 token classifier ensemble");
  td->add_option("--corpus", cfg.corpus, "corpus JSON Lines")->required();
  td->add_option("--dict", cfg.dict, "dictionary of known words");
  td->add_option("--stopwords", cfg.stopwords, "stopword list");
  td->add_option("--model-out", cfg.model_out, "where to write the detector model");
  td->add_option("--split-ratio", cfg.split_ratio, "train fraction of documents");
  add_split_unit(td);
  td->add_option("--members", cfg.members, "ensemble members (svm,forest,boosting)")
      ->delimiter(',');
  td->add_option("--threshold", cfg.threshold, "positive-label score threshold");
  td->add_flag("--class-weight", cfg.class_weight, "weight classes inversely to frequency");
  add_train_flags(td);
  add_config(td);
  td->callback([&] { run_train_detector(cfg); });

  CLI::App* det = app.add_subcommand("detect", "run a trained detector over a corpus");
  det->add_option("--corpus", cfg.corpus, "corpus JSON Lines")->required();
  det->add_option("--model-in", cfg.model_in, "detector model file")->required();
  det->add_option("--dict", cfg.dict, "dictionary of known words");
  det->add_option("--stopwords", cfg.stopwords, "stopword list");
  det->add_option("--out", cfg.out, "output path (default stdout)");
  add_config(det);
  det->callback([&] { run_detect(cfg); });

  CLI::App* gen = app.add_subcommand("gen-candidates", "enumerate candidate definition spans");
  gen->add_option("--corpus", cfg.corpus, "corpus JSON Lines")->required();
  gen->add_option("--model-in", cfg.model_in,
                  "detector model; omitted = use gold abbreviation labels");
  gen->add_option("--dict", cfg.dict, "dictionary (with --model-in)");
  gen->add_option("--stopwords", cfg.stopwords, "stopword list (with --model-in)");
  gen->add_option("--out", cfg.out, "output path (default stdout)");
  add_rule_flags(gen);
  add_config(gen);
  gen->callback([&] { run_gen_candidates(cfg); });

  CLI::App* tm = app.add_subcommand("train-matcher", "train the stage-2 pair classifier");
  tm->add_option("--corpus", cfg.corpus, "corpus JSON Lines with gold pairs")->required();
  tm->add_option("--matcher", cfg.matcher, "pair model type")
      ->check(CLI::IsMember({"forest", "boosting"}));
  tm->add_option("--embeddings", cfg.embeddings,
                 "embedding table file (default: hashed character n-grams)");
  tm->add_option("--model-out", cfg.model_out, "where to write the matcher model");
  tm->add_option("--split-ratio", cfg.split_ratio, "train fraction of documents");
  add_split_unit(tm);
  tm->add_option("--threshold", cfg.threshold, "positive-label score threshold");
  add_rule_flags(tm);
  add_train_flags(tm);
  add_config(tm);
  tm->callback([&] { run_train_matcher(cfg); });

  CLI::App* idf = app.add_subcommand("identify", "full pipeline: detect, then match definitions");
  idf->add_option("--corpus", cfg.corpus, "corpus JSON Lines")->required();
  idf->add_option("--detector-model", cfg.detector_model, "detector model file")->required();
  idf->add_option("--matcher-model", cfg.matcher_model, "matcher model file")->required();
  idf->add_option("--dict", cfg.dict, "dictionary of known words");
  idf->add_option("--stopwords", cfg.stopwords, "stopword list");
  idf->add_option("--embeddings", cfg.embeddings, "embedding table file");
  idf->add_option("--out", cfg.out, "output path (default stdout)");
  add_split_unit(idf);
  add_rule_flags(idf);
  add_config(idf);
  idf->callback([&] { run_identify(cfg); });

  CLI::App* ev = app.add_subcommand("evaluate", "score trained models against gold labels");
  ev->add_option("--corpus", cfg.corpus, "corpus JSON Lines")->required();
  ev->add_option("--detector-model", cfg.detector_model, "detector model file");
  ev->add_option("--matcher-model", cfg.matcher_model, "matcher model file");
  ev->add_option("--dict", cfg.dict, "dictionary of known words");
  ev->add_option("--stopwords", cfg.stopwords, "stopword list");
  ev->add_option("--embeddings", cfg.embeddings, "embedding table file");
  ev->add_option("--eval-on", cfg.eval_on, "abbreviation source for identification")
      ->check(CLI::IsMember({"detected", "gold"}));
  ev->add_option("--out", cfg.out, "also write the report as JSON to this path");
  add_split_unit(ev);
  add_rule_flags(ev);
  add_config(ev);
  ev->callback([&] { run_evaluate(cfg); });

  CLI::App* sw = app.add_subcommand("sweep", "held-out ROC AUC across one hyperparameter");
  sw->add_option("--corpus", cfg.corpus, "corpus JSON Lines")->required();
  sw->add_option("--param", sweep_param, "hyperparameter name (e.g. min_samples_leaf)")
      ->required();
  sw->add_option("--values", sweep_values, "comma-separated values to try")
      ->required()
      ->delimiter(',');
  sw->add_option("--dict", cfg.dict, "dictionary of known words");
  sw->add_option("--stopwords", cfg.stopwords, "stopword list");
  sw->add_option("--split-ratio", cfg.split_ratio, "train fraction of documents");
  add_split_unit(sw);
  sw->add_option("--members", cfg.members, "ensemble members")->delimiter(',');
  sw->add_option("--out", cfg.out, "also write rows as JSON to this path");
  add_train_flags(sw);
  add_config(sw);
  sw->callback([&] { run_sweep(cfg, sweep_param, sweep_values); });

  CLI::App* sy = app.add_subcommand("synth", "generate a synthetic corpus with known gold pairs");
  sy->add_option("--out", cfg.out, "corpus output path (default stdout)");
  sy->add_option("--seed", cfg.seed, "RNG seed");
  sy->add_option("--target-tokens", cfg.target_tokens, "approximate corpus size");
  sy->add_option("--abbrev-ratio", cfg.abbrev_ratio, "target abbreviation token fraction");
  sy->add_option("--tokens-per-doc", cfg.tokens_per_doc, "approximate document length");
  sy->add_option("--paren-prob", cfg.paren_prob, "abbreviation parenthesized probability");
  sy->add_option("--jitter-prob", cfg.jitter_prob,
                 "filler between definition and abbreviation probability");
  sy->add_option("--missing-def-prob", cfg.missing_def_prob,
                 "abbreviation without definition probability");
  sy->add_option("--decoy-prob", cfg.decoy_prob, "numeric noise token probability");
  add_config(sy);
  sy->callback([&] { run_synth(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
