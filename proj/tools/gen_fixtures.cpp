// Regenerates the committed test fixtures.  A test compares its output
// byte-for-byte against the files under tests/fixtures/ so any drift in the
// generators is caught immediately.
//
// Usage: gen_fixtures <output-dir>

#include <fstream>
#include <iostream>
#include <string>

#include "abbrev/corpus.hpp"
#include "abbrev/ml.hpp"
#include "abbrev/synth.hpp"
#include "json.hpp"

namespace {

using namespace abbrev;

void write_corpus40(const std::string& path) {
  SynthConfig cfg;
  cfg.seed = 7;
  cfg.target_tokens = 1200;
  cfg.tokens_per_doc = 30;
  const Corpus corpus = synth_corpus(cfg);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (const Document& doc : corpus.documents) {
    out << document_to_json(doc).dump() << '\n';
  }
}

void write_dataset(const std::string& path, const ml::Matrix& x, const ml::Labels& y) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << nlohmann::json{{"x", x}, {"y", y}}.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  try {
    write_corpus40(dir + "/corpus40.jsonl");

    ml::Matrix x;
    ml::Labels y;
    make_separable_dataset(200, 11, &x, &y);
    write_dataset(dir + "/separable.json", x, y);

    make_xor_dataset(400, 13, &x, &y);
    write_dataset(dir + "/xor.json", x, y);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
