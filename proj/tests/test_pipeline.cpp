#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clir/config.hpp"
#include "clir/evaluation.hpp"
#include "clir/error.hpp"
#include "clir/io.hpp"
#include "clir/lexicon.hpp"
#include "clir/pipeline.hpp"
#include "oracles.hpp"
#include "run_pipeline.hpp"

using namespace clir;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string err;
  std::string out;
};

CliResult run_cli(const std::string& args, const fs::path& scratch, const std::string& input = "") {
  const fs::path err = scratch / "stderr.txt";
  const fs::path out = scratch / "stdout.txt";
  const fs::path in = scratch / "stdin.txt";
  io::write_file_atomic(in, input);
  const std::string cmd = std::string("'") + CLIR_TEST_CLI + "' " + args + " <'" + in.string() +
                          "' >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = io::read_file(err);
  r.out = io::read_file(out);
  return r;
}

void write(const fs::path& p, const std::string& text) { io::write_file_atomic(p, text); }

std::string rank_one(const std::string& run, const std::string& qid) {
  std::istringstream in(run);
  std::string q, rank, doc, score;
  while (in >> q >> rank >> doc >> score) {
    if (q == qid && rank == "1") return doc;
  }
  return "";
}

}  // namespace

TEST_CASE("config files") {
  const auto cfg = ExperimentConfig::parse(
      "# comment\n[paths]\ncorpus = a.jsonl, b.jsonl\nqueries = q.tsv\noutput_dir = /abs/out\n"
      "[params]\nk = 5\ntransliteration = off\ndirection = en-ja\nfields = title\n",
      "/base/dir");
  REQUIRE(cfg.corpus.size() == 2);
  CHECK(cfg.corpus[0] == fs::path("/base/dir/a.jsonl"));
  CHECK(cfg.corpus[1] == fs::path("/base/dir/b.jsonl"));
  CHECK(cfg.queries == fs::path("/base/dir/q.tsv"));
  CHECK(cfg.index_path() == fs::path("/abs/out/index.txt"));
  CHECK(cfg.k == 5);
  CHECK_FALSE(cfg.transliteration);
  CHECK(cfg.direction == Direction::kEnToJa);
  CHECK_FALSE(cfg.fields.abstract_text);
  CHECK(cfg.language_model_corpus() == cfg.corpus);

  CHECK_THROWS_AS(ExperimentConfig::parse("[paths]\nnope = 1\n", "/"), Error);
  CHECK_THROWS_AS(ExperimentConfig::parse("[other]\n", "/"), Error);
  CHECK_THROWS_AS(ExperimentConfig::parse("[params]\nk = many\n", "/"), Error);
  CHECK_THROWS_AS(ExperimentConfig::parse("[params]\nk\n", "/"), Error);
  CHECK_THROWS_AS(ExperimentConfig::load("/definitely/missing.conf"), Error);

  ExperimentConfig c;
  c.set("mode", "monolingual", "/");
  CHECK(c.mode == SearchMode::kMonolingual);
  CHECK_THROWS_AS(c.set("mode", "sideways", "/"), Error);
  c.k = 0;
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("query files") {
  fixture::TempDir tmp("queries");
  write(tmp.path() / "q.tsv", "# header\nq1\t情報検索\n\nq2\tデータ構造\n");
  const auto qs = load_queries(tmp.path() / "q.tsv");
  REQUIRE(qs.size() == 2);
  CHECK(qs[1].id == "q2");
  CHECK(qs[1].text == "データ構造");
  write(tmp.path() / "bad.tsv", "q1\tok\nno tab\n");
  try {
    load_queries(tmp.path() / "bad.tsv");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("bundled experiment ranks planted documents first") {
  fixture::TempDir tmp("planted");
  const auto out = fixture::run_pipeline(fixture::data_dir() / "experiment.conf", tmp.path());
  const auto planted = fixture::planted_answers();
  CHECK(planted.size() >= 10);
  for (const auto& p : planted) CHECK_MESSAGE(rank_one(out.run, p.query) == p.doc, p.query);
  CHECK(out.lexicon.find("データ\tdata\t") != std::string::npos);
  const auto skipped = io::read_file(out.config.dict_path(files::kSkippedPairs));
  CHECK(skipped.find("very long technical term phrase") != std::string::npos);
  CHECK(fs::exists(out.config.run_path().string() + ".log"));
}

TEST_CASE("bundled dictionaries match the golden lexicon") {
  fixture::TempDir tmp("golden");
  auto cfg = ExperimentConfig::load(fixture::data_dir() / "experiment.conf");
  cfg.set("output_dir", tmp.path().string(), tmp.path());
  cmd_build_dicts(cfg);
  const auto ja_en = io::read_file(cfg.dict_path(files::kLexiconJaEn));
  CHECK(ja_en == io::read_file(fs::path(CLIR_TEST_SOURCE_DIR) / "golden" / "lexicon_ja_en.tsv"));
  const auto forward = BaseWordLexicon::from_tsv(ja_en, Direction::kJaToEn);
  const auto backward =
      BaseWordLexicon::from_tsv(io::read_file(cfg.dict_path(files::kLexiconEnJa)), Direction::kEnToJa);
  CHECK(backward == forward.transpose());
}

TEST_CASE("bundled report agrees with recomputed precision") {
  fixture::TempDir tmp("report");
  const auto out = fixture::run_pipeline(fixture::data_dir() / "experiment.conf", tmp.path());
  const auto judgments = Judgments::load(out.config.qrels);
  std::map<std::string, double> reported;
  for (const auto& line : io::read_lines(out.config.report_path())) {
    const auto f = io::split(line, '\t');
    if (f.empty() || f[0] == "query" || f[0] == "mean") continue;
    reported[f[0]] = std::stod(f.back());
  }
  REQUIRE(reported.size() == judgments.queries().size());
  const auto runs = parse_run(out.run);
  for (const auto& qid : judgments.queries()) {
    std::vector<bool> flags;
    for (const auto& r : runs) {
      if (r.query_id != qid) continue;
      for (const auto& hit : r.results) flags.push_back(is_relevant(judgments.grade(qid, hit.doc), Binarization::kLenient));
    }
    const double ref = oracle::eleven_point_ap(flags, judgments.relevant_count(qid, Binarization::kLenient));
    CHECK_MESSAGE(std::abs(reported[qid] - ref) <= 5e-5, qid);
  }
}

TEST_CASE("bundled models translate a transliterated compound") {
  fixture::TempDir tmp("models");
  auto cfg = ExperimentConfig::load(fixture::data_dir() / "experiment.conf");
  cfg.set("output_dir", tmp.path().string(), tmp.path());
  cmd_index(cfg);
  cmd_build_dicts(cfg);
  const auto models = TranslationModels::load(cfg);
  const auto ctx = models.context();
  const auto words = extract_content_words(segment_japanese("レジスタ転送言語"), Language::kJapanese);
  REQUIRE(words.size() == 1);
  const auto kb = translate_kbest(words[0], ctx);
  REQUIRE_FALSE(kb.candidates.empty());
  CHECK(candidate_key(kb.candidates[0]) == "register transfer language");

  std::istringstream in("レジスタ転送言語\n");
  std::ostringstream result, log;
  cmd_translate(cfg, in, result, log);
  CHECK(result.str().rfind("レジスタ転送言語\t1\tregister transfer language\t", 0) == 0);

  std::istringstream tin("リダクション\n");
  std::ostringstream tout;
  cmd_transliterate(cfg, tin, tout, log);
  CHECK(tout.str().find("\treduction\t") != std::string::npos);
}

TEST_CASE("repeated runs are byte identical") {
  fixture::TempDir a("det-a"), b("det-b");
  const auto first = fixture::run_pipeline(fixture::data_dir() / "experiment.conf", a.path());
  const auto second = fixture::run_pipeline(fixture::data_dir() / "experiment.conf", b.path());
  CHECK(first.run == second.run);
  CHECK(first.report == second.report);
  CHECK(first.index == second.index);
  CHECK(first.lexicon == second.lexicon);
}

TEST_CASE("monolingual baseline") {
  fixture::TempDir tmp("jj");
  const auto out = fixture::run_pipeline(fixture::data_dir() / "experiment_jj.conf", tmp.path());
  CHECK_FALSE(out.run.empty());
  CHECK(out.report.find("\nmean\t") != std::string::npos);
  CHECK(rank_one(out.run, "q01") == "d01");
}

TEST_CASE("command line exit codes") {
  fixture::TempDir tmp("cli");
  const std::string conf = (fixture::data_dir() / "experiment.conf").string();
  const std::string outdir = (tmp.path() / "out").string();

  CHECK(run_cli("--help", tmp.path()).code == 0);
  CHECK(run_cli("index --no-such-flag", tmp.path()).code == 1);
  CHECK(run_cli("", tmp.path()).code == 1);
  CHECK(run_cli("index -c /missing.conf", tmp.path()).code == 1);

  write(tmp.path() / "empty.jsonl", "");
  auto r = run_cli("index -c '" + conf + "' --output-dir '" + outdir + "' --corpus '" +
                       (tmp.path() / "empty.jsonl").string() + "'",
                   tmp.path());
  CHECK(r.code == 2);
  CHECK(r.err.find("empty collection") != std::string::npos);

  r = run_cli("search -c '" + conf + "' --output-dir '" + outdir + "'", tmp.path());
  CHECK(r.code != 0);
  CHECK(r.err.find("not found") != std::string::npos);

  write(tmp.path() / "bad_pairs.tsv", "data\tデータ\nmining マイニング\n");
  r = run_cli("build-dicts -c '" + conf + "' --output-dir '" + outdir + "' --set term_pairs=" +
                  (tmp.path() / "bad_pairs.tsv").string(),
              tmp.path());
  CHECK(r.code == 2);
  CHECK(r.err.find(":2") != std::string::npos);

  CHECK(run_cli("index -c '" + conf + "' --output-dir '" + outdir + "' --k 0", tmp.path()).code == 1);

  REQUIRE(run_cli("index -c '" + conf + "' --output-dir '" + outdir + "'", tmp.path()).code == 0);
  REQUIRE(run_cli("build-dicts -c '" + conf + "' --output-dir '" + outdir + "'", tmp.path()).code == 0);
  r = run_cli("translate -c '" + conf + "' --output-dir '" + outdir + "'", tmp.path(), "情報検索システム\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("information retrieval system") != std::string::npos);
  r = run_cli("search -c '" + conf + "' --output-dir '" + outdir + "'", tmp.path());
  CHECK(r.code == 0);
  r = run_cli("eval -c '" + conf + "' --output-dir '" + outdir + "' --binarization strict", tmp.path());
  CHECK(r.code == 0);
  CHECK(fs::exists(fs::path(outdir) / "report.tsv"));
}
