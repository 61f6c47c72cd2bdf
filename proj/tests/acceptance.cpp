// Acceptance checks. Usage: acceptance [criterion] [data_dir]
// Prints one PASS/FAIL line per criterion; exits non-zero on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clir/compound_translation.hpp"
#include "clir/evaluation.hpp"
#include "clir/retrieval.hpp"
#include "clir/transliteration.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "run_pipeline.hpp"

using namespace clir;
namespace fs = std::filesystem;

namespace {

fs::path g_data = fixture::data_dir();

struct Outcome {
  bool pass = false;
  std::string detail;
};

const RomanizationTable& roman() { return RomanizationTable::default_table(); }
const LetterSimilarityTable& letters() { return LetterSimilarityTable::default_table(); }

Outcome letter_table() {
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz$'-.";
  const auto similar = fixture::similar_letters();
  std::size_t mismatches = 0, asymmetric = 0;
  for (char e : alphabet) {
    for (char j : alphabet) {
      const int s = letters().similarity(e, j);
      if (s != oracle::letter_similarity(e, j, similar)) ++mismatches;
      if (s != letters().similarity(j, e)) ++asymmetric;
    }
  }
  const int lr = letters().similarity('l', 'r');
  std::ostringstream d;
  d << alphabet.size() << "x" << alphabet.size() << " pairs, " << mismatches << " mismatches, "
    << asymmetric << " asymmetric, L/R=" << lr;
  return {mismatches == 0 && asymmetric == 0 && lr == 2, d.str()};
}

Outcome text_alignment() {
  const auto a = align("text", "テキスト", roman(), letters());
  std::string shown;
  for (const auto& p : a.pairs) shown += "(" + p.english + "," + p.katakana + ")";
  const bool ok = a.pairs == std::vector<SymbolPair>{{"te", "テ"}, {"x", "キス"}, {"t", "ト"}};
  return {ok, shown};
}

Outcome alignment_oracle() {
  std::mt19937 rng(1001);
  const auto similar = fixture::similar_letters();
  int checked = 0, score_bad = 0, path_bad = 0;
  std::size_t largest = 0;
  while (checked < 200) {
    const std::string english = fixture::random_letters(rng, 1 + rng() % 11);
    const auto units = roman().units(fixture::random_katakana(rng, 1 + rng() % 6));
    if (!units) continue;
    const auto grid = make_alignment_grid(english, *units);
    if (grid.height() > 12 || grid.width() > 12) continue;
    largest = std::max(largest, grid.height() * grid.width());
    const auto got = align(english, *units, letters());
    const auto best = oracle::best_monotone_path(grid.height(), grid.width(), [&](auto r, auto c) {
      return oracle::letter_similarity(grid.rows[r], grid.cols[c], similar);
    });
    if (got.score != best.score || path_score(grid, letters(), got.path) != got.score) ++score_bad;
    if (got.path != best.path) ++path_bad;
    ++checked;
  }
  std::ostringstream d;
  d << checked << " pairs (largest grid " << largest << " cells), " << score_bad
    << " score mismatches, " << path_bad << " path mismatches";
  return {score_bad == 0, d.str()};
}

Outcome kbest_oracle() {
  std::mt19937 rng(2002);
  const std::vector<std::string> sources = {"甲", "乙", "丙", "丁", "戊", "己"};
  const std::vector<std::string> pool = {"w0", "w1", "w2", "w3", "w4", "w5", "w6", "w7"};
  const double eps = 0.01;
  int lattices = 0, bad = 0;
  double worst = 0.0;
  for (; lattices < 100; ++lattices) {
    const std::size_t n = 1 + rng() % 6;
    BaseWordLexicon lex(Direction::kJaToEn);
    std::map<std::pair<std::string, std::string>, std::int64_t> counts;
    for (std::size_t i = 0; i < n; ++i) {
      auto opts = pool;
      std::shuffle(opts.begin(), opts.end(), rng);
      opts.resize(1 + rng() % 5);
      for (const auto& t : opts) {
        const std::int64_t c = 1 + static_cast<std::int64_t>(rng() % 3);
        lex.add(sources[i], t, c);
        counts[{sources[i], t}] += c;
      }
    }
    std::vector<std::vector<std::string>> seqs;
    for (int s = 0; s < 10; ++s) {
      std::vector<std::string> seq;
      for (int i = 0; i < 4; ++i) seq.push_back(pool[rng() % pool.size()]);
      seqs.push_back(seq);
    }
    const auto prior = BigramModel::train(seqs, {0.05, false});
    const ChannelModel channel(lex, eps, 0.001);
    const std::vector<std::string> vocab;
    const RomanizationTable& rt = roman();
    TranslationConfig config;
    config.k = 1 + rng() % 5;
    const TranslationContext ctx{Direction::kJaToEn, channel, prior, nullptr, rt, vocab, config};

    // Channel terms straight from the counts.
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> per_target;  // total, sources
    for (const auto& [st, c] : counts) {
      per_target[st.second].first += c;
      per_target[st.second].second += 1;
    }
    std::vector<std::vector<std::pair<std::string, double>>> lattice(n);
    std::string word;
    for (std::size_t i = 0; i < n; ++i) {
      word += sources[i];
      for (const auto& [st, c] : counts) {
        if (st.first != sources[i]) continue;
        const auto [total, v] = per_target[st.second];
        const double p = (static_cast<double>(c) + eps) /
                         (static_cast<double>(total) + eps * static_cast<double>(v + 1));
        lattice[i].emplace_back(st.second, std::log(p));
      }
    }
    const auto expected = oracle::enumerate_lattice(
        lattice, [&](const std::string& a, const std::string& b) { return log_cond_prob(prior, a, b); });

    const auto cw = extract_content_words(segment_japanese(word), Language::kJapanese);
    const auto got = translate_kbest(cw.at(0), ctx).candidates;
    const std::size_t want = std::min(config.k, expected.size());
    bool ok = got.size() == want;
    for (std::size_t i = 0; ok && i < want; ++i) {
      const double diff = std::abs(got[i].log_score - expected[i].score);
      worst = std::max(worst, diff);
      ok = got[i].words == expected[i].words && diff <= 1e-12;
    }
    if (!ok) ++bad;
  }
  std::ostringstream d;
  d << lattices << " lattices, " << bad << " mismatches, max score diff " << worst;
  return {bad == 0, d.str()};
}

Outcome vocabulary_constraint() {
  const auto symbols = build_symbol_lexicon(load_transliteration_pairs(g_data / "translit_pairs.tsv"),
                                            roman(), letters());
  const auto docs = load_corpus(g_data / "corpus_en.jsonl");
  const auto index = build_index(docs, {}, load_stopwords(g_data / "stopwords_en.txt"));
  std::vector<std::string> vocab = script_vocabulary(index, Language::kEnglish);
  const std::vector<std::string> seeds = {"riduction", "redction", "redaction", "reduction"};
  vocab.insert(vocab.end(), seeds.begin(), seeds.end());
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
  const std::set<std::string> vocab_set(vocab.begin(), vocab.end());

  std::size_t calls = 0, outside = 0;
  auto check = [&](const std::vector<TransliterationCandidate>& out, const std::set<std::string>& allowed) {
    ++calls;
    for (const auto& c : out) outside += allowed.count(c.word) ? 0 : 1;
  };
  std::mt19937 rng(3003);
  for (const auto& p : load_transliteration_pairs(g_data / "translit_pairs.tsv")) {
    check(transliterate(p.katakana, Direction::kJaToEn, symbols.lexicon, vocab, 10, roman()), vocab_set);
  }
  for (int i = 0; i < 100; ++i) {
    check(transliterate(fixture::random_katakana(rng, 2 + rng() % 4), Direction::kJaToEn,
                        symbols.lexicon, vocab, 10, roman()),
          vocab_set);
  }
  const std::vector<std::string> kata = {"データ", "システム", "ネットワーク", "テキスト", "リダクション"};
  const std::set<std::string> kata_set(kata.begin(), kata.end());
  for (const auto& w : vocab) {
    check(transliterate(w, Direction::kEnToJa, symbols.lexicon, kata, 10, roman()), kata_set);
  }

  const auto out = transliterate("リダクション", Direction::kJaToEn, symbols.lexicon, vocab, 10, roman());
  std::vector<std::string> found;
  for (const auto& s : seeds) {
    if (std::any_of(out.begin(), out.end(), [&](const auto& c) { return c.word == s; })) found.push_back(s);
  }
  std::ostringstream d;
  d << calls << " calls over " << vocab.size() << " words, " << outside
    << " outside the vocabulary; リダクション returned " << found.size() << "/4 seeds";
  return {outside == 0 && found.size() == seeds.size(), d.str()};
}

Outcome retrieval_oracle() {
  std::mt19937 rng(4004);
  int collections = 0, bad = 0;
  double worst = 0.0;
  for (; collections < 20; ++collections) {
    const std::size_t n = 1 + rng() % 100;
    const std::size_t vocab = 3 + rng() % 60;
    std::vector<std::pair<std::string, std::vector<std::string>>> docs;
    InvertedIndex index;
    for (std::size_t d = 0; d < n; ++d) {
      std::vector<std::string> terms;
      for (std::size_t i = 0; i < 1 + rng() % 15; ++i) terms.push_back("t" + std::to_string(rng() % vocab));
      char id[16];
      std::snprintf(id, sizeof id, "doc%03zu", (d * 7919) % 1000);
      docs.emplace_back(id, terms);
    }
    std::shuffle(docs.begin(), docs.end(), rng);
    for (const auto& [id, terms] : docs) index.add(id, terms);
    index.finalize();
    for (int q = 0; q < 10; ++q) {
      std::vector<std::string> query;
      for (std::size_t i = 0; i < 1 + rng() % 6; ++i) query.push_back("t" + std::to_string(rng() % (vocab + 5)));
      const auto got = search(index, query);
      const auto expected = oracle::dense_cosine(docs, query);
      bool ok = got.size() == expected.size();
      for (std::size_t i = 0; ok && i < got.size(); ++i) {
        const double diff = std::abs(got[i].score - expected[i].second);
        worst = std::max(worst, diff);
        ok = got[i].doc == expected[i].first && diff <= 1e-12;
      }
      if (!ok) ++bad;
    }
  }
  std::ostringstream d;
  d << collections << " collections x 10 queries, " << bad << " mismatches, max score diff " << worst;
  return {bad == 0, d.str()};
}

Outcome evaluation_oracle() {
  std::mt19937 rng(5005);
  int instances = 0, bad = 0;
  double worst = 0.0;
  for (; instances < 50; ++instances) {
    Judgments j;
    std::vector<RankedRun> runs;
    const int queries = 1 + static_cast<int>(rng() % 5);
    for (int q = 0; q < queries; ++q) {
      const std::string qid = "q" + std::to_string(q);
      RankedRun run{qid, {}};
      const int docs = 5 + static_cast<int>(rng() % 40);
      for (int d = 0; d < docs; ++d) {
        const std::string doc = "d" + std::to_string(d);
        if (rng() % 2) j.set(qid, doc, static_cast<Grade>(rng() % 3));
        if (rng() % 4) run.results.push_back({doc, 0.0});
      }
      j.set(qid, "extra", Grade::kRelevant);
      std::shuffle(run.results.begin(), run.results.end(), rng);
      runs.push_back(run);
    }
    const auto b = rng() % 2 ? Binarization::kLenient : Binarization::kStrict;
    const auto report = evaluate(runs, j, b);
    double mean = 0.0;
    for (const auto& run : runs) {
      std::vector<bool> flags;
      for (const auto& r : run.results) flags.push_back(is_relevant(j.grade(run.query_id, r.doc), b));
      const double ref = oracle::eleven_point_ap(flags, j.relevant_count(run.query_id, b));
      mean += ref;
      const auto it = std::find_if(report.queries.begin(), report.queries.end(),
                                   [&](const auto& e) { return e.query_id == run.query_id; });
      if (it == report.queries.end()) {
        ++bad;
        continue;
      }
      worst = std::max(worst, std::abs(it->average_precision - ref));
      if (std::abs(it->average_precision - ref) > 1e-9) ++bad;
    }
    if (std::abs(report.mean_average_precision - mean / queries) > 1e-9) ++bad;
  }
  const double hand = eleven_point_average(interpolated_precision({true, false, true}, 2));
  const bool hand_ok = std::abs(hand - 0.8182) <= 1e-4;
  std::ostringstream d;
  d << instances << " instances, " << bad << " mismatches (max diff " << worst
    << "); hand example [R,N,R] AP=" << io::format_fixed(hand, 4) << ", expected 0.8182";
  return {bad == 0 && hand_ok, d.str()};
}

Outcome planted_answers() {
  const auto planted = fixture::planted_answers(g_data);
  const auto docs = load_corpus(g_data / "corpus_en.jsonl");
  const auto queries = load_queries(g_data / "queries.tsv");
  fixture::TempDir on("accept-on"), off("accept-off");
  const auto with = fixture::run_pipeline(g_data / "experiment.conf", on.path());
  const auto without =
      fixture::run_pipeline(g_data / "experiment.conf", off.path(), {{"transliteration", "off"}});

  std::map<std::string, std::string> top;
  for (const auto& run : parse_run(with.run)) {
    if (!run.results.empty()) top[run.query_id] = run.results[0].doc;
  }
  std::size_t hits = 0, translit = 0;
  for (const auto& p : planted) {
    hits += top[p.query] == p.doc ? 1 : 0;
    translit += p.needs_transliteration ? 1 : 0;
  }
  const auto ap_on = fixture::exact_ap(with.run, g_data / "qrels.txt");
  const auto ap_off = fixture::exact_ap(without.run, g_data / "qrels.txt");
  double mean_on = 0.0, mean_off = 0.0;
  for (const auto& p : planted) {
    if (!p.needs_transliteration) continue;
    mean_on += ap_on.at(p.query);
    mean_off += ap_off.count(p.query) ? ap_off.at(p.query) : 0.0;
  }
  if (translit > 0) {
    mean_on /= static_cast<double>(translit);
    mean_off /= static_cast<double>(translit);
  }
  const bool corpus_ok = docs.size() >= 50 && queries.size() >= 10 && planted.size() >= 10 && translit >= 2;
  const bool hits_ok = hits * 10 >= planted.size() * 9;
  std::ostringstream d;
  d << docs.size() << " docs, " << planted.size() << " planted queries (" << translit
    << " transliteration); rank-1 " << hits << "/" << planted.size()
    << "; transliteration-query AP on " << io::format_fixed(mean_on, 4) << " vs off "
    << io::format_fixed(mean_off, 4);
  return {corpus_ok && hits_ok && mean_off < mean_on, d.str()};
}

Outcome determinism() {
  fixture::TempDir a("accept-det-a"), b("accept-det-b");
  const auto first = fixture::run_pipeline(g_data / "experiment.conf", a.path());
  const auto second = fixture::run_pipeline(g_data / "experiment.conf", b.path());
  fixture::TempDir c("accept-det-c");
  const auto third = fixture::run_pipeline(g_data / "experiment.conf", c.path());
  const bool ok = first.run == second.run && second.run == third.run &&
                  first.report == second.report && second.report == third.report &&
                  first.index == second.index && first.lexicon == second.lexicon;
  std::ostringstream d;
  d << "3 runs; run " << first.run.size() << " bytes, report " << first.report.size() << " bytes, "
    << (ok ? "identical" : "differ");
  return {ok, d.str()};
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 2) g_data = argv[2];

  const std::vector<Criterion> criteria = {
      {1, "letter similarity table", 1.0, letter_table},
      {2, "text alignment", 1.0, text_alignment},
      {3, "alignment optimality", 30.0, alignment_oracle},
      {4, "k-best translation", 30.0, kbest_oracle},
      {5, "transliteration vocabulary", 5.0, vocabulary_constraint},
      {6, "retrieval", 30.0, retrieval_oracle},
      {7, "evaluation", 5.0, evaluation_oracle},
      {8, "planted-answer CLIR", 60.0, planted_answers},
      {9, "determinism", 0.0, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0.0 || secs < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    all = all && pass;
    std::printf("criterion %d %s: %s (%s; %.3fs", c.number, c.name, pass ? "PASS" : "FAIL",
                outcome.detail.c_str(), secs);
    if (c.limit_seconds > 0) std::printf(" of %.0fs", c.limit_seconds);
    std::printf(")\n");
  }
  return all ? 0 : 1;
}
