#pragma once

// In-process full pipeline runs over the bundled data.

#include <filesystem>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <stdlib.h>

#include "clir/config.hpp"
#include "clir/evaluation.hpp"
#include "clir/io.hpp"
#include "clir/pipeline.hpp"
#include "fixtures.hpp"

namespace fixture {

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::string pattern = (std::filesystem::temp_directory_path() / ("clir-" + tag + "-XXXXXX")).string();
    if (!mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

struct PipelineOutput {
  clir::ExperimentConfig config;
  std::string run;
  std::string report;
  std::string index;
  std::string lexicon;
  std::string log;
};

// index, build-dicts, search and eval into `out_dir`; `overrides` are
// config key/value pairs applied after loading.
inline PipelineOutput run_pipeline(const std::filesystem::path& config_file,
                                   const std::filesystem::path& out_dir,
                                   const std::map<std::string, std::string>& overrides = {}) {
  auto cfg = clir::ExperimentConfig::load(config_file);
  cfg.set("output_dir", out_dir.string(), out_dir);
  for (const auto& [k, v] : overrides) cfg.set(k, v, out_dir);
  cfg.validate();
  std::ostringstream log;
  clir::cmd_index(cfg);
  if (cfg.mode == clir::SearchMode::kTranslate) clir::cmd_build_dicts(cfg);
  clir::cmd_search(cfg, log);
  clir::cmd_eval(cfg, log);
  PipelineOutput out;
  out.config = cfg;
  out.run = clir::io::read_file(cfg.run_path());
  out.report = clir::io::read_file(cfg.report_path());
  out.index = clir::io::read_file(cfg.index_path());
  if (cfg.mode == clir::SearchMode::kTranslate) {
    out.lexicon = clir::io::read_file(cfg.dict_path(clir::files::kLexiconJaEn));
  }
  out.log = log.str();
  return out;
}

struct Planted {
  std::string query;
  std::string doc;
  bool needs_transliteration = false;
};

inline std::vector<Planted> planted_answers(const std::filesystem::path& dir = data_dir()) {
  std::vector<Planted> out;
  for (const auto& line : clir::io::read_lines(dir / "planted.tsv")) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = clir::io::split(line, '\t');
    if (f.size() != 3) throw std::runtime_error("bad planted.tsv line: " + line);
    out.push_back({f[0], f[1], f[2] == "transliteration"});
  }
  return out;
}

// Unrounded average precision per query, recomputed from a run file.
inline std::map<std::string, double> exact_ap(const std::string& run_text,
                                              const std::filesystem::path& qrels) {
  const auto report = clir::evaluate(clir::parse_run(run_text), clir::Judgments::load(qrels));
  std::map<std::string, double> out;
  for (const auto& q : report.queries) out[q.query_id] = q.average_precision;
  return out;
}

}  // namespace fixture
