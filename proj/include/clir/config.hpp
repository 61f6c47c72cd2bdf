#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "clir/evaluation.hpp"
#include "clir/lexicon.hpp"
#include "clir/retrieval.hpp"

namespace clir {

enum class SearchMode { kTranslate, kMonolingual };

// Experiment settings. Files are `key = value` lines under `[paths]` and
// `[params]` headers; relative paths resolve against the file's directory.
struct ExperimentConfig {
  // [paths]
  std::vector<std::filesystem::path> corpus;     // comma list
  std::vector<std::filesystem::path> lm_corpus;  // defaults to corpus
  std::filesystem::path term_pairs;
  std::filesystem::path translit_pairs;
  std::filesystem::path stopwords_en;  // empty: built-in list
  std::filesystem::path romanization;  // empty: built-in table
  std::filesystem::path similar_letters;
  std::filesystem::path queries;
  std::filesystem::path qrels;
  std::filesystem::path output_dir = "out";
  std::filesystem::path index;  // empty: <output_dir>/index.txt
  std::filesystem::path run;    // empty: <output_dir>/run.txt
  std::filesystem::path report;  // empty: <output_dir>/report.tsv

  // [params]
  std::size_t k = 3;
  std::size_t k_tr = 10;
  std::size_t m = 16;
  std::size_t n_top = kDefaultTopN;
  double epsilon_channel = 0.01;
  double epsilon_lm = 0.01;
  double epsilon_symbol = 0.01;
  double p_tr = 0.001;
  bool use_boundary = false;
  bool transliteration = true;
  Direction direction = Direction::kJaToEn;
  Binarization binarization = Binarization::kLenient;
  SearchMode mode = SearchMode::kTranslate;
  FieldSelection fields;

  static ExperimentConfig parse(std::string_view contents,
                                const std::filesystem::path& base_dir,
                                const std::string& source_name = "config");
  static ExperimentConfig load(const std::filesystem::path& path);

  // Applies one `key=value` override; relative paths resolve against
  // `base_dir`. Throws usage_error on unknown keys or bad values.
  void set(std::string_view key, std::string_view value,
           const std::filesystem::path& base_dir);

  // Range checks on every parameter.
  void validate() const;

  std::filesystem::path index_path() const;
  std::filesystem::path run_path() const;
  std::filesystem::path report_path() const;
  std::filesystem::path dict_path(std::string_view file) const;
  const std::vector<std::filesystem::path>& language_model_corpus() const;
};

// Throws data_error naming `what` when `path` is unset or missing.
void require_file(const std::filesystem::path& path, std::string_view what);

}  // namespace clir
