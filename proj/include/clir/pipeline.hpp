#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clir/compound_translation.hpp"
#include "clir/config.hpp"
#include "clir/evaluation.hpp"
#include "clir/language_model.hpp"
#include "clir/lexicon.hpp"
#include "clir/retrieval.hpp"
#include "clir/transliteration.hpp"

namespace clir {

// File names written under the output directory by build-dicts.
namespace files {
inline constexpr const char* kLexiconJaEn = "lexicon_ja_en.tsv";
inline constexpr const char* kLexiconEnJa = "lexicon_en_ja.tsv";
inline constexpr const char* kSkippedPairs = "skipped_pairs.tsv";
inline constexpr const char* kSymbols = "symbols.tsv";
inline constexpr const char* kSymbolLmEn = "symbol_lm_en.tsv";
inline constexpr const char* kSymbolLmJa = "symbol_lm_ja.tsv";
inline constexpr const char* kLmEn = "lm_en.tsv";
inline constexpr const char* kLmJa = "lm_ja.tsv";
}  // namespace files

struct Query {
  std::string id;
  std::string text;
};

// `query_id \t text` lines; '#' comments.
std::vector<Query> load_queries(const std::filesystem::path& path);

StopwordSet configured_stopwords(const ExperimentConfig& cfg);
RomanizationTable configured_romanization(const ExperimentConfig& cfg);
LetterSimilarityTable configured_letter_table(const ExperimentConfig& cfg);

// Sequences for the word bigram model: one per document field, in index-term
// form for English and as lexicon base words for Japanese.
std::vector<std::vector<std::string>> language_model_sequences(
    const std::vector<Document>& docs, Language language, const FieldSelection& fields,
    const StopwordSet& stopwords, const BaseWordLexicon& ja_en);

// Models read back from the output directory for translation.
class TranslationModels {
 public:
  // Loads the lexicon and language model for the configured direction, the
  // symbol lexicon when transliteration is on, and the index vocabulary.
  static TranslationModels load(const ExperimentConfig& cfg);

  TranslationContext context() const;
  const InvertedIndex& index() const { return index_; }
  Language source_language() const { return clir::source_language(direction_); }

 private:
  Direction direction_ = Direction::kJaToEn;
  TranslationConfig config_;
  RomanizationTable romanization_;
  std::unique_ptr<ChannelModel> channel_;
  BigramModel target_lm_;
  std::unique_ptr<SymbolLexicon> symbols_;
  InvertedIndex index_;
  std::vector<std::string> vocabulary_;
};

// Each command returns a one-line summary for stdout.
std::string cmd_index(const ExperimentConfig& cfg);
std::string cmd_build_dicts(const ExperimentConfig& cfg);
std::string cmd_translate(const ExperimentConfig& cfg, std::istream& in, std::ostream& out,
                          std::ostream& log);
std::string cmd_transliterate(const ExperimentConfig& cfg, std::istream& in,
                              std::ostream& out, std::ostream& log);
std::string cmd_search(const ExperimentConfig& cfg, std::ostream& log);
std::string cmd_eval(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace clir
