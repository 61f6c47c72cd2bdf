#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clir/language_model.hpp"
#include "clir/lexicon.hpp"

namespace clir {

// One katakana "character" in the transliteration sense: a mora such as
// テ, ショ, ット or ワー, with its romanized letters.
struct KanaUnit {
  std::string surface;
  std::string romaji;

  bool operator==(const KanaUnit&) const = default;
};

// Hepburn-style katakana romanization. Keys are single katakana or
// two-character combinations (ショ, ティ, ...). A sokuon prefixes the doubled
// first consonant of the next mora and a long-vowel mark repeats the
// previous vowel, so データ -> dee|ta and ネットワーク -> ne|tto|waa|ku.
class RomanizationTable {
 public:
  static const RomanizationTable& default_table();
  // `katakana \t romaji` per line; '#' comments.
  static RomanizationTable load(const std::filesystem::path& path);

  void set(std::string katakana, std::string romaji);
  std::optional<std::string> lookup(std::string_view katakana) const;
  std::size_t size() const { return entries_.size(); }

  // nullopt when some character has no romanization.
  std::optional<std::vector<KanaUnit>> units(std::string_view katakana) const;

 private:
  std::unordered_map<std::string, std::string> entries_;
};

// Letter similarity: 3 identical, 2 phonetically similar, 1 both vowels or
// both consonants, 0 otherwise. '$' is similar only to itself.
class LetterSimilarityTable {
 public:
  static constexpr char kTerminal = '$';

  static const LetterSimilarityTable& default_table();
  // One `e j` pair per line; '#' comments.
  static LetterSimilarityTable load(const std::filesystem::path& path);

  void add_similar(char a, char b);
  bool similar(char a, char b) const;
  static bool is_vowel(char c);
  static bool is_consonant(char c);

  int similarity(char e, char j) const;

  std::size_t pair_count() const { return similar_.size() / 2; }

 private:
  std::set<std::pair<char, char>> similar_;
};

// English letters down the rows, romanized katakana letters across the
// columns, both terminated by '$'.
struct AlignmentGrid {
  std::string rows;
  std::string cols;
  std::vector<std::size_t> col_unit;  // owning mora; units.size() for '$'
  std::vector<bool> unit_start;       // first column of its mora

  std::size_t height() const { return rows.size(); }
  std::size_t width() const { return cols.size(); }
};

AlignmentGrid make_alignment_grid(std::string_view english,
                                  const std::vector<KanaUnit>& units);

struct SymbolPair {
  std::string english;
  std::string katakana;

  bool operator==(const SymbolPair&) const = default;
  auto operator<=>(const SymbolPair&) const = default;
};

enum class Step { kDiagonal, kRight, kDown };

struct Alignment {
  std::vector<SymbolPair> pairs;
  int score = 0;
  std::vector<std::pair<std::size_t, std::size_t>> path;  // (row, col)
};

// Score of a path: the similarity of the start cell plus that of every cell
// entered diagonally. Right steps advance the katakana side, down steps the
// English side.
int path_score(const AlignmentGrid& grid, const LetterSimilarityTable& table,
               const std::vector<std::pair<std::size_t, std::size_t>>& path);

// Maximum-score monotone path over the grid, preferring diagonal, then right,
// then down among equal continuations. The path is cut into symbol pairs
// wherever a diagonal step enters both a new English letter and the first
// column of a new mora.
Alignment align(std::string_view english, const std::vector<KanaUnit>& units,
                const LetterSimilarityTable& table);

// Convenience overload; throws data_error when `katakana` cannot be
// romanized or either side is empty.
Alignment align(std::string_view english, std::string_view katakana,
                const RomanizationTable& romanization,
                const LetterSimilarityTable& table);

struct TransliterationPair {
  std::string english;
  std::string katakana;
};

std::vector<TransliterationPair> load_transliteration_pairs(
    const std::filesystem::path& path);

// Symbol-pair counts plus the estimators fitted over them.
class SymbolLexicon {
 public:
  using PairCounts = std::map<SymbolPair, std::int64_t>;

  SymbolLexicon(PairCounts counts, BigramModel english_prior,
                BigramModel katakana_prior, double epsilon,
                const RomanizationTable& romanization);

  const PairCounts& counts() const { return counts_; }
  std::int64_t count(std::string_view english, std::string_view katakana) const;
  std::set<std::string> english_groups() const;
  std::set<std::string> katakana_groups() const;

  // P(katakana group | english group) and P(english group | katakana group).
  const ChannelModel& katakana_given_english() const { return kata_given_en_; }
  const ChannelModel& english_given_katakana() const { return en_given_kata_; }
  const BigramModel& english_prior() const { return english_prior_; }
  const BigramModel& katakana_prior() const { return katakana_prior_; }

  // Mora decomposition of a katakana group, as stored at build time.
  const std::vector<std::string>& group_units(const std::string& katakana) const;

  // `english_group \t katakana_group \t count`
  std::string to_tsv() const;
  static PairCounts counts_from_tsv(std::string_view contents);

 private:
  PairCounts counts_;
  BigramModel english_prior_;
  BigramModel katakana_prior_;
  ChannelModel kata_given_en_;
  ChannelModel en_given_kata_;
  std::unordered_map<std::string, std::vector<std::string>> group_units_;
};

struct SymbolLexiconBuild {
  SymbolLexicon lexicon;
  std::vector<Alignment> alignments;
  std::vector<std::pair<TransliterationPair, std::string>> skipped;
};

SymbolLexiconBuild build_symbol_lexicon(const std::vector<TransliterationPair>& pairs,
                                        const RomanizationTable& romanization,
                                        const LetterSimilarityTable& table,
                                        double epsilon = 0.01);

struct TransliterationCandidate {
  std::string word;
  double log_score = 0.0;

  bool operator==(const TransliterationCandidate&) const = default;
};

// Best joint segmentation score of (source, target) into lexicon symbol
// pairs: sum of log channel terms plus log transitions between consecutive
// target symbols. nullopt when no complete segmentation exists.
std::optional<double> transliteration_score(std::string_view source,
                                            std::string_view target,
                                            Direction direction,
                                            const SymbolLexicon& lexicon,
                                            const RomanizationTable& romanization);

// Scores every vocabulary word of the target script and returns the top
// `k` (descending score, ties by word). Results are always vocabulary words.
std::vector<TransliterationCandidate> transliterate(
    std::string_view source, Direction direction, const SymbolLexicon& lexicon,
    const std::vector<std::string>& vocabulary, std::size_t k,
    const RomanizationTable& romanization);

// Atoms used on each side of the symbol segmentation: letters for English,
// moras for katakana. nullopt when the word is not in the expected script.
std::optional<std::vector<std::string>> english_atoms(std::string_view word);
std::optional<std::vector<std::string>> katakana_atoms(
    std::string_view word, const RomanizationTable& romanization);

}  // namespace clir
