#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clir/text_segmentation.hpp"

namespace clir {

enum class Direction { kJaToEn, kEnToJa };

std::string_view direction_name(Direction d);  // "ja-en" / "en-ja"
Direction parse_direction(std::string_view name);
Language source_language(Direction d);
Language target_language(Direction d);
Direction reverse(Direction d);

struct TermPair {
  std::string english;
  std::string japanese;
};

// Reads `english \t japanese` lines. Blank and '#' lines are ignored; any
// other malformed line is a data error naming its line number.
std::vector<TermPair> load_term_pairs(const std::filesystem::path& path);

// Source base word -> target base word -> collocation count.
class BaseWordLexicon {
 public:
  using TargetCounts = std::map<std::string, std::int64_t>;

  BaseWordLexicon() = default;
  explicit BaseWordLexicon(Direction direction) : direction_(direction) {}

  Direction direction() const { return direction_; }

  void add(const std::string& source, const std::string& target,
           std::int64_t count = 1);

  bool contains_source(std::string_view source) const;
  std::int64_t count(std::string_view source, std::string_view target) const;

  // Empty map when `source` is unknown.
  const TargetCounts& targets(std::string_view source) const;

  const std::map<std::string, TargetCounts, std::less<>>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }
  std::size_t pair_count() const;

  BaseWordLexicon transpose() const;

  // `source \t target \t count`, sorted by source then descending count.
  std::string to_tsv() const;
  static BaseWordLexicon from_tsv(std::string_view contents, Direction direction);

  bool operator==(const BaseWordLexicon&) const = default;

 private:
  Direction direction_ = Direction::kJaToEn;
  std::map<std::string, TargetCounts, std::less<>> entries_;
};

// Every licensed way to cut `japanese` into `parts` non-empty pieces. Cuts
// fall on character-class boundaries when that is possible; otherwise the
// candidates with the fewest run-internal cuts are returned.
std::vector<std::vector<std::string>> split_japanese_entry(
    std::string_view japanese, std::size_t parts);

// Picks one candidate: all parts known beats fewer known parts, then the
// longest known first part, then the leftmost cuts.
std::vector<std::string> choose_segmentation(
    const std::vector<std::vector<std::string>>& candidates,
    const std::set<std::string, std::less<>>& known_base_words);

struct SkippedPair {
  TermPair pair;
  std::string reason;
};

struct LexiconBuildOptions {
  std::size_t min_words = 1;
  std::size_t max_words = 3;
};

struct LexiconBuild {
  BaseWordLexicon lexicon;
  std::vector<SkippedPair> skipped;
};

// English sides are tokenized without stopwords, so term words and index
// terms share one normalization.
std::vector<std::string> english_base_words(std::string_view english);

LexiconBuild build_lexicon(const std::vector<TermPair>& pairs, Direction direction,
                           const LexiconBuildOptions& options = {});

std::string skipped_report_tsv(const std::vector<SkippedPair>& skipped);

// P(s|t) estimator over a lexicon.
class ChannelModel {
 public:
  ChannelModel(BaseWordLexicon lexicon, double epsilon = 0.01,
               double transliteration_prob = 0.001);

  const BaseWordLexicon& lexicon() const { return lexicon_; }
  double epsilon() const { return epsilon_; }
  double transliteration_prob() const { return transliteration_prob_; }

  bool knows_target(std::string_view target) const;
  std::int64_t target_total(std::string_view target) const;
  // Distinct sources seen with `target`, plus one for the unseen event.
  std::int64_t target_support(std::string_view target) const;

  // Targets of `source` ranked by descending P(source|target), ties by
  // target string.
  std::vector<std::pair<std::string, double>> translations(
      std::string_view source) const;

 private:
  struct TargetStats {
    std::int64_t total = 0;
    std::int64_t distinct_sources = 0;
  };

  BaseWordLexicon lexicon_;
  double epsilon_;
  double transliteration_prob_;
  std::unordered_map<std::string, TargetStats> target_stats_;
};

// (count(s,t) + eps) / (count(.,t) + eps * V_t); the transliteration floor
// when `transliterated`; 0 for unknown t.
double channel_prob(const ChannelModel& model, std::string_view source,
                    std::string_view target, bool transliterated = false);

}  // namespace clir
