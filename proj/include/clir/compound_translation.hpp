#pragma once

#include <string>
#include <vector>

#include "clir/language_model.hpp"
#include "clir/lexicon.hpp"
#include "clir/text_segmentation.hpp"
#include "clir/transliteration.hpp"

namespace clir {

struct SegmentPiece {
  std::string surface;
  bool in_lexicon = false;
  bool needs_transliteration = false;

  bool operator==(const SegmentPiece&) const = default;
};

struct Segmentation {
  std::vector<SegmentPiece> pieces;

  bool operator==(const Segmentation&) const = default;
};

// Japanese sources: every segmentation into lexicon base words, with
// katakana (or Latin) stretches outside the lexicon admitted as pieces to
// transliterate. Only the segmentations that leave the fewest characters to
// transliterate, and among those use the fewest pieces, are returned.
// English sources: one piece per token. Empty means untranslatable.
std::vector<Segmentation> segment_minimal(const ContentWord& word,
                                          const BaseWordLexicon& lexicon,
                                          Direction direction);

struct TranslationConfig {
  std::size_t k = 3;                // k-best size
  std::size_t per_word_cap = 16;    // lexicon translations per position
  std::size_t transliteration_k = 10;
  bool transliteration = true;      // off: pieces to transliterate are dropped

  void validate() const;
};

struct TranslationCandidate {
  std::vector<std::string> words;
  double log_score = 0.0;

  bool operator==(const TranslationCandidate&) const = default;
};

// Space-joined target words; also the deduplication key.
std::string candidate_key(const TranslationCandidate& c);

struct LatticeOption {
  std::string target;
  double log_channel = 0.0;
};

using Lattice = std::vector<std::vector<LatticeOption>>;

// Exact k-best paths through a lattice scored by
//   log P(s_1|t_1) + sum_{i>1} [log P(t_i|t_{i-1}) + log P(s_i|t_i)],
// accumulated left to right. Sorted by descending score, then by word
// sequence. Returns at least the top k (more when the k-th is tied).
std::vector<TranslationCandidate> kbest_paths(const Lattice& lattice,
                                              const BigramModel& prior,
                                              std::size_t k);

// Everything a translation call reads. All references must outlive it.
struct TranslationContext {
  Direction direction;
  const ChannelModel& channel;
  const BigramModel& target_prior;
  const SymbolLexicon* symbols;  // nullptr disables transliteration
  const RomanizationTable& romanization;
  const std::vector<std::string>& target_vocabulary;  // sorted, unique
  TranslationConfig config;
};

struct KBestResult {
  std::vector<TranslationCandidate> candidates;
  std::vector<std::string> warnings;
};

// Transliteration candidates for one piece; channel terms use the fixed
// transliteration probability.
std::vector<LatticeOption> transliteration_options(const std::string& piece,
                                                   const TranslationContext& ctx);

Lattice build_lattice(const Segmentation& seg, const TranslationContext& ctx,
                      std::vector<std::string>* warnings);

KBestResult translate_kbest(const ContentWord& word, const TranslationContext& ctx);

struct QueryTranslation {
  std::vector<std::string> terms;  // multiset, in emission order
  std::vector<std::string> warnings;
};

// Single listed base words contribute all their translations, a single
// piece to transliterate contributes all its transliterations, and
// compounds contribute the words of their k-best candidates. Throws
// data_error("empty translated query") when nothing survives.
QueryTranslation translate_query(const std::vector<ContentWord>& words,
                                 const TranslationContext& ctx);

}  // namespace clir
