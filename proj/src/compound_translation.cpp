#include "clir/compound_translation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "clir/error.hpp"
#include "clir/utf8.hpp"

namespace clir {

namespace {

constexpr std::size_t kMaxSegmentations = 64;

bool is_small_or_long_mark(char32_t c) {
  switch (c) {
    case 0x30A1: case 0x30A3: case 0x30A5: case 0x30A7: case 0x30A9:
    case 0x30E3: case 0x30E5: case 0x30E7: case 0x30EE: case 0x30FC:
      return true;
    default:
      return false;
  }
}

struct Cost {
  std::size_t transliterated_chars = 0;
  std::size_t pieces = 0;

  auto operator<=>(const Cost&) const = default;
  Cost operator+(const Cost& o) const {
    return {transliterated_chars + o.transliterated_chars, pieces + o.pieces};
  }
};

std::vector<Segmentation> segment_japanese_word(const std::string& text,
                                                const BaseWordLexicon& lexicon) {
  const auto cps = utf8::decode(text);
  const std::size_t n = cps.size();
  if (n == 0) return {};

  // piece[i][k]: piece kind for chars [i, k).
  enum class Kind { kNone, kLexicon, kTransliterate };
  std::vector<std::vector<Kind>> kind(n, std::vector<Kind>(n + 1, Kind::kNone));
  std::vector<std::vector<std::string>> surface(n, std::vector<std::string>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    std::string acc;
    std::optional<CharClass> script;
    bool uniform = true;
    for (std::size_t k = i + 1; k <= n; ++k) {
      acc += cps[k - 1].bytes;
      surface[i][k] = acc;
      const CharClass cls = classify_char(cps[k - 1].value);
      if (!script) script = cls;
      uniform = uniform && cls == *script;
      if (lexicon.contains_source(acc)) {
        kind[i][k] = Kind::kLexicon;
      } else if (uniform && (*script == CharClass::kKatakana || *script == CharClass::kLatin)) {
        const bool clean_start = !is_small_or_long_mark(cps[i].value);
        const bool clean_end = cps[k - 1].value != 0x30C3;  // ッ
        if (clean_start && clean_end) kind[i][k] = Kind::kTransliterate;
      }
    }
  }

  const Cost kInf{std::numeric_limits<std::size_t>::max() / 4,
                  std::numeric_limits<std::size_t>::max() / 4};
  std::vector<Cost> best(n + 1, kInf);
  best[n] = Cost{};
  auto piece_cost = [&](std::size_t i, std::size_t k) {
    return kind[i][k] == Kind::kLexicon ? Cost{0, 1} : Cost{k - i, 1};
  };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = i + 1; k <= n; ++k) {
      if (kind[i][k] == Kind::kNone || best[k] == kInf) continue;
      best[i] = std::min(best[i], piece_cost(i, k) + best[k]);
    }
  }
  if (best[0] == kInf) return {};

  std::vector<Segmentation> out;
  Segmentation current;
  auto enumerate = [&](auto&& self, std::size_t i) -> void {
    if (out.size() >= kMaxSegmentations) return;
    if (i == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t k = i + 1; k <= n; ++k) {
      if (kind[i][k] == Kind::kNone || best[k] == kInf) continue;
      if (piece_cost(i, k) + best[k] != best[i]) continue;
      const bool lex = kind[i][k] == Kind::kLexicon;
      current.pieces.push_back({surface[i][k], lex, !lex});
      self(self, k);
      current.pieces.pop_back();
    }
  };
  enumerate(enumerate, 0);
  return out;
}

bool is_ascii_word(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool word_order_less(const TranslationCandidate& a, const TranslationCandidate& b) {
  if (a.log_score != b.log_score) return a.log_score > b.log_score;
  return a.words < b.words;
}

// Emits the index terms a target word sequence contributes.
std::vector<std::string> target_terms(const std::vector<std::string>& words,
                                      Language target) {
  if (target == Language::kEnglish) return words;
  // Japanese targets are indexed as character-class runs, so the candidate
  // is rejoined and split the way documents are.
  std::string joined;
  for (const auto& w : words) joined += w;
  return index_terms(joined, Language::kJapanese, {});
}

}  // namespace

std::vector<Segmentation> segment_minimal(const ContentWord& word,
                                          const BaseWordLexicon& lexicon,
                                          Direction direction) {
  if (word.tokens.empty()) return {};
  if (direction == Direction::kEnToJa) {
    Segmentation seg;
    for (const auto& tok : word.tokens) {
      const bool lex = lexicon.contains_source(tok.surface);
      seg.pieces.push_back({tok.surface, lex, !lex});
    }
    return {seg};
  }
  const std::string text = word.text();
  auto segs = segment_japanese_word(text, lexicon);
  if (!segs.empty()) return segs;
  return {};
}

void TranslationConfig::validate() const {
  if (k < 1) throw usage_error("k must be >= 1");
  if (per_word_cap < 1) throw usage_error("per-word candidate cap must be >= 1");
  if (transliteration_k < 1) throw usage_error("transliteration k must be >= 1");
}

std::string candidate_key(const TranslationCandidate& c) {
  std::string key;
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    if (i > 0) key.push_back(' ');
    key += c.words[i];
  }
  return key;
}

std::vector<TranslationCandidate> kbest_paths(const Lattice& lattice,
                                              const BigramModel& prior,
                                              std::size_t k) {
  struct Hyp {
    double score;
    std::vector<std::size_t> path;
  };
  if (lattice.empty() || k == 0) return {};
  for (const auto& pos : lattice) {
    if (pos.empty()) return {};
  }

  auto words_of = [&](const std::vector<std::size_t>& path) {
    std::vector<std::string> w;
    w.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) w.push_back(lattice[i][path[i]].target);
    return w;
  };
  auto hyp_less = [&](const Hyp& a, const Hyp& b) {
    if (a.score != b.score) return a.score > b.score;
    for (std::size_t i = 0; i < a.path.size(); ++i) {
      const auto& wa = lattice[i][a.path[i]].target;
      const auto& wb = lattice[i][b.path[i]].target;
      if (wa != wb) return wa < wb;
    }
    return false;
  };
  // Keeps the top k, plus anything that rounding could still tie with the
  // k-th once a common suffix is added.
  auto prune = [&](std::vector<Hyp>& hyps) {
    std::sort(hyps.begin(), hyps.end(), hyp_less);
    if (hyps.size() <= k) return;
    const double kth = hyps[k - 1].score;
    const double slack = 1e-9 * std::max(1.0, std::abs(kth));
    std::size_t keep = k;
    while (keep < hyps.size() && hyps[keep].score >= kth - slack) ++keep;
    hyps.resize(keep);
  };

  std::vector<std::vector<Hyp>> nodes(lattice[0].size());
  for (std::size_t o = 0; o < lattice[0].size(); ++o) {
    double start = lattice[0][o].log_channel;
    if (prior.use_boundary()) {
      start = log_cond_prob(prior, BigramModel::kSentinel, lattice[0][o].target) + start;
    }
    nodes[o].push_back({start, {o}});
  }
  for (std::size_t i = 1; i < lattice.size(); ++i) {
    std::vector<std::vector<Hyp>> next(lattice[i].size());
    for (std::size_t o = 0; o < lattice[i].size(); ++o) {
      const auto& opt = lattice[i][o];
      for (std::size_t p = 0; p < lattice[i - 1].size(); ++p) {
        const double transition =
            log_cond_prob(prior, lattice[i - 1][p].target, opt.target);
        for (const auto& h : nodes[p]) {
          Hyp ext{h.score + transition + opt.log_channel, h.path};
          ext.path.push_back(o);
          next[o].push_back(std::move(ext));
        }
      }
      prune(next[o]);
    }
    nodes = std::move(next);
  }

  std::vector<Hyp> finals;
  for (auto& node : nodes) {
    for (auto& h : node) finals.push_back(std::move(h));
  }
  prune(finals);
  std::vector<TranslationCandidate> out;
  out.reserve(finals.size());
  for (const auto& h : finals) out.push_back({words_of(h.path), h.score});
  return out;
}

std::vector<LatticeOption> transliteration_options(const std::string& piece,
                                                   const TranslationContext& ctx) {
  std::vector<LatticeOption> out;
  const double log_tr = std::log(ctx.channel.transliteration_prob());
  if (ctx.direction == Direction::kJaToEn && is_ascii_word(piece)) {
    // Latin text inside Japanese already is the English form.
    std::string lower = ascii_lower(piece);
    if (std::binary_search(ctx.target_vocabulary.begin(),
                           ctx.target_vocabulary.end(), lower)) {
      out.push_back({std::move(lower), log_tr});
    }
    return out;
  }
  if (ctx.symbols == nullptr) return out;
  const std::string source =
      ctx.direction == Direction::kEnToJa ? ascii_lower(piece) : piece;
  for (auto& cand : transliterate(source, ctx.direction, *ctx.symbols,
                                  ctx.target_vocabulary,
                                  ctx.config.transliteration_k, ctx.romanization)) {
    out.push_back({std::move(cand.word), log_tr});
  }
  return out;
}

Lattice build_lattice(const Segmentation& seg, const TranslationContext& ctx,
                      std::vector<std::string>* warnings) {
  Lattice lattice;
  for (const auto& piece : seg.pieces) {
    std::vector<LatticeOption> options;
    if (piece.in_lexicon) {
      for (auto& [target, p] : ctx.channel.translations(piece.surface)) {
        if (options.size() >= ctx.config.per_word_cap) break;
        options.push_back({target, std::log(p)});
      }
    } else if (ctx.config.transliteration) {
      options = transliteration_options(piece.surface, ctx);
      if (options.empty() && warnings) {
        warnings->push_back("no transliteration for '" + piece.surface + "'");
      }
    } else if (warnings) {
      warnings->push_back("dropped '" + piece.surface + "' (transliteration disabled)");
    }
    if (!options.empty()) lattice.push_back(std::move(options));
  }
  return lattice;
}

KBestResult translate_kbest(const ContentWord& word, const TranslationContext& ctx) {
  KBestResult result;
  const auto segs = segment_minimal(word, ctx.channel.lexicon(), ctx.direction);
  if (segs.empty()) {
    result.warnings.push_back("untranslatable: '" + word.text() + "' (no segmentation)");
    return result;
  }
  std::map<std::string, TranslationCandidate> best_by_key;
  for (const auto& seg : segs) {
    const Lattice lattice = build_lattice(seg, ctx, &result.warnings);
    if (lattice.empty()) continue;
    for (auto& cand : kbest_paths(lattice, ctx.target_prior, ctx.config.k)) {
      const std::string key = candidate_key(cand);
      auto it = best_by_key.find(key);
      if (it == best_by_key.end()) {
        best_by_key.emplace(key, std::move(cand));
      } else if (word_order_less(cand, it->second)) {
        it->second = std::move(cand);
      }
    }
  }
  for (auto& [key, cand] : best_by_key) result.candidates.push_back(std::move(cand));
  std::sort(result.candidates.begin(), result.candidates.end(), word_order_less);
  if (result.candidates.size() > ctx.config.k) result.candidates.resize(ctx.config.k);
  if (result.candidates.empty()) {
    result.warnings.push_back("untranslatable: '" + word.text() + "'");
  }
  return result;
}

QueryTranslation translate_query(const std::vector<ContentWord>& words,
                                 const TranslationContext& ctx) {
  QueryTranslation out;
  const Language target = target_language(ctx.direction);
  auto emit = [&](const std::vector<std::string>& target_words,
                  std::set<std::string>& seen) {
    for (auto& term : target_terms(target_words, target)) {
      if (seen.insert(term).second) out.terms.push_back(term);
    }
  };

  for (const auto& word : words) {
    std::set<std::string> seen;
    const auto segs = segment_minimal(word, ctx.channel.lexicon(), ctx.direction);
    if (segs.empty()) {
      out.warnings.push_back("untranslatable: '" + word.text() + "' (no segmentation)");
      continue;
    }
    if (segs.size() == 1 && segs[0].pieces.size() == 1) {
      const SegmentPiece& piece = segs[0].pieces[0];
      std::size_t before = out.terms.size();
      if (piece.in_lexicon) {
        for (const auto& [t, p] : ctx.channel.translations(piece.surface)) emit({t}, seen);
      } else if (ctx.config.transliteration) {
        for (const auto& opt : transliteration_options(piece.surface, ctx)) {
          emit({opt.target}, seen);
        }
      } else {
        out.warnings.push_back("dropped '" + piece.surface +
                               "' (transliteration disabled)");
        continue;
      }
      if (out.terms.size() == before) {
        out.warnings.push_back("untranslatable: '" + word.text() + "'");
      }
      continue;
    }
    KBestResult kb = translate_kbest(word, ctx);
    for (auto& w : kb.warnings) out.warnings.push_back(std::move(w));
    for (const auto& cand : kb.candidates) emit(cand.words, seen);
  }
  if (out.terms.empty()) throw data_error("empty translated query");
  return out;
}

}  // namespace clir
