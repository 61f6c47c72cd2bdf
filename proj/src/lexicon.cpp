#include "clir/lexicon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "clir/error.hpp"
#include "clir/io.hpp"
#include "clir/utf8.hpp"

namespace clir {

std::string_view direction_name(Direction d) {
  return d == Direction::kJaToEn ? "ja-en" : "en-ja";
}

Direction parse_direction(std::string_view name) {
  if (name == "ja-en") return Direction::kJaToEn;
  if (name == "en-ja") return Direction::kEnToJa;
  throw usage_error("unknown direction '" + std::string(name) +
                    "' (expected ja-en or en-ja)");
}

Language source_language(Direction d) {
  return d == Direction::kJaToEn ? Language::kJapanese : Language::kEnglish;
}

Language target_language(Direction d) {
  return d == Direction::kJaToEn ? Language::kEnglish : Language::kJapanese;
}

Direction reverse(Direction d) {
  return d == Direction::kJaToEn ? Direction::kEnToJa : Direction::kJaToEn;
}

std::vector<TermPair> load_term_pairs(const std::filesystem::path& path) {
  std::vector<TermPair> pairs;
  const auto lines = io::read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (io::trim(line).empty() || line.front() == '#') continue;
    auto fields = io::split(line, '\t');
    if (fields.size() != 2 || io::trim(fields[0]).empty() ||
        io::trim(fields[1]).empty()) {
      throw data_error(path.string() + ":" + std::to_string(i + 1) +
                       ": malformed term pair line (expected english<TAB>japanese)");
    }
    pairs.push_back({std::string(io::trim(fields[0])),
                     std::string(io::trim(fields[1]))});
  }
  return pairs;
}

// ---------------------------------------------------------------------------
// BaseWordLexicon

void BaseWordLexicon::add(const std::string& source, const std::string& target,
                          std::int64_t count) {
  if (count <= 0) return;
  entries_[source][target] += count;
}

bool BaseWordLexicon::contains_source(std::string_view source) const {
  return entries_.find(source) != entries_.end();
}

std::int64_t BaseWordLexicon::count(std::string_view source,
                                    std::string_view target) const {
  auto it = entries_.find(source);
  if (it == entries_.end()) return 0;
  auto jt = it->second.find(std::string(target));
  return jt == it->second.end() ? 0 : jt->second;
}

const BaseWordLexicon::TargetCounts& BaseWordLexicon::targets(
    std::string_view source) const {
  static const TargetCounts kEmpty;
  auto it = entries_.find(source);
  return it == entries_.end() ? kEmpty : it->second;
}

std::size_t BaseWordLexicon::pair_count() const {
  std::size_t n = 0;
  for (const auto& [source, targets] : entries_) n += targets.size();
  return n;
}

BaseWordLexicon BaseWordLexicon::transpose() const {
  BaseWordLexicon out(reverse(direction_));
  for (const auto& [source, targets] : entries_) {
    for (const auto& [target, c] : targets) out.add(target, source, c);
  }
  return out;
}

std::string BaseWordLexicon::to_tsv() const {
  std::ostringstream out;
  for (const auto& [source, targets] : entries_) {
    std::vector<std::pair<std::string, std::int64_t>> rows(targets.begin(),
                                                           targets.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      return a.second > b.second;
    });
    for (const auto& [target, c] : rows) {
      out << source << '\t' << target << '\t' << c << '\n';
    }
  }
  return out.str();
}

BaseWordLexicon BaseWordLexicon::from_tsv(std::string_view contents,
                                          Direction direction) {
  BaseWordLexicon lex(direction);
  std::size_t line_no = 0;
  for (auto line : io::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (io::trim(line).empty() || line.front() == '#') continue;
    auto fields = io::split(line, '\t');
    std::int64_t c = 0;
    bool ok = fields.size() == 3 && !fields[0].empty() && !fields[1].empty();
    if (ok) {
      try {
        std::size_t used = 0;
        c = std::stoll(fields[2], &used);
        ok = used == fields[2].size() && c > 0;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok) {
      throw data_error("lexicon line " + std::to_string(line_no) +
                       ": expected source<TAB>target<TAB>positive count");
    }
    lex.add(fields[0], fields[1], c);
  }
  return lex;
}

// ---------------------------------------------------------------------------
// Dictionary production

namespace {

struct CharSeq {
  std::vector<std::string> chars;
  std::vector<CharClass> classes;
};

CharSeq decode_chars(std::string_view text) {
  CharSeq seq;
  for (const auto& cp : utf8::decode(text)) {
    seq.chars.emplace_back(cp.bytes);
    seq.classes.push_back(classify_char(cp.value));
  }
  return seq;
}

std::string join_range(const std::vector<std::string>& chars, std::size_t b,
                       std::size_t e) {
  std::string out;
  for (std::size_t i = b; i < e; ++i) out += chars[i];
  return out;
}

// Visits every strictly increasing choice of `k` cut positions in [1, len).
template <typename Visit>
void for_each_cut_set(std::size_t len, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> cuts(k);
  auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == k) {
      visit(cuts);
      return;
    }
    for (std::size_t p = from; p + (k - depth - 1) < len; ++p) {
      cuts[depth] = p;
      self(self, depth + 1, p + 1);
    }
  };
  rec(rec, 0, 1);
}

}  // namespace

std::vector<std::vector<std::string>> split_japanese_entry(
    std::string_view japanese, std::size_t parts) {
  if (parts == 0) return {};
  const CharSeq seq = decode_chars(japanese);
  const std::size_t len = seq.chars.size();
  if (len < parts) return {};
  if (parts == 1) return {{std::string(japanese)}};

  std::size_t best_internal = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> best;
  for_each_cut_set(len, parts - 1, [&](const std::vector<std::size_t>& cuts) {
    std::size_t internal = 0;
    for (std::size_t p : cuts) {
      if (seq.classes[p - 1] == seq.classes[p]) ++internal;
    }
    if (internal < best_internal) {
      best_internal = internal;
      best.clear();
    }
    if (internal == best_internal) best.push_back(cuts);
  });

  std::vector<std::vector<std::string>> out;
  out.reserve(best.size());
  for (const auto& cuts : best) {
    std::vector<std::string> pieces;
    std::size_t prev = 0;
    for (std::size_t p : cuts) {
      pieces.push_back(join_range(seq.chars, prev, p));
      prev = p;
    }
    pieces.push_back(join_range(seq.chars, prev, len));
    out.push_back(std::move(pieces));
  }
  return out;
}

std::vector<std::string> choose_segmentation(
    const std::vector<std::vector<std::string>>& candidates,
    const std::set<std::string, std::less<>>& known_base_words) {
  if (candidates.empty()) return {};
  // Candidates arrive with cut sets in lexicographic order, so the first
  // maximum is the leftmost one.
  auto key = [&](const std::vector<std::string>& parts) {
    std::size_t known = 0;
    for (const auto& p : parts) known += known_base_words.count(p);
    const bool all_known = known == parts.size();
    const std::size_t prefix =
        known_base_words.count(parts.front()) ? utf8::length(parts.front()) : 0;
    return std::make_tuple(all_known, known, prefix);
  };
  std::size_t best = 0;
  auto best_key = key(candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    auto k = key(candidates[i]);
    if (k > best_key) {
      best = i;
      best_key = k;
    }
  }
  return candidates[best];
}

std::vector<std::string> english_base_words(std::string_view english) {
  std::vector<std::string> words;
  static const StopwordSet kNone;
  for (auto& tok : tokenize_english(english, kNone)) {
    words.push_back(std::move(tok.surface));
  }
  return words;
}

LexiconBuild build_lexicon(const std::vector<TermPair>& pairs, Direction direction,
                           const LexiconBuildOptions& options) {
  struct Pending {
    const TermPair* pair;
    std::vector<std::string> english;
    std::vector<std::vector<std::string>> candidates;
  };

  LexiconBuild result{BaseWordLexicon(direction), {}};
  std::vector<Pending> pending;
  std::set<std::string, std::less<>> known;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      aligned;

  // Pass 1: unambiguous splits seed the known base-word set.
  for (const auto& pair : pairs) {
    auto english = english_base_words(pair.english);
    const std::string japanese(io::trim(pair.japanese));
    if (english.empty() || japanese.empty()) {
      result.skipped.push_back({pair, "empty side"});
      continue;
    }
    if (english.size() < options.min_words || english.size() > options.max_words) {
      result.skipped.push_back(
          {pair, "english word count " + std::to_string(english.size()) +
                     " outside accepted range"});
      continue;
    }
    auto candidates = split_japanese_entry(japanese, english.size());
    if (candidates.empty()) {
      result.skipped.push_back({pair, "japanese entry shorter than english word count"});
      continue;
    }
    if (candidates.size() == 1) {
      for (const auto& part : candidates.front()) known.insert(part);
      aligned.emplace_back(std::move(english), std::move(candidates.front()));
    } else {
      pending.push_back({&pair, std::move(english), std::move(candidates)});
    }
  }

  // Pass 2: ambiguous cuts resolved against the pass-1 set only, so the
  // result does not depend on input order.
  for (auto& p : pending) {
    aligned.emplace_back(std::move(p.english),
                         choose_segmentation(p.candidates, known));
  }

  for (const auto& [english, japanese] : aligned) {
    for (std::size_t i = 0; i < english.size(); ++i) {
      if (direction == Direction::kJaToEn) {
        result.lexicon.add(japanese[i], english[i]);
      } else {
        result.lexicon.add(english[i], japanese[i]);
      }
    }
  }
  if (result.lexicon.empty()) throw data_error("empty lexicon");
  return result;
}

std::string skipped_report_tsv(const std::vector<SkippedPair>& skipped) {
  std::ostringstream out;
  for (const auto& s : skipped) {
    out << s.pair.english << '\t' << s.pair.japanese << '\t' << s.reason << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Channel model

ChannelModel::ChannelModel(BaseWordLexicon lexicon, double epsilon,
                           double transliteration_prob)
    : lexicon_(std::move(lexicon)),
      epsilon_(epsilon),
      transliteration_prob_(transliteration_prob) {
  if (!(epsilon_ > 0.0)) throw usage_error("smoothing epsilon must be > 0");
  if (!(transliteration_prob_ > 0.0 && transliteration_prob_ < 1.0)) {
    throw usage_error("transliteration probability must lie in (0,1)");
  }
  for (const auto& [source, targets] : lexicon_.entries()) {
    for (const auto& [target, c] : targets) {
      auto& stats = target_stats_[target];
      stats.total += c;
      stats.distinct_sources += 1;
    }
  }
}

bool ChannelModel::knows_target(std::string_view target) const {
  return target_stats_.count(std::string(target)) > 0;
}

std::int64_t ChannelModel::target_total(std::string_view target) const {
  auto it = target_stats_.find(std::string(target));
  return it == target_stats_.end() ? 0 : it->second.total;
}

std::int64_t ChannelModel::target_support(std::string_view target) const {
  auto it = target_stats_.find(std::string(target));
  return it == target_stats_.end() ? 0 : it->second.distinct_sources + 1;
}

std::vector<std::pair<std::string, double>> ChannelModel::translations(
    std::string_view source) const {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [target, c] : lexicon_.targets(source)) {
    out.emplace_back(target, channel_prob(*this, source, target));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

double channel_prob(const ChannelModel& model, std::string_view source,
                    std::string_view target, bool transliterated) {
  if (transliterated) return model.transliteration_prob();
  if (!model.knows_target(target)) return 0.0;
  const double eps = model.epsilon();
  const double num =
      static_cast<double>(model.lexicon().count(source, target)) + eps;
  const double den = static_cast<double>(model.target_total(target)) +
                     eps * static_cast<double>(model.target_support(target));
  return num / den;
}

}  // namespace clir
