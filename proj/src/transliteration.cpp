#include "clir/transliteration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "clir/error.hpp"
#include "clir/io.hpp"
#include "clir/utf8.hpp"

namespace clir {

// ---------------------------------------------------------------------------
// Romanization

namespace {

constexpr char32_t kSokuon = 0x30C3;    // ッ
constexpr char32_t kLongVowel = 0x30FC; // ー

bool is_small_kana(char32_t c) {
  switch (c) {
    case 0x30A1: case 0x30A3: case 0x30A5: case 0x30A7: case 0x30A9:  // ァィゥェォ
    case 0x30E3: case 0x30E5: case 0x30E7:                            // ャュョ
    case 0x30EE:                                                      // ヮ
      return true;
    default:
      return false;
  }
}

bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

RomanizationTable make_default_romanization() {
  static const char* const kRows[][2] = {
      {"ア", "a"},   {"イ", "i"},   {"ウ", "u"},   {"エ", "e"},   {"オ", "o"},
      {"カ", "ka"},  {"キ", "ki"},  {"ク", "ku"},  {"ケ", "ke"},  {"コ", "ko"},
      {"ガ", "ga"},  {"ギ", "gi"},  {"グ", "gu"},  {"ゲ", "ge"},  {"ゴ", "go"},
      {"サ", "sa"},  {"シ", "shi"}, {"ス", "su"},  {"セ", "se"},  {"ソ", "so"},
      {"ザ", "za"},  {"ジ", "ji"},  {"ズ", "zu"},  {"ゼ", "ze"},  {"ゾ", "zo"},
      {"タ", "ta"},  {"チ", "chi"}, {"ツ", "tsu"}, {"テ", "te"},  {"ト", "to"},
      {"ダ", "da"},  {"ヂ", "ji"},  {"ヅ", "zu"},  {"デ", "de"},  {"ド", "do"},
      {"ナ", "na"},  {"ニ", "ni"},  {"ヌ", "nu"},  {"ネ", "ne"},  {"ノ", "no"},
      {"ハ", "ha"},  {"ヒ", "hi"},  {"フ", "fu"},  {"ヘ", "he"},  {"ホ", "ho"},
      {"バ", "ba"},  {"ビ", "bi"},  {"ブ", "bu"},  {"ベ", "be"},  {"ボ", "bo"},
      {"パ", "pa"},  {"ピ", "pi"},  {"プ", "pu"},  {"ペ", "pe"},  {"ポ", "po"},
      {"マ", "ma"},  {"ミ", "mi"},  {"ム", "mu"},  {"メ", "me"},  {"モ", "mo"},
      {"ヤ", "ya"},  {"ユ", "yu"},  {"ヨ", "yo"},
      {"ラ", "ra"},  {"リ", "ri"},  {"ル", "ru"},  {"レ", "re"},  {"ロ", "ro"},
      {"ワ", "wa"},  {"ヰ", "wi"},  {"ヱ", "we"},  {"ヲ", "wo"},  {"ン", "n"},
      {"ヴ", "vu"},
      {"ァ", "a"},   {"ィ", "i"},   {"ゥ", "u"},   {"ェ", "e"},   {"ォ", "o"},
      {"ャ", "ya"},  {"ュ", "yu"},  {"ョ", "yo"},  {"ヮ", "wa"},
      {"ヵ", "ka"},  {"ヶ", "ke"},
      {"キャ", "kya"}, {"キュ", "kyu"}, {"キョ", "kyo"},
      {"ギャ", "gya"}, {"ギュ", "gyu"}, {"ギョ", "gyo"},
      {"シャ", "sha"}, {"シュ", "shu"}, {"ショ", "sho"}, {"シェ", "she"},
      {"ジャ", "ja"},  {"ジュ", "ju"},  {"ジョ", "jo"},  {"ジェ", "je"},
      {"チャ", "cha"}, {"チュ", "chu"}, {"チョ", "cho"}, {"チェ", "che"},
      {"ニャ", "nya"}, {"ニュ", "nyu"}, {"ニョ", "nyo"},
      {"ヒャ", "hya"}, {"ヒュ", "hyu"}, {"ヒョ", "hyo"},
      {"ビャ", "bya"}, {"ビュ", "byu"}, {"ビョ", "byo"},
      {"ピャ", "pya"}, {"ピュ", "pyu"}, {"ピョ", "pyo"},
      {"ミャ", "mya"}, {"ミュ", "myu"}, {"ミョ", "myo"},
      {"リャ", "rya"}, {"リュ", "ryu"}, {"リョ", "ryo"},
      {"ティ", "ti"},  {"トゥ", "tu"},  {"テュ", "tyu"},
      {"ディ", "di"},  {"ドゥ", "du"},  {"デュ", "dyu"},
      {"ファ", "fa"},  {"フィ", "fi"},  {"フェ", "fe"},  {"フォ", "fo"}, {"フュ", "fyu"},
      {"ウィ", "wi"},  {"ウェ", "we"},  {"ウォ", "wo"},
      {"ヴァ", "va"},  {"ヴィ", "vi"},  {"ヴェ", "ve"},  {"ヴォ", "vo"},
      {"ツァ", "tsa"}, {"ツィ", "tsi"}, {"ツェ", "tse"}, {"ツォ", "tso"},
      {"クァ", "kwa"}, {"クォ", "kwo"}, {"グァ", "gwa"},
      {"スィ", "si"},  {"ズィ", "zi"},  {"イェ", "ye"},
  };
  RomanizationTable table;
  for (const auto& row : kRows) table.set(row[0], row[1]);
  return table;
}

}  // namespace

const RomanizationTable& RomanizationTable::default_table() {
  static const RomanizationTable kTable = make_default_romanization();
  return kTable;
}

RomanizationTable RomanizationTable::load(const std::filesystem::path& path) {
  RomanizationTable table;
  const auto lines = io::read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (io::trim(line).empty() || line.front() == '#') continue;
    auto f = io::split(line, '\t');
    if (f.size() != 2 || f[0].empty() || io::trim(f[1]).empty()) {
      throw data_error(path.string() + ":" + std::to_string(i + 1) +
                       ": expected katakana<TAB>romaji");
    }
    std::string romaji(io::trim(f[1]));
    for (char c : romaji) {
      if (c < 'a' || c > 'z') {
        throw data_error(path.string() + ":" + std::to_string(i + 1) +
                         ": romaji must be lowercase ASCII letters");
      }
    }
    table.set(f[0], std::move(romaji));
  }
  return table;
}

void RomanizationTable::set(std::string katakana, std::string romaji) {
  entries_[std::move(katakana)] = std::move(romaji);
}

std::optional<std::string> RomanizationTable::lookup(std::string_view katakana) const {
  auto it = entries_.find(std::string(katakana));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<KanaUnit>> RomanizationTable::units(
    std::string_view katakana) const {
  const auto cps = utf8::decode(katakana);
  std::vector<KanaUnit> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    KanaUnit unit;
    std::size_t sokuon = 0;
    while (i < cps.size() && cps[i].value == kSokuon) {
      unit.surface += cps[i].bytes;
      ++sokuon;
      ++i;
    }
    if (i == cps.size()) {
      // Trailing sokuon: a glottal stop with nothing to double.
      unit.romaji = "t";
      out.push_back(std::move(unit));
      break;
    }
    std::string base;
    if (cps[i].value == kLongVowel) {
      // A long-vowel mark with no preceding mora.
      unit.surface += cps[i].bytes;
      base = "a";
      ++i;
    } else {
      std::optional<std::string> romaji;
      if (i + 1 < cps.size() && is_small_kana(cps[i + 1].value)) {
        std::string pair(cps[i].bytes);
        pair += cps[i + 1].bytes;
        romaji = lookup(pair);
        if (romaji) {
          unit.surface += pair;
          i += 2;
        }
      }
      if (!romaji) {
        romaji = lookup(cps[i].bytes);
        if (!romaji) return std::nullopt;
        unit.surface += cps[i].bytes;
        ++i;
      }
      base = *romaji;
      while (i < cps.size() && is_small_kana(cps[i].value)) {
        auto small = lookup(cps[i].bytes);
        if (!small) return std::nullopt;
        unit.surface += cps[i].bytes;
        base += *small;
        ++i;
      }
    }
    while (i < cps.size() && cps[i].value == kLongVowel) {
      unit.surface += cps[i].bytes;
      auto v = std::find_if(base.rbegin(), base.rend(), is_vowel_letter);
      base.push_back(v == base.rend() ? base.back() : *v);
      ++i;
    }
    const char doubled = is_vowel_letter(base.front()) ? 't' : base.front();
    unit.romaji = std::string(sokuon, doubled) + base;
    out.push_back(std::move(unit));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Letter similarity

const LetterSimilarityTable& LetterSimilarityTable::default_table() {
  static const LetterSimilarityTable kTable = [] {
    LetterSimilarityTable t;
    const char* const kPairs[] = {"lr", "bv", "ck", "cs", "fh", "jz", "qk",
                                  "xz", "gj", "dt", "pb", "sz", "mn", "wu",
                                  "yi", "fp", "vw", "tc", "kg", "hw"};
    for (const char* p : kPairs) t.add_similar(p[0], p[1]);
    return t;
  }();
  return kTable;
}

LetterSimilarityTable LetterSimilarityTable::load(const std::filesystem::path& path) {
  LetterSimilarityTable t;
  const auto lines = io::read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = io::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    std::string a, b;
    if (!(in >> a >> b) || a.size() != 1 || b.size() != 1) {
      throw data_error(path.string() + ":" + std::to_string(i + 1) +
                       ": expected two single letters");
    }
    t.add_similar(static_cast<char>(std::tolower(a[0])),
                  static_cast<char>(std::tolower(b[0])));
  }
  return t;
}

void LetterSimilarityTable::add_similar(char a, char b) {
  if (a == b || a == kTerminal || b == kTerminal) return;
  similar_.insert({a, b});
  similar_.insert({b, a});
}

bool LetterSimilarityTable::similar(char a, char b) const {
  return similar_.count({a, b}) > 0;
}

bool LetterSimilarityTable::is_vowel(char c) { return is_vowel_letter(c); }

bool LetterSimilarityTable::is_consonant(char c) {
  return c >= 'a' && c <= 'z' && !is_vowel_letter(c);
}

int LetterSimilarityTable::similarity(char e, char j) const {
  if (e == kTerminal || j == kTerminal) return e == j ? 3 : 0;
  if (e == j) return 3;
  if (similar(e, j)) return 2;
  if ((is_vowel(e) && is_vowel(j)) || (is_consonant(e) && is_consonant(j))) {
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Alignment

AlignmentGrid make_alignment_grid(std::string_view english,
                                  const std::vector<KanaUnit>& units) {
  AlignmentGrid grid;
  grid.rows = std::string(english) + LetterSimilarityTable::kTerminal;
  for (std::size_t u = 0; u < units.size(); ++u) {
    for (std::size_t k = 0; k < units[u].romaji.size(); ++k) {
      grid.cols.push_back(units[u].romaji[k]);
      grid.col_unit.push_back(u);
      grid.unit_start.push_back(k == 0);
    }
  }
  grid.cols.push_back(LetterSimilarityTable::kTerminal);
  grid.col_unit.push_back(units.size());
  grid.unit_start.push_back(true);
  return grid;
}

int path_score(const AlignmentGrid& grid, const LetterSimilarityTable& table,
               const std::vector<std::pair<std::size_t, std::size_t>>& path) {
  if (path.empty()) return 0;
  auto sim = [&](std::size_t r, std::size_t c) {
    return table.similarity(grid.rows[r], grid.cols[c]);
  };
  int score = sim(path[0].first, path[0].second);
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[k].first == path[k - 1].first + 1 &&
        path[k].second == path[k - 1].second + 1) {
      score += sim(path[k].first, path[k].second);
    }
  }
  return score;
}

Alignment align(std::string_view english, const std::vector<KanaUnit>& units,
                const LetterSimilarityTable& table) {
  if (english.empty() || units.empty()) {
    throw data_error("align: both words must be non-empty");
  }
  const AlignmentGrid grid = make_alignment_grid(english, units);
  const std::size_t H = grid.height();
  const std::size_t W = grid.width();
  auto sim = [&](std::size_t r, std::size_t c) {
    return table.similarity(grid.rows[r], grid.cols[c]);
  };

  // best[r][c]: highest score collectable after cell (r,c).
  constexpr int kNone = std::numeric_limits<int>::min() / 2;
  std::vector<std::vector<int>> best(H, std::vector<int>(W, kNone));
  best[H - 1][W - 1] = 0;
  for (std::size_t r = H; r-- > 0;) {
    for (std::size_t c = W; c-- > 0;) {
      if (r == H - 1 && c == W - 1) continue;
      int b = kNone;
      if (r + 1 < H && c + 1 < W) b = std::max(b, sim(r + 1, c + 1) + best[r + 1][c + 1]);
      if (c + 1 < W) b = std::max(b, best[r][c + 1]);
      if (r + 1 < H) b = std::max(b, best[r + 1][c]);
      best[r][c] = b;
    }
  }

  Alignment result;
  result.score = sim(0, 0) + best[0][0];
  result.path.emplace_back(0, 0);
  result.pairs.push_back({std::string(1, grid.rows[0]), units[0].surface});

  std::size_t r = 0, c = 0;
  while (r != H - 1 || c != W - 1) {
    Step step;
    if (r + 1 < H && c + 1 < W && sim(r + 1, c + 1) + best[r + 1][c + 1] == best[r][c]) {
      step = Step::kDiagonal;
    } else if (c + 1 < W && best[r][c + 1] == best[r][c]) {
      step = Step::kRight;
    } else {
      step = Step::kDown;
    }
    const bool new_row = step != Step::kRight;
    const bool new_col = step != Step::kDown;
    if (new_row) ++r;
    if (new_col) ++c;
    result.path.emplace_back(r, c);

    const bool real_row = r < H - 1;
    const bool mora_start = new_col && c < W - 1 && grid.unit_start[c];
    if (step == Step::kDiagonal && real_row && mora_start) {
      result.pairs.push_back({});
    }
    if (new_row && real_row) result.pairs.back().english.push_back(grid.rows[r]);
    if (mora_start) result.pairs.back().katakana += units[grid.col_unit[c]].surface;
  }
  return result;
}

Alignment align(std::string_view english, std::string_view katakana,
                const RomanizationTable& romanization,
                const LetterSimilarityTable& table) {
  auto units = romanization.units(katakana);
  if (!units || units->empty()) {
    throw data_error("cannot romanize katakana word '" + std::string(katakana) + "'");
  }
  return align(english, *units, table);
}

// ---------------------------------------------------------------------------
// Symbol lexicon

std::vector<TransliterationPair> load_transliteration_pairs(
    const std::filesystem::path& path) {
  std::vector<TransliterationPair> out;
  for (const auto& p : load_term_pairs(path)) out.push_back({p.english, p.japanese});
  return out;
}

SymbolLexicon::SymbolLexicon(PairCounts counts, BigramModel english_prior,
                             BigramModel katakana_prior, double epsilon,
                             const RomanizationTable& romanization)
    : counts_(std::move(counts)),
      english_prior_(std::move(english_prior)),
      katakana_prior_(std::move(katakana_prior)),
      kata_given_en_(
          [&] {
            BaseWordLexicon lex(Direction::kJaToEn);
            for (const auto& [p, c] : counts_) lex.add(p.katakana, p.english, c);
            return lex;
          }(),
          epsilon),
      en_given_kata_(kata_given_en_.lexicon().transpose(), epsilon) {
  for (const auto& [p, c] : counts_) {
    if (group_units_.count(p.katakana)) continue;
    auto units = romanization.units(p.katakana);
    if (!units) {
      throw data_error("symbol lexicon: cannot romanize '" + p.katakana + "'");
    }
    std::vector<std::string> surfaces;
    for (auto& u : *units) surfaces.push_back(std::move(u.surface));
    group_units_.emplace(p.katakana, std::move(surfaces));
  }
}

std::int64_t SymbolLexicon::count(std::string_view english,
                                  std::string_view katakana) const {
  auto it = counts_.find({std::string(english), std::string(katakana)});
  return it == counts_.end() ? 0 : it->second;
}

std::set<std::string> SymbolLexicon::english_groups() const {
  std::set<std::string> out;
  for (const auto& [p, c] : counts_) out.insert(p.english);
  return out;
}

std::set<std::string> SymbolLexicon::katakana_groups() const {
  std::set<std::string> out;
  for (const auto& [p, c] : counts_) out.insert(p.katakana);
  return out;
}

const std::vector<std::string>& SymbolLexicon::group_units(
    const std::string& katakana) const {
  static const std::vector<std::string> kEmpty;
  auto it = group_units_.find(katakana);
  return it == group_units_.end() ? kEmpty : it->second;
}

std::string SymbolLexicon::to_tsv() const {
  std::ostringstream out;
  for (const auto& [p, c] : counts_) {
    out << p.english << '\t' << p.katakana << '\t' << c << '\n';
  }
  return out.str();
}

SymbolLexicon::PairCounts SymbolLexicon::counts_from_tsv(std::string_view contents) {
  PairCounts counts;
  const auto lex = BaseWordLexicon::from_tsv(contents, Direction::kEnToJa);
  for (const auto& [english, targets] : lex.entries()) {
    for (const auto& [katakana, c] : targets) counts[{english, katakana}] += c;
  }
  return counts;
}

SymbolLexiconBuild build_symbol_lexicon(const std::vector<TransliterationPair>& pairs,
                                        const RomanizationTable& romanization,
                                        const LetterSimilarityTable& table,
                                        double epsilon) {
  SymbolLexicon::PairCounts counts;
  std::vector<std::vector<std::string>> english_seqs;
  std::vector<std::vector<std::string>> katakana_seqs;
  std::vector<Alignment> alignments;
  std::vector<std::pair<TransliterationPair, std::string>> skipped;

  for (const auto& pair : pairs) {
    std::string english;
    bool letters_only = !pair.english.empty();
    for (char ch : pair.english) {
      const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      if (lower < 'a' || lower > 'z') letters_only = false;
      english.push_back(lower);
    }
    if (!letters_only) {
      skipped.push_back({pair, "english side is not a single letter-only word"});
      continue;
    }
    auto units = romanization.units(pair.katakana);
    if (!units || units->empty()) {
      skipped.push_back({pair, "katakana side cannot be romanized"});
      continue;
    }
    Alignment a = align(english, *units, table);
    std::vector<std::string> en_seq, ja_seq;
    for (const auto& sp : a.pairs) {
      counts[sp] += 1;
      en_seq.push_back(sp.english);
      ja_seq.push_back(sp.katakana);
    }
    english_seqs.push_back(std::move(en_seq));
    katakana_seqs.push_back(std::move(ja_seq));
    alignments.push_back(std::move(a));
  }
  if (counts.empty()) throw data_error("empty transliteration training set");

  BigramOptions opts;
  opts.epsilon = epsilon;
  SymbolLexicon lexicon(std::move(counts), BigramModel::train(english_seqs, opts),
                        BigramModel::train(katakana_seqs, opts), epsilon,
                        romanization);
  return {std::move(lexicon), std::move(alignments), std::move(skipped)};
}

// ---------------------------------------------------------------------------
// Generation

std::optional<std::vector<std::string>> english_atoms(std::string_view word) {
  if (word.empty()) return std::nullopt;
  std::vector<std::string> atoms;
  for (char c : word) {
    if (c < 'a' || c > 'z') return std::nullopt;
    atoms.emplace_back(1, c);
  }
  return atoms;
}

std::optional<std::vector<std::string>> katakana_atoms(
    std::string_view word, const RomanizationTable& romanization) {
  if (word.empty()) return std::nullopt;
  for (const auto& cp : utf8::decode(word)) {
    if (classify_char(cp.value) != CharClass::kKatakana) return std::nullopt;
  }
  auto units = romanization.units(word);
  if (!units) return std::nullopt;
  std::vector<std::string> atoms;
  for (auto& u : *units) atoms.push_back(std::move(u.surface));
  return atoms;
}

namespace {

struct SymbolOption {
  std::string target;
  std::size_t target_atoms;
  std::size_t target_id;  // 1-based; 0 means "no previous symbol"
  double log_channel;
};

// Source-side group -> the target groups it may emit, for one direction.
struct SymbolIndex {
  std::unordered_map<std::string, std::vector<SymbolOption>> by_source;
  std::size_t max_source_atoms = 0;
  std::size_t max_target_atoms = 0;
  std::vector<std::string> target_names;  // indexed by target_id - 1
  const BigramModel* prior = nullptr;
};

SymbolIndex make_index(const SymbolLexicon& lex, Direction direction) {
  SymbolIndex index;
  std::map<std::string, std::size_t> target_ids;
  const bool ja_source = direction == Direction::kJaToEn;
  const ChannelModel& channel =
      ja_source ? lex.katakana_given_english() : lex.english_given_katakana();
  index.prior = ja_source ? &lex.english_prior() : &lex.katakana_prior();
  for (const auto& [p, c] : lex.counts()) {
    const std::string& source = ja_source ? p.katakana : p.english;
    const std::string& target = ja_source ? p.english : p.katakana;
    const std::size_t source_atoms =
        ja_source ? lex.group_units(p.katakana).size() : p.english.size();
    const std::size_t target_atoms =
        ja_source ? p.english.size() : lex.group_units(p.katakana).size();
    auto [it, inserted] = target_ids.emplace(target, target_ids.size() + 1);
    if (inserted) index.target_names.push_back(target);
    index.by_source[source].push_back(
        {target, target_atoms, it->second,
         std::log(channel_prob(channel, source, target))});
    index.max_source_atoms = std::max(index.max_source_atoms, source_atoms);
    index.max_target_atoms = std::max(index.max_target_atoms, target_atoms);
  }
  return index;
}

// Concatenations atoms[i, i+len) for len in [1, max_len].
std::vector<std::vector<std::string>> spans(const std::vector<std::string>& atoms,
                                            std::size_t max_len) {
  std::vector<std::vector<std::string>> out(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::string acc;
    for (std::size_t len = 1; len <= max_len && i + len <= atoms.size(); ++len) {
      acc += atoms[i + len - 1];
      out[i].push_back(acc);
    }
  }
  return out;
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

class JointSegmenter {
 public:
  JointSegmenter(const SymbolIndex& index, const std::vector<std::string>& source)
      : index_(index),
        n_(source.size()),
        source_spans_(spans(source, index.max_source_atoms)) {}

  std::optional<double> score(const std::vector<std::string>& target) {
    m_ = target.size();
    target_spans_ = spans(target, index_.max_target_atoms);
    memo_.clear();
    const double s = solve(0, 0, 0);
    if (s == kNegInf) return std::nullopt;
    return s;
  }

  // First target symbols reachable from the source's first position.
  bool first_symbol_compatible(const std::vector<std::string>& target) const {
    const auto first = spans(target, index_.max_target_atoms);
    if (first.empty() || source_spans_.empty()) return false;
    for (const auto& g : source_spans_[0]) {
      auto it = index_.by_source.find(g);
      if (it == index_.by_source.end()) continue;
      for (const auto& opt : it->second) {
        if (opt.target_atoms <= first[0].size() &&
            first[0][opt.target_atoms - 1] == opt.target) {
          return true;
        }
      }
    }
    return false;
  }

 private:
  double solve(std::size_t i, std::size_t j, std::size_t prev) {
    if (i == n_ && j == m_) return 0.0;
    if (i == n_ || j == m_) return kNegInf;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(i) << 48) | (static_cast<std::uint64_t>(j) << 32) | prev;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    double best = kNegInf;
    const auto& src = source_spans_[i];
    for (std::size_t len = 1; len <= src.size(); ++len) {
      auto it = index_.by_source.find(src[len - 1]);
      if (it == index_.by_source.end()) continue;
      for (const auto& opt : it->second) {
        if (opt.target_atoms > target_spans_[j].size() ||
            target_spans_[j][opt.target_atoms - 1] != opt.target) {
          continue;
        }
        const double rest = solve(i + len, j + opt.target_atoms, opt.target_id);
        if (rest == kNegInf) continue;
        double step = opt.log_channel;
        if (prev != 0) {
          step += log_cond_prob(*index_.prior, index_.target_names[prev - 1], opt.target);
        }
        best = std::max(best, step + rest);
      }
    }
    memo_.emplace(key, best);
    return best;
  }

  const SymbolIndex& index_;
  std::size_t n_;
  std::size_t m_ = 0;
  std::vector<std::vector<std::string>> source_spans_;
  std::vector<std::vector<std::string>> target_spans_;
  std::unordered_map<std::uint64_t, double> memo_;
};

std::optional<std::vector<std::string>> side_atoms(std::string_view word, bool katakana,
                                                   const RomanizationTable& romanization) {
  return katakana ? katakana_atoms(word, romanization) : english_atoms(word);
}

}  // namespace

std::optional<double> transliteration_score(std::string_view source,
                                            std::string_view target,
                                            Direction direction,
                                            const SymbolLexicon& lexicon,
                                            const RomanizationTable& romanization) {
  const bool ja_source = direction == Direction::kJaToEn;
  auto src = side_atoms(source, ja_source, romanization);
  auto tgt = side_atoms(target, !ja_source, romanization);
  if (!src || !tgt) return std::nullopt;
  const SymbolIndex index = make_index(lexicon, direction);
  JointSegmenter seg(index, *src);
  return seg.score(*tgt);
}

std::vector<TransliterationCandidate> transliterate(
    std::string_view source, Direction direction, const SymbolLexicon& lexicon,
    const std::vector<std::string>& vocabulary, std::size_t k,
    const RomanizationTable& romanization) {
  std::vector<TransliterationCandidate> out;
  const bool ja_source = direction == Direction::kJaToEn;
  auto src = side_atoms(source, ja_source, romanization);
  if (!src || k == 0) return out;
  const SymbolIndex index = make_index(lexicon, direction);
  JointSegmenter seg(index, *src);
  for (const auto& word : vocabulary) {
    auto tgt = side_atoms(word, !ja_source, romanization);
    if (!tgt || !seg.first_symbol_compatible(*tgt)) continue;
    if (auto s = seg.score(*tgt)) out.push_back({word, *s});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.log_score != b.log_score) return a.log_score > b.log_score;
    return a.word < b.word;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.word == b.word; }),
            out.end());
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace clir
