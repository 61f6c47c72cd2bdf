#include "clir/text_segmentation.hpp"

#include <algorithm>

#include "clir/io.hpp"
#include "clir/utf8.hpp"

namespace clir {

std::string_view language_code(Language lang) {
  return lang == Language::kEnglish ? "en" : "ja";
}

std::optional<Language> parse_language(std::string_view code) {
  if (code == "en") return Language::kEnglish;
  if (code == "ja") return Language::kJapanese;
  return std::nullopt;
}

std::string_view char_class_name(CharClass c) {
  switch (c) {
    case CharClass::kKanji: return "kanji";
    case CharClass::kKatakana: return "katakana";
    case CharClass::kHiragana: return "hiragana";
    case CharClass::kLatin: return "latin";
    case CharClass::kDigit: return "digit";
    case CharClass::kOther: return "other";
  }
  return "other";
}

CharClass classify_char(char32_t c) {
  if (c >= U'0' && c <= U'9') return CharClass::kDigit;
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) {
    return CharClass::kLatin;
  }
  if (c >= 0xFF10 && c <= 0xFF19) return CharClass::kDigit;
  if ((c >= 0xFF21 && c <= 0xFF3A) || (c >= 0xFF41 && c <= 0xFF5A)) {
    return CharClass::kLatin;
  }
  if (c >= 0x3041 && c <= 0x309F) return CharClass::kHiragana;
  // U+30FB (middle dot) is punctuation; U+30FC (long vowel mark) is katakana.
  if ((c >= 0x30A1 && c <= 0x30FA) || (c >= 0x30FC && c <= 0x30FF) ||
      (c >= 0x31F0 && c <= 0x31FF) || (c >= 0xFF66 && c <= 0xFF9F)) {
    return CharClass::kKatakana;
  }
  if ((c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF) ||
      (c >= 0xF900 && c <= 0xFAFF) || (c >= 0x20000 && c <= 0x2FA1F) ||
      c == 0x3005 || c == 0x3006) {
    return CharClass::kKanji;
  }
  return CharClass::kOther;
}

std::string ContentWord::text() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && language == Language::kEnglish) out.push_back(' ');
    out += tokens[i].surface;
  }
  return out;
}

const StopwordSet& default_english_stopwords() {
  static const StopwordSet kStopwords = {
      "a",     "about", "all",   "also",  "an",    "and",   "any",
      "are",   "as",    "at",    "be",    "been",  "being", "between",
      "both",  "but",   "by",    "can",   "could", "do",    "does",
      "each",  "for",   "from",  "has",   "have",  "how",   "i",
      "if",    "in",    "into",  "is",    "it",    "its",   "may",
      "more",  "most",  "not",   "of",    "on",    "or",    "other",
      "our",   "such",  "than",  "that",  "the",   "their", "them",
      "then",  "there", "these", "they",  "this",  "those", "to",
      "using", "very",  "via",   "was",   "we",    "were",  "what",
      "when",  "where", "which", "while", "who",   "will",  "with",
      "would"};
  return kStopwords;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  StopwordSet out;
  for (const auto& raw : io::read_lines(path)) {
    std::string_view line = io::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string word(line);
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    out.insert(std::move(word));
  }
  return out;
}

std::vector<JapaneseRun> japanese_runs(std::string_view text) {
  std::vector<JapaneseRun> runs;
  for (const auto& cp : utf8::decode(text)) {
    const CharClass cls = classify_char(cp.value);
    if (!runs.empty() && runs.back().char_class == cls) {
      runs.back().surface += cp.bytes;
    } else {
      runs.push_back({std::string(cp.bytes), cls, cls != CharClass::kOther});
    }
  }
  return runs;
}

namespace {

bool japanese_separator_breaks(std::string_view separator) {
  for (const auto& cp : utf8::decode(separator)) {
    const char32_t c = cp.value;
    const bool space = c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' ||
                       c == 0x3000;
    if (!space && c != 0x30FB) return true;
  }
  return false;
}

bool english_separator_breaks(std::string_view separator) {
  return std::any_of(separator.begin(), separator.end(), [](char c) {
    return !(c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '-' ||
             c == '\'' || c == '/');
  });
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// One rule application; returns false when no rule fires.
bool strip_suffix_once(std::string& w) {
  if (ends_with(w, "sses")) {
    w.erase(w.size() - 2);
    return true;
  }
  if (ends_with(w, "ies") && w.size() > 3) {
    w.erase(w.size() - 3);
    w += 'y';
    return true;
  }
  if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is") && w.size() - 1 >= 3) {
    w.pop_back();
    return true;
  }
  if (ends_with(w, "ing") && w.size() - 3 >= 4) {
    w.erase(w.size() - 3);
    return true;
  }
  if (ends_with(w, "ed") && w.size() - 2 >= 4) {
    w.erase(w.size() - 2);
    return true;
  }
  return false;
}

}  // namespace

std::vector<Token> segment_japanese(std::string_view text) {
  std::vector<Token> tokens;
  std::string pending_separator;
  for (auto& run : japanese_runs(text)) {
    if (!run.kept) {
      pending_separator += run.surface;
      continue;
    }
    Token tok;
    tok.surface = std::move(run.surface);
    tok.char_class = run.char_class;
    tok.is_stopword = run.char_class == CharClass::kHiragana;
    tok.after_break =
        !tokens.empty() && japanese_separator_breaks(pending_separator);
    pending_separator.clear();
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::string normalize_english_word(std::string_view lowercase_word) {
  std::string w(lowercase_word);
  while (strip_suffix_once(w)) {
  }
  return w;
}

std::vector<Token> tokenize_english(std::string_view text,
                                    const StopwordSet& stopwords) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  std::size_t last_end = 0;
  while (i < text.size()) {
    auto is_alnum = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
             (c >= '0' && c <= '9');
    };
    if (!is_alnum(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    std::string word;
    while (j < text.size() && is_alnum(text[j])) {
      word.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(text[j]))));
      ++j;
    }
    Token tok;
    tok.after_break = !tokens.empty() &&
                      english_separator_breaks(text.substr(last_end, i - last_end));
    const bool has_letter = std::any_of(word.begin(), word.end(), [](char c) {
      return c >= 'a' && c <= 'z';
    });
    std::string normalized = has_letter ? normalize_english_word(word) : word;
    tok.is_stopword = stopwords.count(word) > 0 || stopwords.count(normalized) > 0;
    tok.surface = tok.is_stopword ? std::move(word) : std::move(normalized);
    tokens.push_back(std::move(tok));
    last_end = j;
    i = j;
  }
  return tokens;
}

std::vector<ContentWord> extract_content_words(const std::vector<Token>& tokens,
                                               Language language) {
  std::vector<ContentWord> words;
  ContentWord current{{}, language};
  auto flush = [&] {
    if (!current.tokens.empty()) words.push_back(std::move(current));
    current = ContentWord{{}, language};
  };
  for (const auto& tok : tokens) {
    if (tok.is_stopword) {
      flush();
      continue;
    }
    if (tok.after_break) flush();
    current.tokens.push_back(tok);
  }
  flush();
  return words;
}

std::vector<std::string> index_terms(std::string_view text, Language language,
                                     const StopwordSet& english_stopwords) {
  std::vector<std::string> terms;
  if (language == Language::kEnglish) {
    for (auto& tok : tokenize_english(text, english_stopwords)) {
      if (!tok.is_stopword) terms.push_back(std::move(tok.surface));
    }
    return terms;
  }
  for (auto& tok : segment_japanese(text)) {
    if (tok.is_stopword) continue;
    if (tok.char_class == CharClass::kLatin) {
      std::transform(tok.surface.begin(), tok.surface.end(), tok.surface.begin(),
                     [](unsigned char c) {
                       return static_cast<char>(std::tolower(c));
                     });
    }
    terms.push_back(std::move(tok.surface));
  }
  return terms;
}

}  // namespace clir
