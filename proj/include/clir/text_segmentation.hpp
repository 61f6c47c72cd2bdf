#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace clir {

enum class Language { kEnglish, kJapanese };

std::string_view language_code(Language lang);  // "en" / "ja"
std::optional<Language> parse_language(std::string_view code);

enum class CharClass { kKanji, kKatakana, kHiragana, kLatin, kDigit, kOther };

std::string_view char_class_name(CharClass c);

// Total over all code points.
CharClass classify_char(char32_t c);

struct Token {
  std::string surface;
  std::optional<CharClass> char_class;  // set for Japanese tokens only
  bool is_stopword = false;
  // Punctuation separated this token from the previous one; content-word
  // compounds never span such a break.
  bool after_break = false;

  bool operator==(const Token&) const = default;
};

struct ContentWord {
  std::vector<Token> tokens;
  Language language = Language::kEnglish;

  // English tokens joined by a space, Japanese tokens concatenated.
  std::string text() const;
};

using StopwordSet = std::unordered_set<std::string>;

// About fifty English function words.
const StopwordSet& default_english_stopwords();

// One surface per line, '#' starts a comment line, blank lines ignored.
StopwordSet load_stopwords(const std::filesystem::path& path);

// A maximal single-class run of the input. `kept` is false for runs of
// class `other`, which never become tokens.
struct JapaneseRun {
  std::string surface;
  CharClass char_class;
  bool kept;
};

// All runs in order; their surfaces concatenate to the input exactly.
std::vector<JapaneseRun> japanese_runs(std::string_view text);

// Maximal single-class runs minus `other` runs. Hiragana runs are kept as
// stopword tokens so they still separate content words.
std::vector<Token> segment_japanese(std::string_view text);

// Applies the ordered suffix rules to a fixed point:
//   sses -> ss, ies -> y, s -> "" (stem >= 3, not after "ss"/"us"/"is"),
//   ing -> "" and ed -> "" (stem >= 4).
std::string normalize_english_word(std::string_view lowercase_word);

std::vector<Token> tokenize_english(std::string_view text,
                                    const StopwordSet& stopwords);

std::vector<ContentWord> extract_content_words(const std::vector<Token>& tokens,
                                               Language language);

// Tokenizes by language and returns the non-stopword surfaces (the index
// terms of a text).
std::vector<std::string> index_terms(std::string_view text, Language language,
                                     const StopwordSet& english_stopwords);

}  // namespace clir
