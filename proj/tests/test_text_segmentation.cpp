#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "clir/text_segmentation.hpp"
#include "clir/utf8.hpp"

using namespace clir;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<std::string> texts(const std::vector<ContentWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.text());
  return out;
}

}  // namespace

TEST_CASE("character classes") {
  CHECK(classify_char(U'テ') == CharClass::kKatakana);
  CHECK(classify_char(U'ー') == CharClass::kKatakana);
  CHECK(classify_char(U'情') == CharClass::kKanji);
  CHECK(classify_char(U'の') == CharClass::kHiragana);
  CHECK(classify_char(U'7') == CharClass::kDigit);
  CHECK(classify_char(U'a') == CharClass::kLatin);
  CHECK(classify_char(U'Ｚ') == CharClass::kLatin);
  CHECK(classify_char(U'、') == CharClass::kOther);
  CHECK(classify_char(U' ') == CharClass::kOther);
  CHECK(classify_char(0x10FFFF) == CharClass::kOther);
}

TEST_CASE("japanese segmentation follows maximal class runs") {
  auto tokens = segment_japanese("情報検索システム");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].surface == "情報検索");
  CHECK(tokens[0].char_class == CharClass::kKanji);
  CHECK(tokens[1].surface == "システム");
  CHECK(tokens[1].char_class == CharClass::kKatakana);

  tokens = segment_japanese("データの構造");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[1].is_stopword);
  auto words = extract_content_words(tokens, Language::kJapanese);
  CHECK(texts(words) == std::vector<std::string>{"データ", "構造"});

  CHECK(segment_japanese("").empty());
}

TEST_CASE("japanese runs partition the input") {
  const std::vector<std::string> inputs = {"情報検索システム", "データの構造、解析。", "ＡＢＣ123テスト",
                                           "  空白  ", "ネットワーク・プロトコル"};
  for (const auto& text : inputs) {
    std::string joined;
    for (const auto& run : japanese_runs(text)) joined += run.surface;
    CHECK(joined == text);
  }
}

TEST_CASE("punctuation breaks japanese compounds") {
  auto words = extract_content_words(segment_japanese("検索、システム"), Language::kJapanese);
  CHECK(texts(words) == std::vector<std::string>{"検索", "システム"});
  words = extract_content_words(segment_japanese("検索システム"), Language::kJapanese);
  CHECK(texts(words) == std::vector<std::string>{"検索システム"});
}

TEST_CASE("english tokenization") {
  const auto& stop = default_english_stopwords();
  auto tokens = tokenize_english("improvement of data mining methods", stop);
  CHECK(surfaces(tokens) ==
        std::vector<std::string>{"improvement", "of", "data", "mining", "method"});
  CHECK(tokens[1].is_stopword);
  CHECK_FALSE(tokens[0].is_stopword);
  CHECK(texts(extract_content_words(tokens, Language::kEnglish)) ==
        std::vector<std::string>{"improvement", "data mining method"});

  CHECK(surfaces(tokenize_english("Systems", stop)) == std::vector<std::string>{"system"});
  CHECK(surfaces(tokenize_english("ad-hoc retrieval", stop)) ==
        std::vector<std::string>{"ad", "hoc", "retrieval"});
  CHECK(texts(extract_content_words(tokenize_english("neural network", stop),
                                    Language::kEnglish)) ==
        std::vector<std::string>{"neural network"});
  CHECK(extract_content_words(tokenize_english("of the and", stop), Language::kEnglish).empty());
}

TEST_CASE("suffix rules") {
  CHECK(normalize_english_word("classes") == "class");
  CHECK(normalize_english_word("queries") == "query");
  CHECK(normalize_english_word("methods") == "method");
  CHECK(normalize_english_word("mining") == "mining");
  CHECK(normalize_english_word("indexing") == "index");
  CHECK(normalize_english_word("parsed") == "par");  // pars, then the plural rule
  CHECK(normalize_english_word("used") == "used");
  CHECK(normalize_english_word("bus") == "bus");
  CHECK(normalize_english_word("analysis") == "analysis");
  CHECK(normalize_english_word("its") == "its");
  CHECK(normalize_english_word("glass") == "glass");
}

TEST_CASE("normalization is idempotent") {
  const std::vector<std::string> words = {"classes", "queries", "methods",  "indexing",
                                          "mappings", "needed", "statuses", "processes",
                                          "trees",    "seeds",  "running",  "stressed"};
  for (const auto& w : words) {
    const auto once = normalize_english_word(w);
    CHECK(normalize_english_word(once) == once);
  }
}

TEST_CASE("index terms skip stopwords") {
  const auto& stop = default_english_stopwords();
  CHECK(index_terms("The Retrieval of Documents", Language::kEnglish, stop) ==
        std::vector<std::string>{"retrieval", "document"});
  CHECK(index_terms("文書の検索", Language::kJapanese, stop) ==
        std::vector<std::string>{"文書", "検索"});
}
