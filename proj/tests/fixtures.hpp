#pragma once

// Shared inputs for the unit tests and the acceptance binary.

#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clir/transliteration.hpp"

namespace fixture {

// The bundled phonetically similar pairs, written out independently of the
// library's table.
inline std::set<std::pair<char, char>> similar_letters() {
  const char* const pairs[] = {"lr", "bv", "ck", "cs", "fh", "jz", "qk", "xz", "gj", "dt",
                               "pb", "sz", "mn", "wu", "yi", "fp", "vw", "tc", "kg", "hw"};
  std::set<std::pair<char, char>> out;
  for (const char* p : pairs) out.insert({p[0], p[1]});
  return out;
}

// English/katakana pairs from the correspondence figure.
inline std::vector<clir::TransliterationPair> figure_pairs() {
  return {{"system", "システム"},   {"mining", "マイニング"},  {"data", "データ"},
          {"network", "ネットワーク"}, {"text", "テキスト"}, {"collocation", "コロケイション"}};
}

inline const std::vector<std::string>& katakana_pool() {
  static const std::vector<std::string> pool = {
      "ア", "イ", "ウ", "エ", "オ", "カ", "キ", "ク", "サ", "シ", "ス", "タ", "テ", "ト",
      "ナ", "ニ", "マ", "ム", "ラ", "リ", "ル", "ロ", "ン", "ー", "ッ", "ショ", "ティ", "デ"};
  return pool;
}

// A random romanizable katakana word of `units` pool entries.
inline std::string random_katakana(std::mt19937& rng, std::size_t units) {
  const auto& pool = katakana_pool();
  std::string out;
  for (std::size_t i = 0; i < units; ++i) {
    std::string pick;
    do {
      pick = pool[rng() % pool.size()];
      // Marks need a preceding mora; a sokuon needs a following one.
    } while ((i == 0 && (pick == "ー" || pick == "ッ")) || (i + 1 == units && pick == "ッ") ||
             (!out.empty() && (out.ends_with("ッ") || out.ends_with("ー")) &&
              (pick == "ー" || pick == "ッ")));
    out += pick;
  }
  return out;
}

inline std::string random_letters(std::mt19937& rng, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += static_cast<char>('a' + rng() % 26);
  return out;
}

inline std::filesystem::path data_dir() {
#ifdef CLIR_TEST_DATA_DIR
  return CLIR_TEST_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace fixture
