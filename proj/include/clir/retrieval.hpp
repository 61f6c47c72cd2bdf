#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "clir/text_segmentation.hpp"

namespace clir {

struct Document {
  std::string id;
  Language language = Language::kEnglish;
  std::string title;
  std::string abstract_text;
  std::string keywords;
};

// JSON lines with `id`, `lang`, `title`, `abstract`, `keywords`. Ids must be
// non-empty and free of whitespace; at least one text field must be set.
std::vector<Document> parse_corpus(std::string_view contents,
                                   const std::string& source_name = "corpus");
std::vector<Document> load_corpus(const std::filesystem::path& path);

struct FieldSelection {
  bool title = true;
  bool abstract_text = true;
  bool keywords = true;

  bool any() const { return title || abstract_text || keywords; }
};

// Parses a comma list such as "title,abstract".
FieldSelection parse_fields(std::string_view list);

// Index terms of the selected fields, field by field.
std::vector<std::string> document_terms(const Document& doc, const FieldSelection& fields,
                                        const StopwordSet& english_stopwords);

struct Posting {
  std::string doc;
  std::int64_t tf = 0;

  bool operator==(const Posting&) const = default;
};

// (1 + ln tf) * ln(N / df); 0 when tf or df is 0.
double tfidf_weight(std::int64_t tf, std::int64_t df, std::int64_t n);

class InvertedIndex {
 public:
  // Throws data_error on a duplicate id.
  void add(const std::string& doc_id, const std::vector<std::string>& terms);
  // Recomputes document norms; required before searching or saving.
  void finalize();
  bool finalized() const { return finalized_; }

  std::int64_t document_count() const { return static_cast<std::int64_t>(docs_.size()); }
  std::int64_t df(std::string_view term) const;
  std::int64_t tf(std::string_view term, std::string_view doc) const;
  double norm(std::string_view doc) const;
  const std::vector<Posting>& postings(std::string_view term) const;
  std::vector<std::string> vocabulary() const;  // sorted
  const std::vector<std::string>& documents() const { return docs_; }  // insertion order
  std::size_t term_count() const { return postings_.size(); }

  std::string to_text() const;
  static InvertedIndex from_text(std::string_view contents);

  bool operator==(const InvertedIndex&) const = default;

 private:
  std::vector<std::string> docs_;
  std::map<std::string, std::size_t, std::less<>> doc_slot_;
  std::map<std::string, std::vector<Posting>, std::less<>> postings_;
  std::map<std::string, double, std::less<>> norms_;
  bool finalized_ = false;
};

// Throws data_error("empty collection") or on duplicate ids; usage_error
// when no field is selected.
InvertedIndex build_index(const std::vector<Document>& docs, const FieldSelection& fields,
                          const StopwordSet& english_stopwords);

struct ScoredDoc {
  std::string doc;
  double score = 0.0;

  bool operator==(const ScoredDoc&) const = default;
};

struct RankedRun {
  std::string query_id;
  std::vector<ScoredDoc> results;

  bool operator==(const RankedRun&) const = default;
};

constexpr std::size_t kDefaultTopN = 1000;

// Cosine between the TF-IDF query and document vectors. Descending score,
// ties by ascending doc id; documents scoring 0 are left out. Throws
// data_error("empty query") on an empty term list.
std::vector<ScoredDoc> search(const InvertedIndex& index,
                              const std::vector<std::string>& terms,
                              std::size_t top_n = kDefaultTopN);

// `query_id rank doc_id score`, rank from 1, score to 6 decimals.
std::string format_run(const std::vector<RankedRun>& runs);
std::vector<RankedRun> parse_run(std::string_view contents,
                                 const std::string& source_name = "run");

// Index vocabulary restricted to transliteration targets: lowercase ASCII
// words for English, pure katakana words for Japanese.
std::vector<std::string> script_vocabulary(const InvertedIndex& index, Language language);

}  // namespace clir
