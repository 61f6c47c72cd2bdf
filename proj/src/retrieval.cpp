#include "clir/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "clir/error.hpp"
#include "clir/io.hpp"
#include "clir/utf8.hpp"

namespace clir {

namespace {

bool valid_doc_id(std::string_view id) {
  return !id.empty() && std::none_of(id.begin(), id.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

std::string string_field(const nlohmann::json& obj, const char* key,
                         const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (it->is_string()) return it->get<std::string>();
  if (it->is_array()) {
    // Keyword lists are accepted as arrays and joined.
    std::string joined;
    for (const auto& item : *it) {
      if (!item.is_string()) throw data_error(where + ": non-string entry in '" + key + "'");
      if (!joined.empty()) joined += " ; ";
      joined += item.get<std::string>();
    }
    return joined;
  }
  throw data_error(where + ": field '" + key + "' must be a string");
}

}  // namespace

std::vector<Document> parse_corpus(std::string_view contents,
                                   const std::string& source_name) {
  std::vector<Document> docs;
  std::size_t line_no = 0;
  for (auto line : io::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (io::trim(line).empty()) continue;
    const std::string where = source_name + ":" + std::to_string(line_no);
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw data_error(where + ": invalid JSON");
    }
    if (!obj.is_object()) throw data_error(where + ": expected a JSON object");
    Document doc;
    doc.id = string_field(obj, "id", where);
    if (!valid_doc_id(doc.id)) throw data_error(where + ": missing or malformed id");
    const std::string lang = string_field(obj, "lang", where);
    auto parsed = parse_language(lang);
    if (!parsed) throw data_error(where + ": unknown lang '" + lang + "'");
    doc.language = *parsed;
    doc.title = string_field(obj, "title", where);
    doc.abstract_text = string_field(obj, "abstract", where);
    doc.keywords = string_field(obj, "keywords", where);
    if (doc.title.empty() && doc.abstract_text.empty() && doc.keywords.empty()) {
      throw data_error(where + ": document '" + doc.id + "' has no text");
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> load_corpus(const std::filesystem::path& path) {
  return parse_corpus(io::read_file(path), path.string());
}

FieldSelection parse_fields(std::string_view list) {
  FieldSelection f{false, false, false};
  for (const auto& raw : io::split(list, ',')) {
    const auto name = io::trim(raw);
    if (name.empty()) continue;
    if (name == "title") {
      f.title = true;
    } else if (name == "abstract") {
      f.abstract_text = true;
    } else if (name == "keywords") {
      f.keywords = true;
    } else {
      throw usage_error("unknown field '" + std::string(name) + "'");
    }
  }
  return f;
}

std::vector<std::string> document_terms(const Document& doc, const FieldSelection& fields,
                                        const StopwordSet& english_stopwords) {
  std::vector<std::string> terms;
  auto append = [&](const std::string& text) {
    auto t = index_terms(text, doc.language, english_stopwords);
    terms.insert(terms.end(), std::make_move_iterator(t.begin()),
                 std::make_move_iterator(t.end()));
  };
  if (fields.title) append(doc.title);
  if (fields.abstract_text) append(doc.abstract_text);
  if (fields.keywords) append(doc.keywords);
  return terms;
}

double tfidf_weight(std::int64_t tf, std::int64_t df, std::int64_t n) {
  if (tf <= 0 || df <= 0 || n <= 0) return 0.0;
  return (1.0 + std::log(static_cast<double>(tf))) *
         std::log(static_cast<double>(n) / static_cast<double>(df));
}

void InvertedIndex::add(const std::string& doc_id, const std::vector<std::string>& terms) {
  if (!valid_doc_id(doc_id)) throw data_error("malformed document id '" + doc_id + "'");
  if (doc_slot_.count(doc_id)) throw data_error("duplicate document id '" + doc_id + "'");
  doc_slot_.emplace(doc_id, docs_.size());
  docs_.push_back(doc_id);
  std::map<std::string, std::int64_t> counts;
  for (const auto& t : terms) counts[t] += 1;
  for (const auto& [term, c] : counts) {
    auto& list = postings_[term];
    auto pos = std::lower_bound(list.begin(), list.end(), doc_id,
                                [](const Posting& p, const std::string& id) { return p.doc < id; });
    list.insert(pos, Posting{doc_id, c});
  }
  finalized_ = false;
}

void InvertedIndex::finalize() {
  const std::int64_t n = document_count();
  std::map<std::string, double, std::less<>> sq;
  for (const auto& id : docs_) sq[id] = 0.0;
  for (const auto& [term, list] : postings_) {
    const auto df = static_cast<std::int64_t>(list.size());
    for (const auto& p : list) {
      const double w = tfidf_weight(p.tf, df, n);
      sq[p.doc] += w * w;
    }
  }
  norms_.clear();
  for (auto& [id, s] : sq) norms_[id] = std::sqrt(s);
  finalized_ = true;
}

std::int64_t InvertedIndex::df(std::string_view term) const {
  auto it = postings_.find(term);
  return it == postings_.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

std::int64_t InvertedIndex::tf(std::string_view term, std::string_view doc) const {
  auto it = postings_.find(term);
  if (it == postings_.end()) return 0;
  auto pos = std::lower_bound(it->second.begin(), it->second.end(), doc,
                              [](const Posting& p, std::string_view id) { return p.doc < id; });
  return pos != it->second.end() && pos->doc == doc ? pos->tf : 0;
}

double InvertedIndex::norm(std::string_view doc) const {
  auto it = norms_.find(doc);
  return it == norms_.end() ? 0.0 : it->second;
}

const std::vector<Posting>& InvertedIndex::postings(std::string_view term) const {
  static const std::vector<Posting> kEmpty;
  auto it = postings_.find(term);
  return it == postings_.end() ? kEmpty : it->second;
}

std::vector<std::string> InvertedIndex::vocabulary() const {
  std::vector<std::string> out;
  out.reserve(postings_.size());
  for (const auto& [term, list] : postings_) out.push_back(term);
  return out;
}

std::string InvertedIndex::to_text() const {
  if (!finalized_) throw std::logic_error("index not finalized");
  std::ostringstream out;
  out << "#clir-index\t1\n";
  out << "[meta]\n";
  out << "documents\t" << docs_.size() << '\n';
  out << "terms\t" << postings_.size() << '\n';
  out << "[docs]\n";
  for (const auto& id : docs_) out << id << '\n';
  out << "[df]\n";
  for (const auto& [term, list] : postings_) out << term << '\t' << list.size() << '\n';
  out << "[postings]\n";
  for (const auto& [term, list] : postings_) {
    out << term;
    for (const auto& p : list) out << '\t' << p.doc << '\t' << p.tf;
    out << '\n';
  }
  out << "[norms]\n";
  for (const auto& id : docs_) out << id << '\t' << io::format_double(norm(id)) << '\n';
  return out.str();
}

InvertedIndex InvertedIndex::from_text(std::string_view contents) {
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    return data_error("index line " + std::to_string(line_no) + ": " + why);
  };
  auto to_int = [&](const std::string& s) -> std::int64_t {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size() || v < 0) throw fail("bad count '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      throw fail("bad count '" + s + "'");
    }
  };

  InvertedIndex index;
  std::string section;
  bool header = false;
  std::int64_t meta_docs = -1;
  std::int64_t meta_terms = -1;
  std::map<std::string, std::int64_t> dfs;
  std::map<std::string, double> stored_norms;
  std::map<std::string, std::map<std::string, std::int64_t>> postings;
  for (auto line : io::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "#clir-index\t1") throw fail("missing #clir-index header");
      header = true;
      continue;
    }
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    auto f = io::split(line, '\t');
    if (section == "meta") {
      if (f.size() != 2) throw fail("bad meta row");
      if (f[0] == "documents") {
        meta_docs = to_int(f[1]);
      } else if (f[0] == "terms") {
        meta_terms = to_int(f[1]);
      } else {
        throw fail("unknown meta key '" + f[0] + "'");
      }
    } else if (section == "docs") {
      if (f.size() != 1 || !valid_doc_id(f[0])) throw fail("bad document id");
      if (index.doc_slot_.count(f[0])) throw fail("duplicate document id '" + f[0] + "'");
      index.doc_slot_.emplace(f[0], index.docs_.size());
      index.docs_.push_back(f[0]);
    } else if (section == "df") {
      if (f.size() != 2) throw fail("bad df row");
      dfs[f[0]] = to_int(f[1]);
    } else if (section == "postings") {
      if (f.size() < 3 || f.size() % 2 == 0) throw fail("bad postings row");
      auto& list = postings[f[0]];
      for (std::size_t i = 1; i + 1 < f.size(); i += 2) {
        if (!index.doc_slot_.count(f[i])) throw fail("posting for unknown document '" + f[i] + "'");
        const std::int64_t tf = to_int(f[i + 1]);
        if (tf == 0) throw fail("zero term frequency");
        list[f[i]] = tf;
      }
    } else if (section == "norms") {
      if (f.size() != 2) throw fail("bad norms row");
      try {
        stored_norms[f[0]] = std::stod(f[1]);
      } catch (const std::logic_error&) {
        throw fail("bad norm '" + f[1] + "'");
      }
    } else {
      throw fail("row outside a known section");
    }
  }
  if (!header) throw data_error("index: missing #clir-index header");
  if (meta_docs != index.document_count()) throw data_error("index: document count mismatch");
  if (meta_terms != static_cast<std::int64_t>(postings.size())) {
    throw data_error("index: term count mismatch");
  }
  for (const auto& [term, list] : postings) {
    auto it = dfs.find(term);
    if (it == dfs.end() || it->second != static_cast<std::int64_t>(list.size())) {
      throw data_error("index: df of '" + term + "' disagrees with its postings");
    }
    auto& out = index.postings_[term];
    for (const auto& [doc, tf] : list) out.push_back({doc, tf});
  }
  if (dfs.size() != postings.size()) throw data_error("index: df rows without postings");
  index.finalize();
  for (const auto& id : index.docs_) {
    auto it = stored_norms.find(id);
    if (it == stored_norms.end() ||
        std::abs(it->second - index.norm(id)) > 1e-12 * std::max(1.0, index.norm(id))) {
      throw data_error("index: stored norm of '" + id + "' is inconsistent");
    }
  }
  return index;
}

InvertedIndex build_index(const std::vector<Document>& docs, const FieldSelection& fields,
                          const StopwordSet& english_stopwords) {
  if (!fields.any()) throw usage_error("no document fields selected");
  if (docs.empty()) throw data_error("empty collection");
  InvertedIndex index;
  for (const auto& doc : docs) index.add(doc.id, document_terms(doc, fields, english_stopwords));
  index.finalize();
  return index;
}

std::vector<ScoredDoc> search(const InvertedIndex& index,
                              const std::vector<std::string>& terms, std::size_t top_n) {
  if (terms.empty()) throw data_error("empty query");
  if (!index.finalized()) throw std::logic_error("index not finalized");
  std::map<std::string, std::int64_t> qtf;
  for (const auto& t : terms) qtf[t] += 1;

  const std::int64_t n = index.document_count();
  double q_sq = 0.0;
  std::map<std::string, double> dot;
  for (const auto& [term, c] : qtf) {
    const std::int64_t df = index.df(term);
    if (df == 0) continue;
    const double qw = tfidf_weight(c, df, n);
    if (qw == 0.0) continue;
    q_sq += qw * qw;
    for (const auto& p : index.postings(term)) dot[p.doc] += qw * tfidf_weight(p.tf, df, n);
  }
  std::vector<ScoredDoc> out;
  if (q_sq == 0.0) return out;
  const double q_norm = std::sqrt(q_sq);
  for (const auto& [doc, d] : dot) {
    const double dn = index.norm(doc);
    if (dn == 0.0) continue;
    const double score = d / (dn * q_norm);
    if (score > 0.0) out.push_back({doc, score});
  }
  std::sort(out.begin(), out.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc < b.doc;
  });
  if (out.size() > top_n) out.resize(top_n);
  return out;
}

std::string format_run(const std::vector<RankedRun>& runs) {
  std::string out;
  for (const auto& run : runs) {
    std::size_t rank = 0;
    for (const auto& r : run.results) {
      out += run.query_id;
      out += ' ';
      out += std::to_string(++rank);
      out += ' ';
      out += r.doc;
      out += ' ';
      out += io::format_fixed(r.score, 6);
      out += '\n';
    }
  }
  return out;
}

std::vector<RankedRun> parse_run(std::string_view contents, const std::string& source_name) {
  std::vector<RankedRun> runs;
  std::map<std::string, std::size_t> slot;
  std::map<std::string, std::set<std::string>> seen;
  std::size_t line_no = 0;
  for (auto line : io::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (io::trim(line).empty()) continue;
    const std::string where = source_name + ":" + std::to_string(line_no);
    std::istringstream in(line);
    std::string qid, rank_s, doc, score_s, extra;
    if (!(in >> qid >> rank_s >> doc >> score_s) || (in >> extra)) {
      throw data_error(where + ": expected 'query_id rank doc_id score'");
    }
    double score = 0.0;
    long long rank = 0;
    try {
      rank = std::stoll(rank_s);
      score = std::stod(score_s);
    } catch (const std::logic_error&) {
      throw data_error(where + ": bad rank or score");
    }
    auto [it, inserted] = slot.emplace(qid, runs.size());
    if (inserted) runs.push_back({qid, {}});
    auto& run = runs[it->second];
    if (rank != static_cast<long long>(run.results.size()) + 1) {
      throw data_error(where + ": ranks of '" + qid + "' are not consecutive from 1");
    }
    if (!seen[qid].insert(doc).second) {
      throw data_error(where + ": document '" + doc + "' repeated for '" + qid + "'");
    }
    run.results.push_back({doc, score});
  }
  return runs;
}

std::vector<std::string> script_vocabulary(const InvertedIndex& index, Language language) {
  std::vector<std::string> out;
  for (auto& term : index.vocabulary()) {
    bool keep = false;
    if (language == Language::kEnglish) {
      keep = std::all_of(term.begin(), term.end(), [](char c) { return c >= 'a' && c <= 'z'; });
    } else {
      const auto cps = utf8::decode(term);
      keep = !cps.empty() && std::all_of(cps.begin(), cps.end(), [](const utf8::CodePoint& cp) {
        return classify_char(cp.value) == CharClass::kKatakana;
      });
    }
    if (keep && !term.empty()) out.push_back(std::move(term));
  }
  return out;
}

}  // namespace clir
