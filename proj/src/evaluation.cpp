#include "clir/evaluation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "clir/error.hpp"
#include "clir/io.hpp"

namespace clir {

std::string_view binarization_name(Binarization b) {
  return b == Binarization::kLenient ? "lenient" : "strict";
}

std::optional<Binarization> parse_binarization(std::string_view name) {
  if (name == "lenient") return Binarization::kLenient;
  if (name == "strict") return Binarization::kStrict;
  return std::nullopt;
}

bool is_relevant(Grade g, Binarization b) {
  return b == Binarization::kLenient ? g != Grade::kIrrelevant : g == Grade::kRelevant;
}

Judgments Judgments::parse(std::string_view contents, const std::string& source_name) {
  Judgments out;
  std::size_t line_no = 0;
  for (auto line : io::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto trimmed = io::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const std::string where = source_name + ":" + std::to_string(line_no);
    std::istringstream in{std::string(trimmed)};
    std::string query, doc, grade, extra;
    if (!(in >> query >> doc >> grade) || (in >> extra)) {
      throw data_error(where + ": expected 'query_id doc_id grade'");
    }
    if (grade != "0" && grade != "1" && grade != "2") {
      throw data_error(where + ": grade must be 0, 1 or 2");
    }
    const Grade g = static_cast<Grade>(grade[0] - '0');
    auto& row = out.grades_[query];
    auto it = row.find(doc);
    if (it != row.end() && it->second != g) {
      throw data_error(where + ": conflicting grade for " + query + " " + doc);
    }
    row[doc] = g;
  }
  return out;
}

Judgments Judgments::load(const std::filesystem::path& path) {
  return parse(io::read_file(path), path.string());
}

void Judgments::set(const std::string& query, const std::string& doc, Grade grade) {
  grades_[query][doc] = grade;
}

Grade Judgments::grade(std::string_view query, std::string_view doc) const {
  auto q = grades_.find(query);
  if (q == grades_.end()) return Grade::kIrrelevant;
  auto d = q->second.find(doc);
  return d == q->second.end() ? Grade::kIrrelevant : d->second;
}

std::int64_t Judgments::relevant_count(std::string_view query, Binarization b) const {
  auto q = grades_.find(query);
  if (q == grades_.end()) return 0;
  return std::count_if(q->second.begin(), q->second.end(),
                       [b](const auto& kv) { return is_relevant(kv.second, b); });
}

std::vector<std::string> Judgments::queries() const {
  std::vector<std::string> out;
  for (const auto& [q, row] : grades_) out.push_back(q);
  return out;
}

PrecisionCurve interpolated_precision(const std::vector<bool>& relevant,
                                      std::int64_t num_relevant) {
  PrecisionCurve curve{};
  if (num_relevant <= 0) return curve;
  // Precision after each relevant hit, then a running max from the right.
  std::vector<std::pair<std::int64_t, double>> hits;  // (relevant so far, precision)
  std::int64_t found = 0;
  for (std::size_t i = 0; i < relevant.size(); ++i) {
    if (!relevant[i]) continue;
    ++found;
    hits.emplace_back(found, static_cast<double>(found) / static_cast<double>(i + 1));
  }
  double best = 0.0;
  std::size_t h = hits.size();
  for (std::size_t p = kRecallPoints; p-- > 0;) {
    // Recall found/num_relevant >= p/10, compared in integers.
    while (h > 0 && hits[h - 1].first * 10 >= static_cast<std::int64_t>(p) * num_relevant) {
      best = std::max(best, hits[h - 1].second);
      --h;
    }
    curve[p] = best;
  }
  return curve;
}

double eleven_point_average(const PrecisionCurve& curve) {
  double sum = 0.0;
  for (double p : curve) sum += p;
  return sum / static_cast<double>(kRecallPoints);
}

EvalReport evaluate(const std::vector<RankedRun>& runs, const Judgments& judgments,
                    Binarization binarization) {
  if (runs.empty()) throw data_error("empty run");
  EvalReport report;
  std::map<std::string, const RankedRun*> by_query;
  for (const auto& run : runs) by_query.emplace(run.query_id, &run);

  std::set<std::string> scored;
  for (const auto& q : judgments.queries()) {
    if (judgments.relevant_count(q, binarization) > 0) scored.insert(q);
  }
  for (const auto& [q, run] : by_query) {
    if (!scored.count(q)) {
      report.warnings.push_back("query '" + q + "' has no relevant documents; skipped");
    }
  }
  if (scored.empty()) throw data_error("no judged query has a relevant document");

  for (const auto& q : scored) {
    QueryEvaluation ev;
    ev.query_id = q;
    ev.num_relevant = judgments.relevant_count(q, binarization);
    std::vector<bool> flags;
    auto it = by_query.find(q);
    if (it != by_query.end()) {
      for (const auto& r : it->second->results) {
        flags.push_back(is_relevant(judgments.grade(q, r.doc), binarization));
      }
    } else {
      report.warnings.push_back("query '" + q + "' missing from run; scored 0");
    }
    ev.relevant_retrieved = std::count(flags.begin(), flags.end(), true);
    ev.precision = interpolated_precision(flags, ev.num_relevant);
    ev.average_precision = eleven_point_average(ev.precision);
    report.queries.push_back(std::move(ev));
  }
  const double n = static_cast<double>(report.queries.size());
  for (const auto& ev : report.queries) {
    for (std::size_t p = 0; p < kRecallPoints; ++p) report.mean_precision[p] += ev.precision[p];
    report.mean_average_precision += ev.average_precision;
  }
  for (auto& p : report.mean_precision) p /= n;
  report.mean_average_precision /= n;
  return report;
}

std::string EvalReport::to_tsv() const {
  std::ostringstream out;
  out << "query\tnum_rel\trel_ret";
  for (std::size_t p = 0; p < kRecallPoints; ++p) {
    out << "\tp" << io::format_fixed(static_cast<double>(p) / 10.0, 1);
  }
  out << "\tap\n";
  auto row = [&](const std::string& name, const std::string& rel, const std::string& ret,
                 const PrecisionCurve& curve, double ap) {
    out << name << '\t' << rel << '\t' << ret;
    for (double v : curve) out << '\t' << io::format_fixed(v, 4);
    out << '\t' << io::format_fixed(ap, 4) << '\n';
  };
  std::int64_t rel_total = 0, ret_total = 0;
  for (const auto& q : queries) {
    row(q.query_id, std::to_string(q.num_relevant), std::to_string(q.relevant_retrieved),
        q.precision, q.average_precision);
    rel_total += q.num_relevant;
    ret_total += q.relevant_retrieved;
  }
  row("mean", std::to_string(rel_total), std::to_string(ret_total), mean_precision,
      mean_average_precision);
  return out.str();
}

}  // namespace clir
