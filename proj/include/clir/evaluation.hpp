#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clir/retrieval.hpp"

namespace clir {

enum class Grade { kIrrelevant = 0, kPartial = 1, kRelevant = 2 };

// Lenient: partially relevant counts as relevant. Strict: only grade 2.
enum class Binarization { kLenient, kStrict };

std::string_view binarization_name(Binarization b);
std::optional<Binarization> parse_binarization(std::string_view name);

bool is_relevant(Grade g, Binarization b);

class Judgments {
 public:
  // Lines `query_id doc_id grade`, grade in {0, 1, 2}. A repeated pair with
  // a different grade is a data error.
  static Judgments parse(std::string_view contents, const std::string& source_name = "qrels");
  static Judgments load(const std::filesystem::path& path);

  void set(const std::string& query, const std::string& doc, Grade grade);
  Grade grade(std::string_view query, std::string_view doc) const;
  std::int64_t relevant_count(std::string_view query, Binarization b) const;
  std::vector<std::string> queries() const;  // sorted

 private:
  std::map<std::string, std::map<std::string, Grade, std::less<>>, std::less<>> grades_;
};

constexpr std::size_t kRecallPoints = 11;
using PrecisionCurve = std::array<double, kRecallPoints>;

// Interpolated precision at recall 0.0, 0.1, ..., 1.0 for a ranked list of
// relevance flags, with `num_relevant` judged-relevant documents in total.
PrecisionCurve interpolated_precision(const std::vector<bool>& relevant,
                                      std::int64_t num_relevant);

double eleven_point_average(const PrecisionCurve& curve);

struct QueryEvaluation {
  std::string query_id;
  std::int64_t num_relevant = 0;
  std::int64_t relevant_retrieved = 0;
  PrecisionCurve precision{};
  double average_precision = 0.0;
};

struct EvalReport {
  std::vector<QueryEvaluation> queries;  // sorted by query id
  PrecisionCurve mean_precision{};
  double mean_average_precision = 0.0;
  std::vector<std::string> warnings;

  // One row per query plus a `mean` row; 4 decimals.
  std::string to_tsv() const;
};

// Scores every judged query with at least one relevant document; judged
// queries absent from the run score 0. Run queries without relevant
// documents are skipped with a warning. Throws data_error("empty run") when
// `runs` is empty and data_error when no query can be scored.
EvalReport evaluate(const std::vector<RankedRun>& runs, const Judgments& judgments,
                    Binarization binarization = Binarization::kLenient);

}  // namespace clir
