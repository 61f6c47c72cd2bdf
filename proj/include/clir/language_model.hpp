#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clir {

struct BigramOptions {
  double epsilon = 0.01;
  // Condition the first item of each sequence on a start sentinel. Off by
  // default: the target prior is a product over transitions only.
  bool use_boundary = false;

  bool operator==(const BigramOptions&) const = default;
};

// Additively smoothed P(next | prev) over an arbitrary item alphabet.
class BigramModel {
 public:
  static constexpr std::string_view kSentinel = "<s>";

  BigramModel() = default;

  static BigramModel train(const std::vector<std::vector<std::string>>& sequences,
                           const BigramOptions& options = {});

  double epsilon() const { return options_.epsilon; }
  bool use_boundary() const { return options_.use_boundary; }
  // Distinct items seen (the sentinel excluded), at least 1.
  std::size_t vocabulary_size() const;

  std::int64_t unigram(std::string_view item) const;
  std::int64_t bigram(std::string_view prev, std::string_view next) const;
  // count(prev, .)
  std::int64_t successor_total(std::string_view prev) const;
  // Successors observed after `prev`.
  std::vector<std::string> successors(std::string_view prev) const;

  const std::map<std::string, std::int64_t, std::less<>>& unigrams() const {
    return unigrams_;
  }

  // TSV: header `#bigram V eps boundary`, then `u item count` and
  // `b prev next count` rows.
  std::string to_tsv() const;
  static BigramModel from_tsv(std::string_view contents);

  bool operator==(const BigramModel&) const = default;

 private:
  BigramOptions options_;
  std::map<std::string, std::int64_t, std::less<>> unigrams_;
  std::map<std::string, std::map<std::string, std::int64_t, std::less<>>,
           std::less<>>
      bigrams_;
  std::map<std::string, std::int64_t, std::less<>> successor_totals_;
};

// (count(prev,next) + eps) / (count(prev,.) + eps * V); 1/V for unseen prev.
double cond_prob(const BigramModel& model, std::string_view prev,
                 std::string_view next);

double log_cond_prob(const BigramModel& model, std::string_view prev,
                     std::string_view next);

// Log prior of a whole sequence: the transition product, preceded by the
// sentinel term when the model uses boundaries.
double log_sequence_prob(const BigramModel& model,
                         const std::vector<std::string>& items);

}  // namespace clir
