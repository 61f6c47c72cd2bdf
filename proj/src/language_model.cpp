#include "clir/language_model.hpp"

#include <cmath>
#include <sstream>

#include "clir/error.hpp"
#include "clir/io.hpp"

namespace clir {

BigramModel BigramModel::train(const std::vector<std::vector<std::string>>& sequences,
                               const BigramOptions& options) {
  if (!(options.epsilon > 0.0)) throw usage_error("bigram epsilon must be > 0");
  BigramModel model;
  model.options_ = options;
  for (const auto& seq : sequences) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      model.unigrams_[seq[i]] += 1;
      if (i == 0) {
        if (options.use_boundary) {
          model.bigrams_[std::string(kSentinel)][seq[i]] += 1;
          model.successor_totals_[std::string(kSentinel)] += 1;
        }
        continue;
      }
      model.bigrams_[seq[i - 1]][seq[i]] += 1;
      model.successor_totals_[seq[i - 1]] += 1;
    }
  }
  return model;
}

std::size_t BigramModel::vocabulary_size() const {
  return unigrams_.empty() ? 1 : unigrams_.size();
}

std::int64_t BigramModel::unigram(std::string_view item) const {
  auto it = unigrams_.find(item);
  return it == unigrams_.end() ? 0 : it->second;
}

std::int64_t BigramModel::bigram(std::string_view prev, std::string_view next) const {
  auto it = bigrams_.find(prev);
  if (it == bigrams_.end()) return 0;
  auto jt = it->second.find(next);
  return jt == it->second.end() ? 0 : jt->second;
}

std::int64_t BigramModel::successor_total(std::string_view prev) const {
  auto it = successor_totals_.find(prev);
  return it == successor_totals_.end() ? 0 : it->second;
}

std::vector<std::string> BigramModel::successors(std::string_view prev) const {
  std::vector<std::string> out;
  auto it = bigrams_.find(prev);
  if (it == bigrams_.end()) return out;
  for (const auto& [next, c] : it->second) out.push_back(next);
  return out;
}

std::string BigramModel::to_tsv() const {
  std::ostringstream out;
  out << "#bigram\t" << vocabulary_size() << '\t'
      << io::format_double(options_.epsilon) << '\t'
      << (options_.use_boundary ? 1 : 0) << '\n';
  for (const auto& [item, c] : unigrams_) out << "u\t" << item << '\t' << c << '\n';
  for (const auto& [prev, nexts] : bigrams_) {
    for (const auto& [next, c] : nexts) {
      out << "b\t" << prev << '\t' << next << '\t' << c << '\n';
    }
  }
  return out.str();
}

BigramModel BigramModel::from_tsv(std::string_view contents) {
  BigramModel model;
  bool header = false;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    return data_error("bigram model line " + std::to_string(line_no) + ": " + why);
  };
  for (auto line : io::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = io::split(line, '\t');
    try {
      if (f[0] == "#bigram") {
        if (f.size() != 4) throw fail("bad header");
        model.options_.epsilon = std::stod(f[2]);
        model.options_.use_boundary = f[3] == "1";
        header = true;
      } else if (f[0] == "u" && f.size() == 3) {
        model.unigrams_[f[1]] = std::stoll(f[2]);
      } else if (f[0] == "b" && f.size() == 4) {
        const std::int64_t c = std::stoll(f[3]);
        model.bigrams_[f[1]][f[2]] = c;
        model.successor_totals_[f[1]] += c;
      } else {
        throw fail("unrecognized row");
      }
    } catch (const std::invalid_argument&) {
      throw fail("bad number");
    } catch (const std::out_of_range&) {
      throw fail("number out of range");
    }
  }
  if (!header) throw data_error("bigram model: missing #bigram header");
  return model;
}

double cond_prob(const BigramModel& model, std::string_view prev,
                 std::string_view next) {
  const double v = static_cast<double>(model.vocabulary_size());
  const std::int64_t total = model.successor_total(prev);
  if (total == 0) return 1.0 / v;
  const double eps = model.epsilon();
  return (static_cast<double>(model.bigram(prev, next)) + eps) /
         (static_cast<double>(total) + eps * v);
}

double log_cond_prob(const BigramModel& model, std::string_view prev,
                     std::string_view next) {
  return std::log(cond_prob(model, prev, next));
}

double log_sequence_prob(const BigramModel& model,
                         const std::vector<std::string>& items) {
  double score = 0.0;
  if (items.empty()) return score;
  if (model.use_boundary()) {
    score += log_cond_prob(model, BigramModel::kSentinel, items.front());
  }
  for (std::size_t i = 1; i < items.size(); ++i) {
    score += log_cond_prob(model, items[i - 1], items[i]);
  }
  return score;
}

}  // namespace clir
