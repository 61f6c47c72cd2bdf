#pragma once

// Independent reference implementations the tests compare against. They
// share no code paths with the library beyond the model lookups they are
// handed.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Letter similarity straight from the four conditions.
inline int letter_similarity(char e, char j, const std::set<std::pair<char, char>>& similar) {
  auto vowel = [](char c) { return std::string_view("aeiou").find(c) != std::string_view::npos; };
  auto letter = [](char c) { return c >= 'a' && c <= 'z'; };
  if (e == '$' || j == '$') return e == j ? 3 : 0;
  if (e == j) return 3;
  if (similar.count({e, j}) || similar.count({j, e})) return 2;
  if (letter(e) && letter(j) && vowel(e) == vowel(j)) return 1;
  return 0;
}

struct PathResult {
  int score = -1;
  std::vector<std::pair<std::size_t, std::size_t>> path;
};

// Walks every monotone path from the top-left to the bottom-right cell in
// the order diagonal, right, down; keeps the first path of maximal score.
// `sim(r, c)` is the similarity of cell (r, c).
inline PathResult best_monotone_path(std::size_t rows, std::size_t cols,
                                     const std::function<int(std::size_t, std::size_t)>& sim) {
  std::vector<std::vector<int>> table(rows, std::vector<int>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) table[r][c] = sim(r, c);
  }
  PathResult best;
  std::vector<std::pair<std::size_t, std::size_t>> current{{0, 0}};
  std::function<void(std::size_t, std::size_t, int)> walk = [&](std::size_t r, std::size_t c,
                                                               int score) {
    if (r + 1 == rows && c + 1 == cols) {
      if (score > best.score) {
        best.score = score;
        best.path = current;
      }
      return;
    }
    if (r + 1 < rows && c + 1 < cols) {
      current.emplace_back(r + 1, c + 1);
      walk(r + 1, c + 1, score + table[r + 1][c + 1]);
      current.pop_back();
    }
    if (c + 1 < cols) {
      current.emplace_back(r, c + 1);
      walk(r, c + 1, score);
      current.pop_back();
    }
    if (r + 1 < rows) {
      current.emplace_back(r + 1, c);
      walk(r + 1, c, score);
      current.pop_back();
    }
  };
  walk(0, 0, table[0][0]);
  return best;
}

struct ScoredPath {
  std::vector<std::string> words;
  double score = 0.0;
};

// Every path through a lattice, scored left to right as
//   s = channel_0; s = (s + transition) + channel_i.
inline std::vector<ScoredPath> enumerate_lattice(
    const std::vector<std::vector<std::pair<std::string, double>>>& lattice,
    const std::function<double(const std::string&, const std::string&)>& log_transition) {
  std::vector<ScoredPath> out;
  if (lattice.empty()) return out;
  std::vector<std::size_t> pick(lattice.size(), 0);
  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (i == lattice.size()) {
      ScoredPath p;
      double s = lattice[0][pick[0]].second;
      p.words.push_back(lattice[0][pick[0]].first);
      for (std::size_t j = 1; j < lattice.size(); ++j) {
        const auto& opt = lattice[j][pick[j]];
        s = (s + log_transition(lattice[j - 1][pick[j - 1]].first, opt.first)) + opt.second;
        p.words.push_back(opt.first);
      }
      p.score = s;
      out.push_back(std::move(p));
      return;
    }
    for (pick[i] = 0; pick[i] < lattice[i].size(); ++pick[i]) choose(i + 1);
  };
  choose(0);
  std::sort(out.begin(), out.end(), [](const ScoredPath& a, const ScoredPath& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.words < b.words;
  });
  return out;
}

// Best joint partition of two atom sequences into equally many groups.
// `pair_score(s, t)` is the log channel of an aligned group pair or nullopt
// when the pair is not allowed; `transition(t1, t2)` links target groups.
inline std::optional<double> best_joint_segmentation(
    const std::vector<std::string>& source, const std::vector<std::string>& target,
    const std::function<std::optional<double>(const std::string&, const std::string&)>& pair_score,
    const std::function<double(const std::string&, const std::string&)>& transition) {
  std::optional<double> best;
  std::vector<std::string> targets;
  double acc = 0.0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
    if (i == source.size() || j == target.size()) {
      if (i == source.size() && j == target.size() && (!best || acc > *best)) best = acc;
      return;
    }
    std::string s;
    for (std::size_t a = i; a < source.size(); ++a) {
      s += source[a];
      std::string t;
      for (std::size_t b = j; b < target.size(); ++b) {
        t += target[b];
        const auto ch = pair_score(s, t);
        if (!ch) continue;
        const double saved = acc;
        acc += *ch;
        if (!targets.empty()) acc += transition(targets.back(), t);
        targets.push_back(t);
        walk(a + 1, b + 1);
        targets.pop_back();
        acc = saved;
      }
    }
  };
  walk(0, 0);
  return best;
}

// Dense TF-IDF cosine over explicit document term lists.
inline std::vector<std::pair<std::string, double>> dense_cosine(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& docs,
    const std::vector<std::string>& query) {
  std::set<std::string> vocab_set;
  for (const auto& [id, terms] : docs) vocab_set.insert(terms.begin(), terms.end());
  const std::vector<std::string> vocab(vocab_set.begin(), vocab_set.end());
  const double n = static_cast<double>(docs.size());
  const std::size_t v = vocab.size();

  std::vector<std::vector<double>> tf(docs.size(), std::vector<double>(v, 0.0));
  std::vector<double> df(v, 0.0);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const auto& t : docs[d].second) {
      const auto k = static_cast<std::size_t>(
          std::lower_bound(vocab.begin(), vocab.end(), t) - vocab.begin());
      tf[d][k] += 1.0;
    }
    for (std::size_t k = 0; k < v; ++k) df[k] += tf[d][k] > 0 ? 1.0 : 0.0;
  }
  auto weight = [&](double f, double dfk) {
    if (f <= 0 || dfk <= 0) return 0.0;
    return (1.0 + std::log(f)) * std::log(n / dfk);
  };
  std::vector<double> q(v, 0.0);
  for (const auto& t : query) {
    auto it = std::lower_bound(vocab.begin(), vocab.end(), t);
    if (it != vocab.end() && *it == t) q[static_cast<std::size_t>(it - vocab.begin())] += 1.0;
  }
  double qn = 0.0;
  std::vector<double> qw(v, 0.0);
  for (std::size_t k = 0; k < v; ++k) {
    qw[k] = weight(q[k], df[k]);
    qn += qw[k] * qw[k];
  }
  qn = std::sqrt(qn);
  std::vector<std::pair<std::string, double>> out;
  if (qn == 0.0) return out;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    double dot = 0.0, dn = 0.0;
    for (std::size_t k = 0; k < v; ++k) {
      const double w = weight(tf[d][k], df[k]);
      dn += w * w;
      if (qw[k] != 0.0) dot += qw[k] * w;
    }
    dn = std::sqrt(dn);
    if (dn == 0.0) continue;
    const double s = dot / (dn * qn);
    if (s > 0.0) out.emplace_back(docs[d].first, s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

// 11-point interpolated average precision: at each recall level, the best
// precision over all cutoffs whose recall reaches it.
inline double eleven_point_ap(const std::vector<bool>& relevant, std::int64_t num_relevant) {
  if (num_relevant <= 0) return 0.0;
  double total = 0.0;
  for (int level = 0; level <= 10; ++level) {
    double best = 0.0;
    std::int64_t hits = 0;
    for (std::size_t cutoff = 1; cutoff <= relevant.size(); ++cutoff) {
      if (relevant[cutoff - 1]) ++hits;
      const bool reaches = hits * 10 >= static_cast<std::int64_t>(level) * num_relevant;
      if (reaches && hits > 0) {
        best = std::max(best, static_cast<double>(hits) / static_cast<double>(cutoff));
      }
    }
    total += best;
  }
  return total / 11.0;
}

}  // namespace oracle
