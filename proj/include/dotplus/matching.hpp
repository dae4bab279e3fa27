#pragma once

// Constructive distinct-representative sums: pick i_2..i_n with
// a_1+b_1,...,a_1+b_m, a_2+b_{i_2},...,a_n+b_{i_n} all distinct, via
// augmenting-path bipartite matching on X_j = ({a_1,a_j}+B) \ (a_1+B).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dotplus/group.hpp"

namespace dotplus {

struct MatchingResult {
  std::uint64_t group_hash = 0;
  std::vector<int> a;                    // ordered, a[0] distinguished
  std::vector<int> b;                    // ordered
  std::vector<int> base_sums;            // a_1 + b_j for all j
  std::vector<int> assignment;           // i_2..i_n, 1-based indices into b
  std::vector<int> representative_sums;  // a_j + b_{i_j}
};

/// Requires n + m - 1 <= p(G); guaranteed to succeed under that hypothesis.
inline MatchingResult hall_representatives(const FiniteGroup& g, const std::vector<int>& a,
                                           const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  if (n == 0 || m == 0) throw invalid_input("hall_representatives: empty input");
  if (n + m - 1 > g.least_prime_factor())
    throw invalid_input("hall_representatives: n+m-1 = " + std::to_string(n + m - 1) +
                        " exceeds p(G) = " + std::to_string(g.least_prime_factor()));

  MatchingResult res;
  res.group_hash = g.table_hash();
  res.a = a;
  res.b = b;
  for (int y : b) res.base_sums.push_back(g.op(a[0], y));

  GroupSubset base(g);
  for (int s : res.base_sums) base.set(s);

  // X_j masks for j = 1..n-1 (0-based over a[1..])
  std::vector<std::vector<int>> options(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j) {
    for (int y : b) {
      int s = g.op(a[static_cast<std::size_t>(j)], y);
      if (!base.test(s)) options[static_cast<std::size_t>(j - 1)].push_back(s);
    }
    std::sort(options[static_cast<std::size_t>(j - 1)].begin(),
              options[static_cast<std::size_t>(j - 1)].end());
    options[static_cast<std::size_t>(j - 1)].erase(
        std::unique(options[static_cast<std::size_t>(j - 1)].begin(),
                    options[static_cast<std::size_t>(j - 1)].end()),
        options[static_cast<std::size_t>(j - 1)].end());
  }

  // Kuhn augmenting paths, vertices in ascending index for determinism
  std::vector<int> matched_sum(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> chosen(static_cast<std::size_t>(n - 1), -1);
  std::vector<bool> visited;
  std::function<bool(int)> try_augment = [&](int j) -> bool {
    for (int s : options[static_cast<std::size_t>(j)]) {
      if (visited[static_cast<std::size_t>(s)]) continue;
      visited[static_cast<std::size_t>(s)] = true;
      if (matched_sum[static_cast<std::size_t>(s)] < 0 ||
          try_augment(matched_sum[static_cast<std::size_t>(s)])) {
        matched_sum[static_cast<std::size_t>(s)] = j;
        chosen[static_cast<std::size_t>(j)] = s;
        return true;
      }
    }
    return false;
  };
  for (int j = 0; j < n - 1; ++j) {
    visited.assign(static_cast<std::size_t>(g.order()), false);
    if (!try_augment(j))
      throw error("hall_representatives: no matching found despite hypothesis; this is a bug");
  }

  for (int j = 1; j < n; ++j) {
    int s = chosen[static_cast<std::size_t>(j - 1)];
    // s = a_j + b for some b in B, unique row solution
    int y = g.op(g.inv(a[static_cast<std::size_t>(j)]), s);
    auto it = std::find(b.begin(), b.end(), y);
    if (it == b.end()) throw error("hall_representatives: matched sum has no witness in B");
    res.assignment.push_back(static_cast<int>(it - b.begin()) + 1);
    res.representative_sums.push_back(s);
  }
  return res;
}

/// Recompute all sums from the payload and check pairwise distinctness.
inline bool verify_sdr(const FiniteGroup& g, const MatchingResult& r) {
  if (r.group_hash != g.table_hash()) return false;
  std::vector<int> sums;
  for (std::size_t j = 0; j < r.b.size(); ++j) {
    if (j >= r.base_sums.size() || g.op(r.a[0], r.b[j]) != r.base_sums[j]) return false;
    sums.push_back(r.base_sums[j]);
  }
  if (r.assignment.size() != r.a.size() - 1) return false;
  for (std::size_t j = 1; j < r.a.size(); ++j) {
    int idx = r.assignment[j - 1];
    if (idx < 1 || idx > static_cast<int>(r.b.size())) return false;
    int s = g.op(r.a[j], r.b[static_cast<std::size_t>(idx - 1)]);
    if (j - 1 >= r.representative_sums.size() || s != r.representative_sums[j - 1]) return false;
    sums.push_back(s);
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

/// Tries each element of A as the distinguished a_1, in order.
inline MatchingResult hall_representatives_any_anchor(const FiniteGroup& g,
                                                      const std::vector<int>& a,
                                                      const std::vector<int>& b) {
  std::string last_err;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<int> rotated = a;
    std::swap(rotated[0], rotated[k]);
    try {
      return hall_representatives(g, rotated, b);
    } catch (const error& e) {
      last_err = e.what();
    }
  }
  throw error("hall_representatives_any_anchor: all anchors failed: " + last_err);
}

}  // namespace dotplus
