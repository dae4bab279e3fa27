#pragma once

// Deterministic subset enumeration and sampling helpers shared by the
// verification harness and the field-lemma scans.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace dotplus {

inline unsigned long long binomial_ull(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  if (k > n - k) k = n - k;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
  return r;
}

/// All k-combinations of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Uniform k-subset of {0..n-1} via partial Fisher-Yates; sorted output.
inline std::vector<int> sample_combination(std::mt19937_64& rng, int n, int k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> d(i, n - 1);
    int j = d(rng);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    out.push_back(pool[static_cast<std::size_t>(i)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Size drawn uniformly from [1, max_size], then a uniform subset of that
/// size. Small sizes are where the bounds bind, so this is the sampling
/// distribution used throughout.
inline std::vector<int> sample_subset(std::mt19937_64& rng, int n, int max_size) {
  std::uniform_int_distribution<int> sz(1, max_size);
  return sample_combination(rng, n, sz(rng));
}

}  // namespace dotplus
