#pragma once

// For a solvable G and sigma in Aut G: find a proper normal sigma-invariant
// subgroup H whose quotient is the additive group of a finite field on which
// the induced map acts as multiplication by a nonzero field element. Returns
// the explicit witness (chi, gamma), re-verified pointwise.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "dotplus/automorphism.hpp"
#include "dotplus/field.hpp"
#include "dotplus/group.hpp"

namespace dotplus {

struct FieldStructure {
  int p = 0;
  int alpha = 0;
  FiniteField field{2, 1};
  int gamma = 0;
  std::vector<int> chi;  // quotient element index -> field element index
};

struct BwResult {
  QuotientStructure quotient;
  FieldStructure fs;
};

namespace bwdetail {

// column vectors over F_p
using Vec = std::vector<int>;
using Mat = std::vector<Vec>;  // list of columns

inline Vec mat_vec(const Mat& m, const Vec& v, int p) {
  const int dim = static_cast<int>(v.size());
  Vec out(static_cast<std::size_t>(dim), 0);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r)
      out[static_cast<std::size_t>(r)] =
          (out[static_cast<std::size_t>(r)] +
           m[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] * v[static_cast<std::size_t>(c)]) %
          p;
  return out;
}

inline int inv_mod(int a, int p) {
  int r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Solve K x = w for the square column matrix K; nullopt if singular.
inline std::optional<Vec> solve(const Mat& k, const Vec& w, int p) {
  const int dim = static_cast<int>(w.size());
  // augmented row-major copy
  std::vector<std::vector<int>> m(static_cast<std::size_t>(dim),
                                  std::vector<int>(static_cast<std::size_t>(dim + 1), 0));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          k[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] % p;
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(dim)] = w[static_cast<std::size_t>(r)] % p;
  }
  for (int col = 0; col < dim; ++col) {
    int piv = -1;
    for (int r = col; r < dim; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(piv)]);
    int inv = inv_mod(m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)], p);
    for (int c = col; c <= dim; ++c)
      m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] =
          m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] * inv % p;
    for (int r = 0; r < dim; ++r) {
      if (r == col) continue;
      int f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c <= dim; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
              f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)]) %
                 p +
             p) %
            p;
    }
  }
  Vec x(static_cast<std::size_t>(dim));
  for (int r = 0; r < dim; ++r)
    x[static_cast<std::size_t>(r)] = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(dim)];
  return x;
}

inline int rank(const Mat& cols, int p) {
  if (cols.empty()) return 0;
  const int dim = static_cast<int>(cols[0].size());
  std::vector<std::vector<int>> m;
  for (const auto& c : cols) m.push_back(c);
  int rk = 0;
  for (int col = 0; col < dim && rk < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (int r = rk; r < static_cast<int>(m.size()); ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(rk)], m[static_cast<std::size_t>(piv)]);
    int inv = inv_mod(((m[static_cast<std::size_t>(rk)][static_cast<std::size_t>(col)] % p) + p) % p, p);
    for (int c = 0; c < dim; ++c)
      m[static_cast<std::size_t>(rk)][static_cast<std::size_t>(c)] =
          ((m[static_cast<std::size_t>(rk)][static_cast<std::size_t>(c)] % p) + p) % p * inv % p;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rk) continue;
      int f = ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % p) + p) % p;
      if (!f) continue;
      for (int c = 0; c < dim; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
              f * m[static_cast<std::size_t>(rk)][static_cast<std::size_t>(c)]) %
                 p +
             p) %
            p;
    }
    ++rk;
  }
  return rk;
}

/// Smallest sigma-stable normal subgroup containing the seed set.
inline GroupSubset stable_closure(const FiniteGroup& g, const Automorphism& sigma,
                                  GroupSubset seed) {
  for (;;) {
    GroupSubset cur = g.subgroup_generated(seed);
    GroupSubset next = cur;
    cur.for_each([&](int x) {
      next.set(sigma.image(x));
      for (int c = 0; c < g.order(); ++c) next.set(g.op(g.op(g.inv(c), x), c));
    });
    if (next == cur) return cur;
    seed = next;
  }
}

/// The full lattice of sigma-invariant normal subgroups: stable closures of
/// cyclic subgroups, closed under joins.
inline std::vector<GroupSubset> invariant_normal_subgroups(const FiniteGroup& g,
                                                           const Automorphism& sigma) {
  std::set<std::array<std::uint64_t, 4>> seen;
  std::vector<GroupSubset> out;
  auto add = [&](const GroupSubset& s) {
    if (seen.insert(s.words()).second) out.push_back(s);
  };
  GroupSubset triv(g);
  triv.set(0);
  add(triv);
  for (int x = 1; x < g.order(); ++x) {
    GroupSubset seed(g);
    seed.set(x);
    add(stable_closure(g, sigma, seed));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      GroupSubset u = out[i] | out[j];
      if (!(u == out[i]) && !(u == out[j])) add(stable_closure(g, sigma, u));
    }
  return out;
}

}  // namespace bwdetail

/// Attempt the field-structure construction for one candidate H. Returns
/// nullopt if the quotient is not elementary abelian or the induced map has
/// no cyclic vector with irreducible minimal polynomial.
inline std::optional<BwResult> try_bw_subgroup(const FiniteGroup& g, const Automorphism& sigma,
                                               const GroupSubset& h) {
  using namespace bwdetail;
  QuotientStructure q = quotient(g, h);
  const FiniteGroup& qu = q.quotient;
  const int nq = qu.order();
  if (nq < 2) return std::nullopt;
  const int p = qu.least_prime_factor();
  int alpha = 0;
  {
    int t = nq;
    while (t % p == 0) {
      t /= p;
      ++alpha;
    }
    if (t != 1) return std::nullopt;  // not a p-group
  }
  if (!qu.is_abelian()) return std::nullopt;
  for (int x = 1; x < nq; ++x)
    if (qu.element_order(x) != p) return std::nullopt;  // not elementary abelian

  Automorphism sbar = restrict_to_quotient(g, sigma, q);

  // F_p basis by greedy span growth
  std::vector<int> basis;
  GroupSubset span(qu);
  span.set(0);
  for (int x = 1; x < nq; ++x) {
    if (span.test(x)) continue;
    basis.push_back(x);
    GroupSubset seed = span;
    seed.set(x);
    span = qu.subgroup_generated(seed);
  }
  if (static_cast<int>(basis.size()) != alpha) return std::nullopt;

  // coordinates of every element
  std::vector<Vec> coord_of(static_cast<std::size_t>(nq));
  {
    std::vector<int> c(static_cast<std::size_t>(alpha), 0);
    for (;;) {
      int e = 0;
      for (int i = 0; i < alpha; ++i)
        for (int k = 0; k < c[static_cast<std::size_t>(i)]; ++k)
          e = qu.op(e, basis[static_cast<std::size_t>(i)]);
      coord_of[static_cast<std::size_t>(e)] = c;
      int i = 0;
      while (i < alpha && ++c[static_cast<std::size_t>(i)] == p) c[static_cast<std::size_t>(i++)] = 0;
      if (i == alpha) break;
    }
  }

  // matrix of the induced map in this basis
  Mat m;
  for (int i = 0; i < alpha; ++i)
    m.push_back(coord_of[static_cast<std::size_t>(sbar.image(basis[static_cast<std::size_t>(i)]))]);

  // cyclic vector search, ascending element index
  for (int v = 1; v < nq; ++v) {
    Mat krylov{coord_of[static_cast<std::size_t>(v)]};
    for (int i = 1; i < alpha; ++i) krylov.push_back(mat_vec(m, krylov.back(), p));
    if (rank(krylov, p) != alpha) continue;
    Vec next = mat_vec(m, krylov.back(), p);
    auto c = solve(krylov, next, p);
    if (!c) continue;
    // minimal polynomial x^alpha - sum c_j x^j
    std::vector<int> minpoly(static_cast<std::size_t>(alpha + 1));
    for (int j = 0; j < alpha; ++j)
      minpoly[static_cast<std::size_t>(j)] = ((-(*c)[static_cast<std::size_t>(j)]) % p + p) % p;
    minpoly[static_cast<std::size_t>(alpha)] = 1;
    if (!FiniteField::is_irreducible(minpoly, p)) return std::nullopt;

    FiniteField field(p, alpha);
    int gamma = -1;
    for (int x = 0; x < field.size(); ++x)
      if (field.eval_poly(minpoly, x) == 0) {
        gamma = x;
        break;
      }
    if (gamma <= 0) return std::nullopt;

    FieldStructure fs;
    fs.p = p;
    fs.alpha = alpha;
    fs.field = field;
    fs.gamma = gamma;
    fs.chi.resize(static_cast<std::size_t>(nq));
    for (int e = 0; e < nq; ++e) {
      auto coeffs = solve(krylov, coord_of[static_cast<std::size_t>(e)], p);
      if (!coeffs) return std::nullopt;
      int val = 0;
      for (int j = 0; j < alpha; ++j)
        val = field.add(val, field.mul(field.scalar((*coeffs)[static_cast<std::size_t>(j)]),
                                       field.pow(gamma, j)));
      fs.chi[static_cast<std::size_t>(e)] = val;
    }

    // pointwise re-verification of the three invariants
    std::vector<bool> hit(static_cast<std::size_t>(field.size()), false);
    for (int e = 0; e < nq; ++e) {
      int v1 = fs.chi[static_cast<std::size_t>(e)];
      if (hit[static_cast<std::size_t>(v1)]) return std::nullopt;
      hit[static_cast<std::size_t>(v1)] = true;
    }
    for (int x = 0; x < nq; ++x)
      for (int y = 0; y < nq; ++y)
        if (fs.chi[static_cast<std::size_t>(qu.op(x, y))] !=
            field.add(fs.chi[static_cast<std::size_t>(x)], fs.chi[static_cast<std::size_t>(y)]))
          return std::nullopt;
    for (int x = 0; x < nq; ++x)
      if (fs.chi[static_cast<std::size_t>(sbar.image(x))] !=
          field.mul(gamma, fs.chi[static_cast<std::size_t>(x)]))
        return std::nullopt;

    BwResult res;
    res.quotient = std::move(q);
    res.fs = std::move(fs);
    return res;
  }
  return std::nullopt;
}

/// Candidates are scanned by descending order, ties broken by lexicographically
/// least bit-vector; the first qualifying H wins.
inline BwResult find_bw_subgroup(const FiniteGroup& g, const Automorphism& sigma) {
  sigma.require_group(g);
  if (g.order() < 2) throw invalid_input("find_bw_subgroup requires |G| >= 2");
  if (!g.is_solvable()) throw invalid_input("find_bw_subgroup requires a solvable group");
  auto candidates = bwdetail::invariant_normal_subgroups(g, sigma);
  std::sort(candidates.begin(), candidates.end(), [](const GroupSubset& a, const GroupSubset& b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a.bits_less(b);
  });
  for (const auto& h : candidates) {
    if (h.count() == g.order()) continue;  // proper only
    if (auto res = try_bw_subgroup(g, sigma, h)) return *std::move(res);
  }
  throw error("find_bw_subgroup: no qualifying subgroup; input not solvable or a bug");
}

}  // namespace dotplus
