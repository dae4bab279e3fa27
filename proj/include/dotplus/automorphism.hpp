#pragma once

// Automorphisms as index permutations certified to be homomorphisms, full
// enumeration by generator-image backtracking, inner automorphisms, and
// restriction to quotients.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dotplus/group.hpp"

namespace dotplus {

inline constexpr int kDefaultAutomorphismCap = 128;

class Automorphism {
 public:
  /// Validates the permutation: bijection fixing the identity that satisfies
  /// the homomorphism law on all pairs.
  Automorphism(const FiniteGroup& g, std::vector<int> perm)
      : group_hash_(g.table_hash()), perm_(std::move(perm)) {
    const int n = g.order();
    if (static_cast<int>(perm_.size()) != n)
      throw invalid_input("automorphism permutation has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm_) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw invalid_input("automorphism permutation is not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
    if (perm_[0] != 0) throw invalid_input("automorphism does not fix the identity");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (perm_[static_cast<std::size_t>(g.op(x, y))] !=
            g.op(perm_[static_cast<std::size_t>(x)], perm_[static_cast<std::size_t>(y)]))
          throw invalid_input("homomorphism law fails at pair (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
    // order of the permutation
    std::vector<int> cur = perm_;
    order_ = 1;
    auto is_id = [n](const std::vector<int>& p) {
      for (int i = 0; i < n; ++i)
        if (p[static_cast<std::size_t>(i)] != i) return false;
      return true;
    };
    while (!is_id(cur)) {
      std::vector<int> next(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        next[static_cast<std::size_t>(i)] = perm_[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)])];
      cur = std::move(next);
      ++order_;
    }
  }

  static Automorphism identity(const FiniteGroup& g) {
    std::vector<int> p(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) p[static_cast<std::size_t>(i)] = i;
    return Automorphism(g, std::move(p));
  }

  int image(int x) const { return perm_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& perm() const { return perm_; }
  int order() const { return order_; }
  bool even_order() const { return order_ % 2 == 0; }
  std::uint64_t group_hash() const { return group_hash_; }
  bool is_identity() const { return order_ == 1; }

  void require_group(const FiniteGroup& g) const {
    if (g.table_hash() != group_hash_)
      throw group_mismatch("automorphism belongs to a different group");
  }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.group_hash_ == b.group_hash_ && a.perm_ == b.perm_;
  }
  friend bool operator<(const Automorphism& a, const Automorphism& b) { return a.perm_ < b.perm_; }

 private:
  std::uint64_t group_hash_;
  std::vector<int> perm_;
  int order_ = 1;
};

/// tau_a(x) = -a + x + a; the identity automorphism iff a is central.
inline Automorphism inner_automorphism(const FiniteGroup& g, int a) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    p[static_cast<std::size_t>(x)] = g.op(g.op(g.inv(a), x), a);
  return Automorphism(g, std::move(p));
}

inline Automorphism compose(const FiniteGroup& g, const Automorphism& f, const Automorphism& h) {
  // (f o h)(x) = f(h(x))
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) p[static_cast<std::size_t>(x)] = f.image(h.image(x));
  return Automorphism(g, std::move(p));
}

inline Automorphism inverse(const FiniteGroup& g, const Automorphism& f) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) p[static_cast<std::size_t>(f.image(x))] = x;
  return Automorphism(g, std::move(p));
}

inline GroupSubset apply(const Automorphism& sigma, const GroupSubset& a) {
  if (sigma.group_hash() != a.group_hash())
    throw group_mismatch("apply: automorphism and subset from different groups");
  GroupSubset out = a;
  for (auto& w : out.words()) w = 0;
  a.for_each([&](int x) { out.set(sigma.image(x)); });
  return out;
}

struct OrderParity {
  int order;
  bool even;
};

inline OrderParity automorphism_order_parity(const Automorphism& sigma) {
  return {sigma.order(), sigma.order() % 2 == 0};
}

namespace detail {

/// Greedy-smallest generating set: all singletons, then pairs, then triples.
inline std::vector<int> find_generating_set(const FiniteGroup& g, int max_size = 3) {
  const int n = g.order();
  if (n == 1) return {};
  for (int x = 1; x < n; ++x) {
    GroupSubset s(g);
    s.set(x);
    if (g.subgroup_generated(s).count() == n) return {x};
  }
  if (max_size < 2) throw cap_exceeded("no generating set of size 1");
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      GroupSubset s(g);
      s.set(x);
      s.set(y);
      if (g.subgroup_generated(s).count() == n) return {x, y};
    }
  if (max_size < 3) throw cap_exceeded("no generating set of size 2");
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        GroupSubset s(g);
        s.set(x);
        s.set(y);
        s.set(z);
        if (g.subgroup_generated(s).count() == n) return {x, y, z};
      }
  throw cap_exceeded("no generating set of size <= 3");
}

/// Closure trace: each element expressed as a product of two earlier ones,
/// so a candidate image assignment of the generators extends in one pass.
struct ClosureTrace {
  std::vector<int> gens;
  // step: element = op(lhs, rhs) where lhs/rhs are already defined
  struct Step {
    int elem, lhs, rhs;
  };
  std::vector<Step> steps;
};

inline ClosureTrace build_closure_trace(const FiniteGroup& g, const std::vector<int>& gens) {
  const int n = g.order();
  ClosureTrace tr;
  tr.gens = gens;
  std::vector<bool> known(static_cast<std::size_t>(n), false);
  std::vector<int> order_added;
  known[0] = true;
  order_added.push_back(0);
  for (int x : gens)
    if (!known[static_cast<std::size_t>(x)]) {
      known[static_cast<std::size_t>(x)] = true;
      order_added.push_back(x);
    }
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t sz = order_added.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        int v = g.op(order_added[i], order_added[j]);
        if (!known[static_cast<std::size_t>(v)]) {
          known[static_cast<std::size_t>(v)] = true;
          tr.steps.push_back({v, order_added[i], order_added[j]});
          order_added.push_back(v);
          grew = true;
        }
      }
  }
  return tr;
}

}  // namespace detail

/// Complete automorphism group via backtracking over generator images, with
/// candidate images pruned by element order. Result is sorted and verified
/// closed under composition and inversion.
inline std::vector<Automorphism> enumerate_automorphisms(const FiniteGroup& g,
                                                         int cap = kDefaultAutomorphismCap) {
  const int n = g.order();
  if (n == 1) return {Automorphism::identity(g)};

  std::vector<int> gens = detail::find_generating_set(g);
  detail::ClosureTrace trace = detail::build_closure_trace(g, gens);

  std::vector<int> elem_order(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) elem_order[static_cast<std::size_t>(x)] = g.element_order(x);

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int y = 0; y < n; ++y)
      if (elem_order[static_cast<std::size_t>(y)] ==
          elem_order[static_cast<std::size_t>(gens[k])])
        candidates[k].push_back(y);

  std::vector<Automorphism> result;
  std::vector<int> images(gens.size());
  std::vector<int> perm(static_cast<std::size_t>(n));

  auto try_extend = [&]() {
    std::fill(perm.begin(), perm.end(), -1);
    perm[0] = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int& slot = perm[static_cast<std::size_t>(gens[k])];
      if (slot >= 0 && slot != images[k]) return;  // repeated generator image clash
      slot = images[k];
    }
    for (const auto& st : trace.steps)
      perm[static_cast<std::size_t>(st.elem)] =
          g.op(perm[static_cast<std::size_t>(st.lhs)], perm[static_cast<std::size_t>(st.rhs)]);
    // bijectivity check before the expensive full validation
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
      if (v < 0 || seen[static_cast<std::size_t>(v)]) return;
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (perm[static_cast<std::size_t>(g.op(x, y))] !=
            g.op(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]))
          return;
    result.emplace_back(g, perm);
    if (static_cast<int>(result.size()) > cap)
      throw cap_exceeded("automorphism group larger than cap " + std::to_string(cap));
  };

  // backtrack over image tuples
  std::vector<std::size_t> idx(gens.size(), 0);
  std::size_t depth = 0;
  for (;;) {
    if (depth == gens.size()) {
      try_extend();
      if (depth == 0) break;
      --depth;
      ++idx[depth];
      continue;
    }
    if (idx[depth] >= candidates[depth].size()) {
      if (depth == 0) break;
      idx[depth] = 0;
      --depth;
      ++idx[depth];
      continue;
    }
    images[depth] = candidates[depth][idx[depth]];
    ++depth;
    if (depth < gens.size()) idx[depth] = 0;
  }

  std::sort(result.begin(), result.end());

  // closure verification
  std::set<std::vector<int>> perms;
  for (const auto& a : result) perms.insert(a.perm());
  for (const auto& a : result) {
    if (!perms.count(inverse(g, a).perm()))
      throw error("automorphism enumeration not closed under inversion");
    for (const auto& b : result)
      if (!perms.count(compose(g, a, b).perm()))
        throw error("automorphism enumeration not closed under composition");
  }
  return result;
}

/// sigma restricted to G/H; requires sigma(H) = H.
inline Automorphism restrict_to_quotient(const FiniteGroup& g, const Automorphism& sigma,
                                         const QuotientStructure& q) {
  sigma.require_group(g);
  GroupSubset image_h = apply(sigma, q.normal_subgroup);
  if (!(image_h == q.normal_subgroup))
    throw invalid_input("automorphism does not stabilize the normal subgroup");
  const int m = q.quotient.order();
  std::vector<int> p(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c)
    p[static_cast<std::size_t>(c)] =
        q.projection[static_cast<std::size_t>(sigma.image(q.section[static_cast<std::size_t>(c)]))];
  return Automorphism(q.quotient, std::move(p));
}

}  // namespace dotplus
