#pragma once

// Sumset kernels: A+B, the restricted sumset A (+) B with a != b, and the
// automorphism-twisted variant with a != sigma(b), plus the bound formulas.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dotplus/automorphism.hpp"
#include "dotplus/group.hpp"

namespace dotplus {

namespace detail {
inline void require_same(const FiniteGroup& g, const GroupSubset& s, const char* what) {
  if (s.group_hash() != g.table_hash())
    throw group_mismatch(std::string(what) + ": operand from a different group");
}
}  // namespace detail

inline GroupSubset sumset(const FiniteGroup& g, const GroupSubset& a, const GroupSubset& b) {
  detail::require_same(g, a, "sumset");
  detail::require_same(g, b, "sumset");
  GroupSubset out(g);
  a.for_each([&](int x) { b.for_each([&](int y) { out.set(g.op(x, y)); }); });
  return out;
}

namespace detail {

// Restricted kernels enumerate witnesses directly: a sum enters the result
// iff it has at least one non-excluded witness pair. Computing the full
// sumset and subtracting excluded sums would be wrong, since a sum may have
// both excluded and non-excluded witnesses.
template <typename Excluded>
GroupSubset restricted_kernel(const FiniteGroup& g, const GroupSubset& a, const GroupSubset& b,
                              Excluded&& excluded) {
  GroupSubset out(g);
  a.for_each([&](int x) {
    b.for_each([&](int y) {
      if (!excluded(x, y)) out.set(g.op(x, y));
    });
  });
  return out;
}

}  // namespace detail

/// A (+) B = {a+b : a in A, b in B, a != b}.
inline GroupSubset restricted_sumset(const FiniteGroup& g, const GroupSubset& a,
                                     const GroupSubset& b) {
  detail::require_same(g, a, "restricted_sumset");
  detail::require_same(g, b, "restricted_sumset");
  return detail::restricted_kernel(g, a, b, [](int x, int y) { return x == y; });
}

/// A +^sigma B = {a+b : a in A, b in B, a != sigma(b)}.
inline GroupSubset sigma_restricted_sumset(const FiniteGroup& g, const GroupSubset& a,
                                           const GroupSubset& b, const Automorphism& sigma) {
  detail::require_same(g, a, "sigma_restricted_sumset");
  detail::require_same(g, b, "sigma_restricted_sumset");
  sigma.require_group(g);
  return detail::restricted_kernel(g, a, b,
                                   [&](int x, int y) { return x == sigma.image(y); });
}

/// sigma(A) +^sigma A, the left-hand side of the twisted structure theorem.
inline GroupSubset theorem_form_sumset(const FiniteGroup& g, const GroupSubset& a,
                                       const Automorphism& sigma) {
  return sigma_restricted_sumset(g, apply(sigma, a), a, sigma);
}

inline GroupSubset negate(const FiniteGroup& g, const GroupSubset& a) {
  detail::require_same(g, a, "negate");
  GroupSubset out(g);
  a.for_each([&](int x) { out.set(g.inv(x)); });
  return out;
}

// ---------------------------------------------------------------------------
// Bound formulas. Evaluated purely from sizes and p(G); may be negative for
// degenerate inputs and are reported as-is.

enum class BoundKind { cauchy_davenport, anr_restricted, eh_diagonal, balister_wheeler };

inline const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::cauchy_davenport: return "cauchy_davenport";
    case BoundKind::anr_restricted: return "anr_restricted";
    case BoundKind::eh_diagonal: return "eh_diagonal";
    case BoundKind::balister_wheeler: return "balister_wheeler";
  }
  return "?";
}

inline std::optional<BoundKind> bound_kind_from_name(const std::string& s) {
  if (s == "cauchy_davenport" || s == "cd") return BoundKind::cauchy_davenport;
  if (s == "anr_restricted" || s == "anr") return BoundKind::anr_restricted;
  if (s == "eh_diagonal" || s == "eh") return BoundKind::eh_diagonal;
  if (s == "balister_wheeler" || s == "bw") return BoundKind::balister_wheeler;
  return std::nullopt;
}

struct BoundSpec {
  BoundKind kind;
  int value;
};

inline BoundSpec evaluate_bound(BoundKind kind, const FiniteGroup& g, int size_a, int size_b,
                                const Automorphism* sigma = nullptr) {
  const int p = g.least_prime_factor();
  switch (kind) {
    case BoundKind::cauchy_davenport:
      return {kind, std::min(p, size_a + size_b - 1)};
    case BoundKind::anr_restricted:
      return {kind, std::min(p, size_a + size_b - 2)};
    case BoundKind::eh_diagonal:
      return {kind, std::min(p, 2 * size_a - 3)};
    case BoundKind::balister_wheeler: {
      if (!sigma) throw invalid_input("balister_wheeler bound requires an automorphism");
      const int delta = sigma->order() % 2 == 0 ? 1 : 0;
      return {kind, std::min(p - delta, size_a + size_b - 3)};
    }
  }
  throw invalid_input("unknown bound kind");
}

inline BoundSpec evaluate_bound(BoundKind kind, const FiniteGroup& g, const GroupSubset& a,
                                const GroupSubset& b, const Automorphism* sigma = nullptr) {
  return evaluate_bound(kind, g, a.count(), b.count(), sigma);
}

}  // namespace dotplus
