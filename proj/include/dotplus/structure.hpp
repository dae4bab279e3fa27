#pragma once

// Structural conclusions attached to equality cases: commutative subsets,
// sigma-commutative subsets, arithmetic progressions, coset decompositions.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dotplus/automorphism.hpp"
#include "dotplus/group.hpp"
#include "dotplus/sumset.hpp"

namespace dotplus {

/// A = union of a_j + S_j over distinct cosets of the normal subgroup,
/// ordered by |S_j| descending then by representative index.
struct CosetDecomposition {
  struct Part {
    int representative;  // the section value a_j
    GroupSubset part;    // S_j, a subset of the normal subgroup
  };
  std::vector<Part> parts;
};

inline CosetDecomposition coset_decompose(const FiniteGroup& g, const GroupSubset& a,
                                          const QuotientStructure& q) {
  if (a.group_hash() != g.table_hash())
    throw group_mismatch("coset_decompose: subset from a different group");
  std::vector<GroupSubset> per_coset(static_cast<std::size_t>(q.quotient.order()), GroupSubset(g));
  std::vector<bool> used(static_cast<std::size_t>(q.quotient.order()), false);
  a.for_each([&](int x) {
    int c = q.project(x);
    // S_j lives inside H: x = a_j + s  =>  s = -a_j + x
    int s = g.op(g.inv(q.section[static_cast<std::size_t>(c)]), x);
    per_coset[static_cast<std::size_t>(c)].set(s);
    used[static_cast<std::size_t>(c)] = true;
  });
  CosetDecomposition d;
  for (int c = 0; c < q.quotient.order(); ++c)
    if (used[static_cast<std::size_t>(c)])
      d.parts.push_back({q.section[static_cast<std::size_t>(c)], per_coset[static_cast<std::size_t>(c)]});
  std::stable_sort(d.parts.begin(), d.parts.end(),
                   [](const CosetDecomposition::Part& x, const CosetDecomposition::Part& y) {
                     int cx = x.part.count(), cy = y.part.count();
                     if (cx != cy) return cx > cy;
                     return x.representative < y.representative;
                   });
  return d;
}

inline bool is_commutative_subset(const FiniteGroup& g, const GroupSubset& a) {
  if (a.group_hash() != g.table_hash())
    throw group_mismatch("is_commutative_subset: subset from a different group");
  auto xs = a.elements();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (g.op(xs[i], xs[j]) != g.op(xs[j], xs[i])) return false;
  return true;
}

/// sigma(a1) + a2 == sigma(a2) + a1 for all pairs in A.
inline bool is_sigma_commutative(const FiniteGroup& g, const GroupSubset& a,
                                 const Automorphism& sigma) {
  if (a.group_hash() != g.table_hash())
    throw group_mismatch("is_sigma_commutative: subset from a different group");
  sigma.require_group(g);
  auto xs = a.elements();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (g.op(sigma.image(xs[i]), xs[j]) != g.op(sigma.image(xs[j]), xs[i])) return false;
  return true;
}

struct ApWitness {
  int start;
  int step;
};

/// Smallest (a, d) in index order with a+d = d+a whose progression of length
/// |A| reproduces A, or absent.
inline std::optional<ApWitness> find_ap_decomposition(const FiniteGroup& g, const GroupSubset& a) {
  if (a.group_hash() != g.table_hash())
    throw group_mismatch("find_ap_decomposition: subset from a different group");
  const int len = a.count();
  if (len == 0) return std::nullopt;
  auto xs = a.elements();
  for (int start : xs)
    for (int d = 0; d < g.order(); ++d) {
      if (g.op(start, d) != g.op(d, start)) continue;
      GroupSubset prog(g);
      int x = start;
      prog.set(x);
      for (int i = 1; i < len; ++i) {
        x = g.op(x, d);
        prog.set(x);
      }
      if (prog == a) return ApWitness{start, d};
    }
  return std::nullopt;
}

enum class Verdict { CONSISTENT, COUNTEREXAMPLE, HYPOTHESES_NOT_MET };

struct StructureReport {
  int size = 0;
  bool size_hypothesis = false;  // |A| < (p(G)+3)/2
  bool equality = false;         // |A (+) A| == 2|A|-3
  bool commutative = false;
  std::optional<ApWitness> ap;
  Verdict verdict = Verdict::HYPOTHESES_NOT_MET;
  std::string violated;

  std::string summary() const {
    std::string s = "|A|=" + std::to_string(size);
    s += size_hypothesis ? " hyp" : " nohyp";
    s += equality ? " eq" : " noeq";
    if (equality && size_hypothesis) {
      s += commutative ? " commutative" : " NONCOMMUTATIVE";
      if (ap)
        s += " ap(" + std::to_string(ap->start) + "," + std::to_string(ap->step) + ")";
      else
        s += " no-ap";
    }
    return s;
  }
};

/// Conditional check of the diagonal equality case: conclusions are only
/// asserted when the hypotheses hold. AP status is reported for all sizes but
/// only counts as a counterexample for |A| >= 5.
inline StructureReport classify_equality_case(const FiniteGroup& g, const GroupSubset& a) {
  StructureReport r;
  r.size = a.count();
  const int p = g.least_prime_factor();
  r.size_hypothesis = 2 * r.size < p + 3;
  r.equality =
      restricted_sumset(g, a, a).count() == 2 * r.size - 3;
  if (!r.size_hypothesis || !r.equality) {
    r.verdict = Verdict::HYPOTHESES_NOT_MET;
    return r;
  }
  r.commutative = is_commutative_subset(g, a);
  r.ap = find_ap_decomposition(g, a);
  if (!r.commutative) {
    r.verdict = Verdict::COUNTEREXAMPLE;
    r.violated = "commutativity";
  } else if (r.size >= 5 && !r.ap) {
    r.verdict = Verdict::COUNTEREXAMPLE;
    r.violated = "arithmetic progression";
  } else {
    r.verdict = Verdict::CONSISTENT;
  }
  return r;
}

}  // namespace dotplus
