#pragma once

// Enumerate or sample subset configurations per the search plan and check
// every in-scope bound and structure theorem. Work is split into
// deterministic chunks merged in index order, so reports are identical for
// any --jobs width.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dotplus/automorphism.hpp"
#include "dotplus/enumerate.hpp"
#include "dotplus/group.hpp"
#include "dotplus/matching.hpp"
#include "dotplus/structure.hpp"
#include "dotplus/sumset.hpp"
#include "dotplus/verify_types.hpp"

namespace dotplus {

inline constexpr int kExhaustiveOrderLimit = 20;
inline constexpr long long kSampleChunk = 65536;

namespace hdetail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

template <typename Fn>
VerificationReport run_chunked(int num_chunks, int jobs, Fn&& make_chunk) {
  std::vector<VerificationReport> parts(static_cast<std::size_t>(num_chunks));
  if (jobs <= 1 || num_chunks <= 1) {
    for (int c = 0; c < num_chunks; ++c) parts[static_cast<std::size_t>(c)] = make_chunk(c);
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        int c = next.fetch_add(1);
        if (c >= num_chunks) return;
        parts[static_cast<std::size_t>(c)] = make_chunk(c);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(jobs, num_chunks); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  VerificationReport merged;
  for (auto& p : parts) merged.absorb(p);
  return merged;
}

inline int chunk_count(std::size_t outer) {
  // fixed function of the workload only, so chunk boundaries (and therefore
  // merged reports) do not depend on the thread count
  return static_cast<int>(std::min<std::size_t>(outer, 64));
}

}  // namespace hdetail

/// All planned subsets in deterministic order: exhaustive mode walks nonempty
/// bit-vectors in numeric order; capped mode walks sizes ascending, each size
/// in lexicographic combination order.
inline std::vector<GroupSubset> planned_subsets(const FiniteGroup& g, const SearchPlan& plan,
                                                int cap_override = -1) {
  const int n = g.order();
  std::vector<GroupSubset> out;
  int cap = cap_override >= 0 ? cap_override : plan.max_a;
  if (plan.mode == SearchPlan::Mode::exhaustive) {
    if (n > kExhaustiveOrderLimit)
      throw invalid_input("exhaustive mode limited to order <= " +
                          std::to_string(kExhaustiveOrderLimit));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      GroupSubset s(g);
      s.words()[0] = mask;
      out.push_back(s);
    }
  } else if (plan.mode == SearchPlan::Mode::size_capped) {
    if (cap < 0) throw invalid_input("size-capped mode requires a size cap");
    for (int k = 1; k <= std::min(cap, n); ++k)
      for_each_combination(n, k, [&](const std::vector<int>& idx) {
        out.push_back(g.subset_of(idx));
      });
  } else {
    throw invalid_input("sampled plans do not materialize a subset list");
  }
  return out;
}

inline bool inversion_canonical(const FiniteGroup& g, const GroupSubset& a, const GroupSubset& b) {
  GroupSubset na = negate(g, a), nb = negate(g, b);
  if (a.bits_less(nb)) return true;
  if (nb.bits_less(a)) return false;
  if (b.bits_less(na)) return true;
  if (na.bits_less(b)) return false;
  return true;  // fixed point of the symmetry
}

inline bool aut_canonical_pair(const std::vector<Automorphism>& auts, const GroupSubset& a,
                               const GroupSubset& b) {
  for (const auto& phi : auts) {
    GroupSubset fa = apply(phi, a), fb = apply(phi, b);
    if (fa.bits_less(a)) return false;
    if (!a.bits_less(fa) && fb.bits_less(b)) return false;
  }
  return true;
}

inline bool aut_canonical_set(const std::vector<Automorphism>& auts, const GroupSubset& a) {
  for (const auto& phi : auts)
    if (apply(phi, a).bits_less(a)) return false;
  return true;
}

namespace hdetail {

struct PairContext {
  const FiniteGroup* g;
  const SearchPlan* plan;
  std::vector<GroupSubset> subsets;        // empty in sampled mode
  std::vector<Automorphism> prune_auts;    // orbit pruning, when enabled
};

inline PairContext make_pair_context(const FiniteGroup& g, const SearchPlan& plan) {
  PairContext ctx{&g, &plan, {}, {}};
  if (plan.mode != SearchPlan::Mode::sampled) ctx.subsets = planned_subsets(g, plan);
  if (plan.prune_automorphism) ctx.prune_auts = enumerate_automorphisms(g);
  return ctx;
}

/// Deterministic chunked pair stream; fn(report, A, B) checks one instance.
template <typename CheckFn>
VerificationReport stream_pairs(const FiniteGroup& g, const SearchPlan& plan, CheckFn&& check) {
  PairContext ctx = make_pair_context(g, plan);
  if (plan.mode == SearchPlan::Mode::sampled) {
    if (plan.sample_count < 1) throw invalid_input("sampled mode requires sample_count >= 1");
    const int n = g.order();
    int cap_a = plan.max_a > 0 ? std::min(plan.max_a, n) : n;
    int cap_b = plan.max_b > 0 ? std::min(plan.max_b, n) : n;
    int chunks = static_cast<int>((plan.sample_count + kSampleChunk - 1) / kSampleChunk);
    return run_chunked(chunks, plan.jobs, [&](int c) {
      VerificationReport rep;
      std::mt19937_64 rng(mix_seed(plan.seed, static_cast<std::uint64_t>(c)));
      long long lo = static_cast<long long>(c) * kSampleChunk;
      long long hi = std::min(plan.sample_count, lo + kSampleChunk);
      for (long long i = lo; i < hi; ++i) {
        GroupSubset a = g.subset_of(sample_subset(rng, n, cap_a));
        GroupSubset b = g.subset_of(sample_subset(rng, n, cap_b));
        ++rep.instances_checked;
        check(rep, a, b);
      }
      return rep;
    });
  }
  // enumerate B-side with its own cap when it differs
  std::vector<GroupSubset> bs;
  const std::vector<GroupSubset>* bside = &ctx.subsets;
  if (plan.mode == SearchPlan::Mode::size_capped && plan.max_b != plan.max_a) {
    bs = planned_subsets(g, plan, plan.max_b);
    bside = &bs;
  }
  int chunks = chunk_count(ctx.subsets.size());
  std::size_t per = chunks ? (ctx.subsets.size() + chunks - 1) / chunks : 0;
  return run_chunked(std::max(chunks, 1), plan.jobs, [&](int c) {
    VerificationReport rep;
    std::size_t lo = static_cast<std::size_t>(c) * per;
    std::size_t hi = std::min(ctx.subsets.size(), lo + per);
    for (std::size_t i = lo; i < hi; ++i) {
      const GroupSubset& a = ctx.subsets[i];
      for (const GroupSubset& b : *bside) {
        if (plan.prune_inversion && !inversion_canonical(g, a, b)) continue;
        if (plan.prune_automorphism && !aut_canonical_pair(ctx.prune_auts, a, b)) continue;
        ++rep.instances_checked;
        check(rep, a, b);
      }
    }
    return rep;
  });
}

/// Deterministic chunked single-set stream.
template <typename CheckFn>
VerificationReport stream_sets(const FiniteGroup& g, const SearchPlan& plan, CheckFn&& check) {
  if (plan.mode == SearchPlan::Mode::sampled) {
    if (plan.sample_count < 1) throw invalid_input("sampled mode requires sample_count >= 1");
    const int n = g.order();
    int cap = plan.max_a > 0 ? std::min(plan.max_a, n) : n;
    int chunks = static_cast<int>((plan.sample_count + kSampleChunk - 1) / kSampleChunk);
    return run_chunked(chunks, plan.jobs, [&](int c) {
      VerificationReport rep;
      std::mt19937_64 rng(mix_seed(plan.seed, static_cast<std::uint64_t>(c)));
      long long lo = static_cast<long long>(c) * kSampleChunk;
      long long hi = std::min(plan.sample_count, lo + kSampleChunk);
      for (long long i = lo; i < hi; ++i) {
        GroupSubset a = g.subset_of(sample_subset(rng, n, cap));
        ++rep.instances_checked;
        check(rep, a);
      }
      return rep;
    });
  }
  std::vector<Automorphism> prune_auts;
  if (plan.prune_automorphism) prune_auts = enumerate_automorphisms(g);
  std::vector<GroupSubset> subsets = planned_subsets(g, plan);
  int chunks = chunk_count(subsets.size());
  std::size_t per = chunks ? (subsets.size() + chunks - 1) / chunks : 0;
  return run_chunked(std::max(chunks, 1), plan.jobs, [&](int c) {
    VerificationReport rep;
    std::size_t lo = static_cast<std::size_t>(c) * per;
    std::size_t hi = std::min(subsets.size(), lo + per);
    for (std::size_t i = lo; i < hi; ++i) {
      if (plan.prune_automorphism && !aut_canonical_set(prune_auts, subsets[i])) continue;
      ++rep.instances_checked;
      check(rep, subsets[i]);
    }
    return rep;
  });
}

inline Violation make_violation(const GroupSubset& a, const GroupSubset* b,
                                const Automorphism* sigma, long long lhs, long long rhs,
                                std::string detail = {}) {
  Violation v;
  v.a = a.elements();
  if (b) v.b = b->elements();
  if (sigma) v.sigma_perm = sigma->perm();
  v.lhs = lhs;
  v.rhs = rhs;
  v.detail = std::move(detail);
  return v;
}

}  // namespace hdetail

// ---------------------------------------------------------------------------
// Theorem checkers

/// |A+B| >= min{p(G), |A|+|B|-1} over the planned pairs.
inline VerificationReport verify_cauchy_davenport(const FiniteGroup& g, const SearchPlan& plan) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep = hdetail::stream_pairs(
      g, plan, [&](VerificationReport& r, const GroupSubset& a, const GroupSubset& b) {
        long long lhs = sumset(g, a, b).count();
        long long rhs = evaluate_bound(BoundKind::cauchy_davenport, g, a, b).value;
        if (lhs == rhs) ++r.equality_cases;
        if (lhs < rhs) r.violations.push_back(hdetail::make_violation(a, &b, nullptr, lhs, rhs));
      });
  rep.theorem = "cd";
  rep.plan = plan;
  rep.finish();
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// A != B pairs against min{p(G), |A|+|B|-2}; A == B pairs are routed to the
/// diagonal bound min{p(G), 2|A|-3} and counted separately.
inline VerificationReport verify_theorem1(const FiniteGroup& g, const SearchPlan& plan) {
  if (!g.is_nilpotent())
    throw invalid_input("verify_theorem1 requires a nilpotent group");
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep = hdetail::stream_pairs(
      g, plan, [&](VerificationReport& r, const GroupSubset& a, const GroupSubset& b) {
        long long lhs = restricted_sumset(g, a, b).count();
        long long rhs;
        if (a == b) {
          ++r.diagonal_checked;
          rhs = evaluate_bound(BoundKind::eh_diagonal, g, a, b).value;
        } else {
          rhs = evaluate_bound(BoundKind::anr_restricted, g, a, b).value;
        }
        if (lhs == rhs) ++r.equality_cases;
        if (lhs < rhs) r.violations.push_back(hdetail::make_violation(a, &b, nullptr, lhs, rhs));
      });
  rep.theorem = "thm1";
  rep.plan = plan;
  rep.finish();
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Every planned A meeting |A| < (p(G)+3)/2 with |A (+) A| = 2|A|-3 must be
/// commutative, and AP-decomposable when |A| >= 5.
inline VerificationReport verify_theorem2(const FiniteGroup& g, const SearchPlan& plan) {
  auto t0 = std::chrono::steady_clock::now();
  const int p = g.least_prime_factor();
  VerificationReport rep =
      hdetail::stream_sets(g, plan, [&](VerificationReport& r, const GroupSubset& a) {
        const int sz = a.count();
        if (2 * sz >= p + 3) return;
        long long lhs = restricted_sumset(g, a, a).count();
        if (lhs != 2 * sz - 3) return;
        ++r.equality_cases;
        StructureReport sr = classify_equality_case(g, a);
        if (sr.verdict == Verdict::COUNTEREXAMPLE)
          r.violations.push_back(
              hdetail::make_violation(a, nullptr, nullptr, lhs, 2 * sz - 3, sr.summary()));
      });
  rep.theorem = "thm2";
  rep.plan = plan;
  rep.finish();
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// For each odd-order sigma and planned A with 2|A|-3 < p(G) and
/// |sigma(A) +^sigma A| = 2|A|-3: A must be sigma-commutative.
inline VerificationReport verify_theorem3(const FiniteGroup& g, const SearchPlan& plan,
                                          int aut_cap = kDefaultAutomorphismCap,
                                          const std::vector<Automorphism>* precomputed = nullptr) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.theorem = "thm3";
  rep.plan = plan;
  std::vector<Automorphism> auts;
  try {
    auts = precomputed ? *precomputed : enumerate_automorphisms(g, aut_cap);
  } catch (const cap_exceeded& e) {
    rep.status = Status::PARTIAL;
    rep.notes.push_back(std::string("automorphism enumeration skipped: ") + e.what());
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  std::vector<Automorphism> odd;
  for (const auto& s : auts)
    if (s.order() % 2 == 1) odd.push_back(s);
  if (odd.empty()) throw error("verify_theorem3: no odd-order automorphisms (identity missing?)");
  const int p = g.least_prime_factor();
  SearchPlan inner = plan;
  if (plan.prune_automorphism) {
    // orbit pruning of (sigma, A) pairs would need to conjugate sigma too;
    // not implemented, fall back to the unpruned stream
    inner.prune_automorphism = false;
    rep.notes.push_back("automorphism-orbit pruning unavailable in sigma mode; ran unpruned");
  }
  if (inner.mode == SearchPlan::Mode::sampled) {
    // sample (sigma, A) jointly
    VerificationReport sub = hdetail::stream_sets(
        g, inner, [&](VerificationReport& r, const GroupSubset& a) {
          std::mt19937_64 pick(hdetail::mix_seed(plan.seed ^ 0x5153u, r.instances_checked));
          const Automorphism& s = odd[pick() % odd.size()];
          const int sz = a.count();
          if (2 * sz - 3 >= p) return;
          long long lhs = theorem_form_sumset(g, a, s).count();
          if (lhs != 2 * sz - 3) return;
          ++r.equality_cases;
          if (!is_sigma_commutative(g, a, s))
            r.violations.push_back(
                hdetail::make_violation(a, nullptr, &s, lhs, 2 * sz - 3, "not sigma-commutative"));
        });
    rep.absorb(sub);
  } else {
    for (const auto& s : odd) {
      VerificationReport sub = hdetail::stream_sets(
          g, inner, [&](VerificationReport& r, const GroupSubset& a) {
            const int sz = a.count();
            if (2 * sz - 3 >= p) return;
            long long lhs = theorem_form_sumset(g, a, s).count();
            if (lhs != 2 * sz - 3) return;
            ++r.equality_cases;
            if (!is_sigma_commutative(g, a, s))
              r.violations.push_back(hdetail::make_violation(a, nullptr, &s, lhs, 2 * sz - 3,
                                                             "not sigma-commutative"));
          });
      rep.absorb(sub);
    }
  }
  rep.notes.push_back("odd-order automorphisms: " + std::to_string(odd.size()) + " of " +
                      std::to_string(auts.size()));
  rep.finish();
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// |A +^sigma B| >= min{p(G)-delta, |A|+|B|-3} with delta by order parity.
inline VerificationReport verify_balister_wheeler(const FiniteGroup& g, const SearchPlan& plan,
                                                  int aut_cap = kDefaultAutomorphismCap,
                                                  const std::vector<Automorphism>* precomputed =
                                                      nullptr) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.theorem = "bw";
  rep.plan = plan;
  std::vector<Automorphism> auts;
  try {
    auts = precomputed ? *precomputed : enumerate_automorphisms(g, aut_cap);
  } catch (const cap_exceeded& e) {
    rep.status = Status::PARTIAL;
    rep.notes.push_back(std::string("automorphism enumeration skipped: ") + e.what());
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  auto check_one = [&](VerificationReport& r, const GroupSubset& a, const GroupSubset& b,
                       const Automorphism& s) {
    long long lhs = sigma_restricted_sumset(g, a, b, s).count();
    long long rhs = evaluate_bound(BoundKind::balister_wheeler, g, a, b, &s).value;
    if (lhs == rhs) ++r.equality_cases;
    if (lhs < rhs) r.violations.push_back(hdetail::make_violation(a, &b, &s, lhs, rhs));
  };
  SearchPlan inner = plan;
  if (plan.prune_automorphism) {
    inner.prune_automorphism = false;
    rep.notes.push_back("automorphism-orbit pruning unavailable in sigma mode; ran unpruned");
  }
  if (inner.mode == SearchPlan::Mode::sampled) {
    VerificationReport sub = hdetail::stream_pairs(
        g, inner, [&](VerificationReport& r, const GroupSubset& a, const GroupSubset& b) {
          std::mt19937_64 pick(hdetail::mix_seed(plan.seed ^ 0xb317u, r.instances_checked));
          check_one(r, a, b, auts[pick() % auts.size()]);
        });
    rep.absorb(sub);
  } else {
    for (const auto& s : auts) {
      VerificationReport sub = hdetail::stream_pairs(
          g, inner, [&](VerificationReport& r, const GroupSubset& a, const GroupSubset& b) {
            check_one(r, a, b, s);
          });
      rep.absorb(sub);
    }
  }
  rep.finish();
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Every planned ordered pair with n+m-1 <= p(G) must admit a verified system
/// of distinct representative sums.
inline VerificationReport verify_hall(const FiniteGroup& g, const SearchPlan& plan) {
  auto t0 = std::chrono::steady_clock::now();
  const int p = g.least_prime_factor();
  VerificationReport rep = hdetail::stream_pairs(
      g, plan, [&](VerificationReport& r, const GroupSubset& a, const GroupSubset& b) {
        const int n = a.count(), m = b.count();
        if (n + m - 1 > p) {
          --r.instances_checked;  // outside the lemma's hypothesis
          return;
        }
        try {
          MatchingResult res = hall_representatives(g, a.elements(), b.elements());
          if (!verify_sdr(g, res))
            r.violations.push_back(
                hdetail::make_violation(a, &b, nullptr, 0, 1, "SDR verification failed"));
        } catch (const error& e) {
          r.violations.push_back(hdetail::make_violation(a, &b, nullptr, 0, 1, e.what()));
        }
      });
  rep.theorem = "hall";
  rep.plan = plan;
  rep.finish();
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Equality-case forensics

struct EqualityInstance {
  std::vector<int> a;
  std::optional<std::vector<int>> b;
  long long lhs = 0;
  std::string structure;
};

struct ExtremalScan {
  std::string bound;
  unsigned long long instances_checked = 0;
  std::vector<EqualityInstance> instances;
};

/// All planned instances meeting the bound with equality, with a structure
/// payload for diagonal scans. Runs single-threaded: collection order is part
/// of the output contract.
inline ExtremalScan extremal_scan(const FiniteGroup& g, const SearchPlan& plan, BoundKind kind) {
  ExtremalScan out;
  out.bound = bound_kind_name(kind);
  SearchPlan serial = plan;
  serial.jobs = 1;
  std::vector<EqualityInstance> collected;
  if (kind == BoundKind::eh_diagonal) {
    VerificationReport rep =
        hdetail::stream_sets(g, serial, [&](VerificationReport&, const GroupSubset& a) {
          long long lhs = restricted_sumset(g, a, a).count();
          long long rhs = evaluate_bound(kind, g, a, a).value;
          if (lhs == rhs && rhs > 0) {
            EqualityInstance inst;
            inst.a = a.elements();
            inst.lhs = lhs;
            inst.structure = classify_equality_case(g, a).summary();
            collected.push_back(std::move(inst));
          }
        });
    out.instances_checked = rep.instances_checked;
  } else {
    VerificationReport rep = hdetail::stream_pairs(
        g, serial, [&](VerificationReport&, const GroupSubset& a, const GroupSubset& b) {
          long long lhs = kind == BoundKind::cauchy_davenport
                              ? sumset(g, a, b).count()
                              : restricted_sumset(g, a, b).count();
          long long rhs = evaluate_bound(kind, g, a, b).value;
          if (lhs == rhs && rhs > 0) {
            EqualityInstance inst;
            inst.a = a.elements();
            inst.b = b.elements();
            inst.lhs = lhs;
            collected.push_back(std::move(inst));
          }
        });
    out.instances_checked = rep.instances_checked;
  }
  out.instances = std::move(collected);
  return out;
}

// ---------------------------------------------------------------------------

/// Recompute lhs/rhs for a serialized violation; reports must replay exactly.
inline std::pair<long long, long long> replay_violation(const FiniteGroup& g,
                                                        const std::string& theorem,
                                                        const Violation& v) {
  GroupSubset a = g.subset_of(v.a);
  std::optional<GroupSubset> b;
  if (v.b) b = g.subset_of(*v.b);
  std::optional<Automorphism> sigma;
  if (v.sigma_perm) sigma.emplace(g, *v.sigma_perm);
  if (theorem == "cd")
    return {sumset(g, a, *b).count(),
            evaluate_bound(BoundKind::cauchy_davenport, g, a, *b).value};
  if (theorem == "thm1") {
    BoundKind k = a == *b ? BoundKind::eh_diagonal : BoundKind::anr_restricted;
    return {restricted_sumset(g, a, *b).count(), evaluate_bound(k, g, a, *b).value};
  }
  if (theorem == "thm2")
    return {restricted_sumset(g, a, a).count(), 2 * a.count() - 3};
  if (theorem == "thm3")
    return {theorem_form_sumset(g, a, *sigma).count(), 2 * a.count() - 3};
  if (theorem == "bw")
    return {sigma_restricted_sumset(g, a, *b, *sigma).count(),
            evaluate_bound(BoundKind::balister_wheeler, g, a, *b, &*sigma).value};
  throw invalid_input("replay_violation: unknown theorem " + theorem);
}

/// Default plans: exhaustive up to order 12, then size-capped (4,4) plus 10^6
/// seeded samples.
inline std::vector<SearchPlan> default_plans(const FiniteGroup& g, std::uint64_t seed = 1,
                                             int jobs = 1) {
  SearchPlan p;
  p.jobs = jobs;
  p.seed = seed;
  if (g.order() <= 12) {
    p.mode = SearchPlan::Mode::exhaustive;
    return {p};
  }
  SearchPlan capped = p;
  capped.mode = SearchPlan::Mode::size_capped;
  capped.max_a = capped.max_b = 4;
  SearchPlan sampled = p;
  sampled.mode = SearchPlan::Mode::sampled;
  sampled.sample_count = 1'000'000;
  return {capped, sampled};
}

}  // namespace dotplus
