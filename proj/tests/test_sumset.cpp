#include <doctest.h>

#include <set>
#include <vector>

#include "dotplus/automorphism.hpp"
#include "dotplus/catalog.hpp"
#include "dotplus/sumset.hpp"

using namespace dotplus;

namespace {

// independent double-loop oracles over element vectors
std::set<int> oracle_sumset(const FiniteGroup& g, const std::vector<int>& a,
                            const std::vector<int>& b) {
  std::set<int> out;
  for (int x : a)
    for (int y : b) out.insert(g.op(x, y));
  return out;
}

std::set<int> oracle_restricted(const FiniteGroup& g, const std::vector<int>& a,
                                const std::vector<int>& b) {
  std::set<int> out;
  for (int x : a)
    for (int y : b)
      if (x != y) out.insert(g.op(x, y));
  return out;
}

std::set<int> oracle_sigma_restricted(const FiniteGroup& g, const std::vector<int>& a,
                                      const std::vector<int>& b, const Automorphism& s) {
  std::set<int> out;
  for (int x : a)
    for (int y : b)
      if (x != s.image(y)) out.insert(g.op(x, y));
  return out;
}

std::set<int> to_set(const GroupSubset& s) {
  auto v = s.elements();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("frozen small cases in Z5") {
  FiniteGroup z5 = build_cyclic(5);
  CHECK(to_set(sumset(z5, z5.subset_of({0, 1}), z5.subset_of({0, 2}))) ==
        std::set<int>{0, 1, 2, 3});
  CHECK(to_set(restricted_sumset(z5, z5.subset_of({0, 1}), z5.subset_of({0, 2}))) ==
        std::set<int>{1, 2, 3});
  CHECK(to_set(restricted_sumset(z5, z5.subset_of({0, 1, 2}), z5.subset_of({0, 1, 2}))) ==
        std::set<int>{1, 2, 3});
}

TEST_CASE("kernels agree with the double-loop oracle on every small pair") {
  for (const char* name : {"Z6", "Q8", "Heis3"}) {
    FiniteGroup g = catalog_group(name);
    const int n = g.order();
    // a deterministic spread of subsets: singletons, intervals, stride picks
    std::vector<std::vector<int>> pool;
    for (int i = 0; i < n; ++i) pool.push_back({i});
    for (int i = 0; i + 2 < n; i += 2) pool.push_back({i, i + 1, i + 2});
    pool.push_back({0, n / 2, n - 1});
    for (int s = 2; s <= 3; ++s) {
      std::vector<int> v;
      for (int i = 0; i < n; i += s) v.push_back(i);
      pool.push_back(v);
    }
    for (const auto& a : pool)
      for (const auto& b : pool) {
        GroupSubset sa = g.subset_of(a), sb = g.subset_of(b);
        CHECK(to_set(sumset(g, sa, sb)) == oracle_sumset(g, a, b));
        CHECK(to_set(restricted_sumset(g, sa, sb)) == oracle_restricted(g, a, b));
      }
  }
}

TEST_CASE("sigma-restricted kernel agrees with oracle") {
  FiniteGroup z9 = build_cyclic(9);
  std::vector<int> p(9);
  for (int i = 0; i < 9; ++i) p[static_cast<std::size_t>(i)] = (4 * i) % 9;
  Automorphism s(z9, p);
  for (std::uint64_t ma = 1; ma < 512; ma += 7)
    for (std::uint64_t mb = 1; mb < 512; mb += 11) {
      std::vector<int> a, b;
      for (int i = 0; i < 9; ++i) {
        if (ma >> i & 1) a.push_back(i);
        if (mb >> i & 1) b.push_back(i);
      }
      GroupSubset sa = z9.subset_of(a), sb = z9.subset_of(b);
      CHECK(to_set(sigma_restricted_sumset(z9, sa, sb, s)) ==
            oracle_sigma_restricted(z9, a, b, s));
      // theorem form: sigma(A) +^sigma A
      CHECK(to_set(theorem_form_sumset(z9, sa, s)) ==
            oracle_sigma_restricted(z9, apply(s, sa).elements(), a, s));
    }
}

TEST_CASE("identity-sigma matches plain restricted sumset") {
  FiniteGroup d4 = catalog_group("D4");
  Automorphism id = Automorphism::identity(d4);
  for (std::uint64_t ma = 1; ma < 256; ma += 5)
    for (std::uint64_t mb = 1; mb < 256; mb += 9) {
      GroupSubset a(d4), b(d4);
      a.words()[0] = ma;
      b.words()[0] = mb;
      CHECK(sigma_restricted_sumset(d4, a, b, id) == restricted_sumset(d4, a, b));
    }
}

TEST_CASE("restricted sumset loses at most one element per side") {
  FiniteGroup z7 = build_cyclic(7);
  for (std::uint64_t ma = 1; ma < 128; ++ma)
    for (std::uint64_t mb = 1; mb < 128; ++mb) {
      GroupSubset a(z7), b(z7);
      a.words()[0] = ma;
      b.words()[0] = mb;
      int full = sumset(z7, a, b).count();
      int restricted = restricted_sumset(z7, a, b).count();
      CHECK(restricted <= full);
      CHECK(restricted >= full - static_cast<int>(std::min(a.count(), b.count())));
    }
}

TEST_CASE("inversion identity: |A (+) B| == |(-B) (+) (-A)|") {
  FiniteGroup h = catalog_group("Heis3");
  // stride through a deterministic family of pairs
  for (int i = 0; i < 27; i += 3)
    for (int j = 1; j < 27; j += 4) {
      GroupSubset a = h.subset_of({i, (i + 5) % 27, (i + 11) % 27});
      GroupSubset b = h.subset_of({j, (j + 7) % 27});
      CHECK(restricted_sumset(h, a, b).count() ==
            restricted_sumset(h, negate(h, b), negate(h, a)).count());
    }
}

TEST_CASE("bound formulas") {
  FiniteGroup z7 = build_cyclic(7);
  CHECK(evaluate_bound(BoundKind::cauchy_davenport, z7, 3, 4).value == 6);
  CHECK(evaluate_bound(BoundKind::cauchy_davenport, z7, 5, 5).value == 7);  // clipped at p
  CHECK(evaluate_bound(BoundKind::anr_restricted, z7, 3, 4).value == 5);
  CHECK(evaluate_bound(BoundKind::eh_diagonal, z7, 4, 4).value == 5);
  CHECK(evaluate_bound(BoundKind::eh_diagonal, z7, 6, 6).value == 7);

  FiniteGroup z5 = build_cyclic(5);
  Automorphism even_sigma(z5, {0, 2, 4, 1, 3});  // order 4
  Automorphism odd_sigma = Automorphism::identity(z5);
  CHECK(evaluate_bound(BoundKind::balister_wheeler, z5, 3, 3, &even_sigma).value == 3);
  CHECK(evaluate_bound(BoundKind::balister_wheeler, z5, 4, 4, &odd_sigma).value == 5);
  CHECK_THROWS_AS(evaluate_bound(BoundKind::balister_wheeler, z5, 3, 3), invalid_input);

  CHECK(bound_kind_from_name("cd") == BoundKind::cauchy_davenport);
  CHECK(bound_kind_from_name("anr") == BoundKind::anr_restricted);
  CHECK(bound_kind_from_name("eh") == BoundKind::eh_diagonal);
  CHECK(bound_kind_from_name("bw") == BoundKind::balister_wheeler);
  CHECK_FALSE(bound_kind_from_name("nope").has_value());
}

TEST_CASE("group mismatch is rejected") {
  FiniteGroup z5 = build_cyclic(5);
  FiniteGroup z7 = build_cyclic(7);
  GroupSubset a = z5.subset_of({0, 1});
  GroupSubset b = z7.subset_of({0, 1});
  CHECK_THROWS_AS(sumset(z5, a, b), group_mismatch);
}
