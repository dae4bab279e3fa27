#pragma once

// Small finite groups given by explicit Cayley tables, written additively.
// Elements are dense indices 0..n-1 with the identity normalized to index 0.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dotplus/error.hpp"

namespace dotplus {

inline constexpr int kDefaultOrderCap = 256;

class FiniteGroup;

/// Fixed-width bit-vector over the element indices of one group. Carries the
/// owning group's order and table hash, not a pointer, so it stays valid when
/// groups are moved around by value.
class GroupSubset {
 public:
  GroupSubset() = default;
  explicit GroupSubset(const FiniteGroup& g);

  std::uint64_t group_hash() const { return group_hash_; }
  int universe_size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }

  GroupSubset& operator|=(const GroupSubset& o) {
    for (int k = 0; k < 4; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  GroupSubset& operator&=(const GroupSubset& o) {
    for (int k = 0; k < 4; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  friend GroupSubset operator|(GroupSubset a, const GroupSubset& b) { return a |= b; }
  friend GroupSubset operator&(GroupSubset a, const GroupSubset& b) { return a &= b; }

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.w_ == b.w_ && a.group_hash_ == b.group_hash_;
  }

  bool contains(const GroupSubset& o) const {
    for (int k = 0; k < 4; ++k)
      if ((o.w_[k] & ~w_[k]) != 0) return false;
    return true;
  }

  /// Lexicographic order on the raw bit-vector, lowest index most significant.
  bool bits_less(const GroupSubset& o) const {
    for (int k = 3; k >= 0; --k)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int k = 0; k < 4; ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(k * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](int i) {
      if (!first) os << ',';
      os << i;
      first = false;
    });
    os << '}';
    return os.str();
  }

  std::string to_hex() const;

  const std::array<std::uint64_t, 4>& words() const { return w_; }
  std::array<std::uint64_t, 4>& words() { return w_; }

 private:
  int n_ = 0;
  std::uint64_t group_hash_ = 0;
  std::array<std::uint64_t, 4> w_{};
};

class FiniteGroup {
 public:
  /// Validates the table as a group and normalizes the identity to index 0.
  static FiniteGroup from_table(int order, std::vector<int> flat_table,
                                std::vector<std::string> labels = {},
                                int cap = kDefaultOrderCap);

  int order() const { return n_; }
  int identity() const { return 0; }
  int op(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  int inv(int x) const { return inv_[x]; }
  /// -x - y + x + y
  int commutator(int x, int y) const { return op(op(op(inv(x), inv(y)), x), y); }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<int>& table() const { return table_; }
  std::uint64_t table_hash() const { return hash_; }

  bool is_abelian() const { return abelian_; }
  bool is_nilpotent() const { return nilpotent_; }
  bool is_solvable() const { return solvable_; }

  int least_prime_factor() const {
    if (n_ < 2) throw invalid_input("least_prime_factor undefined for the trivial group");
    return lpf_;
  }

  const GroupSubset& center() const { return center_; }

  GroupSubset empty_subset() const { return GroupSubset(*this); }
  GroupSubset full_subset() const {
    GroupSubset s(*this);
    for (int i = 0; i < n_; ++i) s.set(i);
    return s;
  }
  GroupSubset subset_of(std::initializer_list<int> xs) const {
    GroupSubset s(*this);
    for (int x : xs) s.set(x);
    return s;
  }
  GroupSubset subset_of(const std::vector<int>& xs) const {
    GroupSubset s(*this);
    for (int x : xs) s.set(x);
    return s;
  }

  int element_order(int x) const {
    int k = 1, y = x;
    while (y != 0) {
      y = op(y, x);
      ++k;
    }
    return k;
  }

  /// Closure of S together with the identity under op and inverse.
  GroupSubset subgroup_generated(const GroupSubset& s) const;

  bool is_subgroup(const GroupSubset& h) const;

  /// Requires h to be a subgroup; true iff -g + h + g = h for all g.
  bool is_normal(const GroupSubset& h) const;

 private:
  FiniteGroup() = default;
  void check_same(const GroupSubset& s) const {
    if (s.group_hash() != hash_) throw group_mismatch("subset belongs to a different group");
  }
  void compute_invariants();

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::uint64_t hash_ = 0;
  int lpf_ = 0;
  bool abelian_ = false, nilpotent_ = false, solvable_ = false;
  GroupSubset center_;

  friend struct QuotientStructure;
};

inline GroupSubset::GroupSubset(const FiniteGroup& g)
    : n_(g.order()), group_hash_(g.table_hash()) {}

inline std::string GroupSubset::to_hex() const {
  int n = n_ > 0 ? n_ : 256;
  int nibbles = (n + 3) / 4;
  std::string out(static_cast<std::size_t>(nibbles), '0');
  static const char* digits = "0123456789abcdef";
  for (int i = 0; i < nibbles; ++i) {
    int v = static_cast<int>((w_[i >> 4] >> ((i & 15) * 4)) & 0xf);
    out[static_cast<std::size_t>(nibbles - 1 - i)] = digits[v];
  }
  return out;
}

inline void FiniteGroup::compute_invariants() {
  // hash: FNV-1a over order and flat table
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(n_));
  for (int v : table_) mix(static_cast<std::uint64_t>(v));
  hash_ = h;

  lpf_ = 0;
  for (int d = 2; d <= n_; ++d) {
    if (n_ % d == 0) {
      lpf_ = d;
      break;
    }
  }

  center_ = GroupSubset(*this);
  for (int x = 0; x < n_; ++x) {
    bool central = true;
    for (int g = 0; g < n_ && central; ++g) central = op(x, g) == op(g, x);
    if (central) center_.set(x);
  }
  abelian_ = center_.count() == n_;

  // upper central series
  {
    GroupSubset z = GroupSubset(*this);
    z.set(0);
    for (;;) {
      GroupSubset next(*this);
      for (int x = 0; x < n_; ++x) {
        bool in = true;
        for (int g = 0; g < n_ && in; ++g) in = z.test(commutator(x, g));
        if (in) next.set(x);
      }
      if (next == z) break;
      z = next;
    }
    nilpotent_ = z.count() == n_;
  }

  // derived series
  {
    GroupSubset d = full_subset();
    for (;;) {
      GroupSubset comms(*this);
      d.for_each([&](int x) { d.for_each([&](int y) { comms.set(commutator(x, y)); }); });
      GroupSubset next = subgroup_generated(comms);
      if (next == d) break;
      d = next;
    }
    solvable_ = d.count() == 1;
  }
}

inline GroupSubset FiniteGroup::subgroup_generated(const GroupSubset& s) const {
  check_same(s);
  GroupSubset cl(*this);
  cl.set(0);
  std::vector<int> work{0};
  s.for_each([&](int x) {
    if (!cl.test(x)) {
      cl.set(x);
      work.push_back(x);
    }
  });
  std::size_t head = 0;
  while (head < work.size()) {
    int x = work[head++];
    auto add = [&](int y) {
      if (!cl.test(y)) {
        cl.set(y);
        work.push_back(y);
      }
    };
    add(inv(x));
    std::size_t sz = work.size();
    for (std::size_t i = 0; i < sz; ++i) {
      add(op(x, work[i]));
      add(op(work[i], x));
    }
  }
  return cl;
}

inline bool FiniteGroup::is_subgroup(const GroupSubset& h) const {
  check_same(h);
  if (!h.test(0)) return false;
  bool ok = true;
  h.for_each([&](int x) {
    if (!ok) return;
    if (!h.test(inv(x))) {
      ok = false;
      return;
    }
    h.for_each([&](int y) {
      if (ok && !h.test(op(x, y))) ok = false;
    });
  });
  return ok;
}

inline bool FiniteGroup::is_normal(const GroupSubset& h) const {
  check_same(h);
  if (!is_subgroup(h))
    throw invalid_input("is_normal: argument " + h.to_string() + " is not a subgroup");
  for (int g = 0; g < n_; ++g) {
    bool ok = true;
    h.for_each([&](int x) {
      if (ok && !h.test(op(op(inv(g), x), g))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline FiniteGroup FiniteGroup::from_table(int order, std::vector<int> flat_table,
                                           std::vector<std::string> labels, int cap) {
  if (order < 1) throw invalid_input("group order must be positive");
  if (order > cap)
    throw cap_exceeded("group order " + std::to_string(order) + " exceeds cap " +
                       std::to_string(cap));
  const int n = order;
  if (static_cast<int>(flat_table.size()) != n * n)
    throw invalid_input("Cayley table has wrong size");
  for (int v : flat_table)
    if (v < 0 || v >= n) throw invalid_input("Cayley table entry out of range");

  // Latin square
  for (int r = 0; r < n; ++r) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int c = 0; c < n; ++c) {
      int v = flat_table[static_cast<std::size_t>(r) * n + c];
      if (seen[static_cast<std::size_t>(v)])
        throw invalid_input("Latin-square violation: row " + std::to_string(r) +
                            " repeats value " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int r = 0; r < n; ++r) {
      int v = flat_table[static_cast<std::size_t>(r) * n + c];
      if (seen[static_cast<std::size_t>(v)])
        throw invalid_input("Latin-square violation: column " + std::to_string(c) +
                            " repeats value " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  // identity
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = flat_table[static_cast<std::size_t>(cand) * n + x] == x &&
           flat_table[static_cast<std::size_t>(x) * n + cand] == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw invalid_input("no two-sided identity element");

  if (labels.empty()) {
    labels.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i);
  }
  if (static_cast<int>(labels.size()) != n) throw invalid_input("label list has wrong size");

  // normalize: swap identity with index 0
  if (e != 0) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    perm[0] = e;
    perm[static_cast<std::size_t>(e)] = 0;
    std::vector<int> t2(flat_table.size());
    std::vector<std::string> l2(labels.size());
    for (int i = 0; i < n; ++i) {
      l2[static_cast<std::size_t>(i)] = labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      for (int j = 0; j < n; ++j) {
        int v = flat_table[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * n +
                           perm[static_cast<std::size_t>(j)]];
        // perm is an involution, so it is its own inverse
        t2[static_cast<std::size_t>(i) * n + j] = perm[static_cast<std::size_t>(v)];
      }
    }
    flat_table = std::move(t2);
    labels = std::move(l2);
  }

  // associativity (full check below the cap)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int xy = flat_table[static_cast<std::size_t>(x) * n + y];
        int yz = flat_table[static_cast<std::size_t>(y) * n + z];
        if (flat_table[static_cast<std::size_t>(xy) * n + z] !=
            flat_table[static_cast<std::size_t>(x) * n + yz])
          throw invalid_input("associativity violation at triple (" + std::to_string(x) + "," +
                              std::to_string(y) + "," + std::to_string(z) + ")");
      }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat_table);
  g.labels_ = std::move(labels);
  g.inv_.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int ix = -1;
    for (int y = 0; y < n; ++y)
      if (g.table_[static_cast<std::size_t>(x) * n + y] == 0) {
        ix = y;
        break;
      }
    if (ix < 0 || g.table_[static_cast<std::size_t>(ix) * n + x] != 0)
      throw invalid_input("inverse violation at element " + std::to_string(x));
    g.inv_[static_cast<std::size_t>(x)] = ix;
  }
  g.compute_invariants();
  return g;
}

// ---------------------------------------------------------------------------
// Constructors for the test-group families

inline FiniteGroup build_cyclic(int n, int cap = kDefaultOrderCap) {
  if (n < 1) throw invalid_input("cyclic order must be positive");
  if (n > cap) throw cap_exceeded("cyclic order exceeds cap");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return FiniteGroup::from_table(n, std::move(t), {}, cap);
}

/// Row-major pair numbering: (i, j) -> i*|K| + j.
inline FiniteGroup build_direct_product(const FiniteGroup& g, const FiniteGroup& k,
                                        int cap = kDefaultOrderCap) {
  long long n = static_cast<long long>(g.order()) * k.order();
  if (n > cap) throw cap_exceeded("direct product order exceeds cap");
  int nk = k.order(), nn = static_cast<int>(n);
  std::vector<int> t(static_cast<std::size_t>(nn) * nn);
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b) {
      int x = g.op(a / nk, b / nk);
      int y = k.op(a % nk, b % nk);
      t[static_cast<std::size_t>(a) * nn + b] = x * nk + y;
    }
  std::vector<std::string> labels(static_cast<std::size_t>(nn));
  for (int a = 0; a < nn; ++a)
    labels[static_cast<std::size_t>(a)] = "(" + g.label(a / nk) + "," + k.label(a % nk) + ")";
  return FiniteGroup::from_table(nn, std::move(t), std::move(labels), cap);
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Upper unitriangular 3x3 matrices over Z_p; order p^3, nilpotent of class 2.
/// Element (a,b,c) is indexed a*p^2 + b*p + c.
inline FiniteGroup build_heisenberg(int p, int cap = kDefaultOrderCap) {
  if (!is_prime(p) || p == 2) throw invalid_input("heisenberg parameter must be an odd prime");
  long long n = static_cast<long long>(p) * p * p;
  if (n > cap) throw cap_exceeded("heisenberg order exceeds cap");
  int nn = static_cast<int>(n);
  std::vector<int> t(static_cast<std::size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i) {
    int a = i / (p * p), b = (i / p) % p, c = i % p;
    for (int j = 0; j < nn; ++j) {
      int a2 = j / (p * p), b2 = (j / p) % p, c2 = j % p;
      int a3 = (a + a2) % p;
      int b3 = (b + b2) % p;
      int c3 = (c + c2 + a * b2) % p;
      t[static_cast<std::size_t>(i) * nn + j] = a3 * p * p + b3 * p + c3;
    }
  }
  std::vector<std::string> labels(static_cast<std::size_t>(nn));
  for (int i = 0; i < nn; ++i) {
    int a = i / (p * p), b = (i / p) % p, c = i % p;
    labels[static_cast<std::size_t>(i)] =
        "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }
  return FiniteGroup::from_table(nn, std::move(t), std::move(labels), cap);
}

/// Z_m x| Z_k where the generator of Z_k acts as x -> r*x. Element (x, t)
/// is indexed t*m + x; (x,t)*(x',t') = (x + r^t x', t + t').
inline FiniteGroup build_semidirect_cyclic(int m, int k, int r, int cap = kDefaultOrderCap) {
  if (m < 1 || k < 1) throw invalid_input("semidirect parameters must be positive");
  if (static_cast<long long>(m) * k > cap) throw cap_exceeded("semidirect order exceeds cap");
  r %= m;
  if (r < 0) r += m;
  if (std::gcd(r, m) != 1) throw invalid_input("semidirect action parameter not a unit mod m");
  long long rk = 1;
  for (int i = 0; i < k; ++i) rk = rk * r % m;
  if (rk != 1 % m) throw invalid_input("semidirect action parameter: r^k != 1 mod m");
  int nn = m * k;
  std::vector<long long> rpow(static_cast<std::size_t>(k));
  rpow[0] = 1 % m;
  for (int i = 1; i < k; ++i) rpow[static_cast<std::size_t>(i)] = rpow[static_cast<std::size_t>(i - 1)] * r % m;
  std::vector<int> tab(static_cast<std::size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i) {
    int x = i % m, t = i / m;
    for (int j = 0; j < nn; ++j) {
      int x2 = j % m, t2 = j / m;
      int x3 = static_cast<int>((x + rpow[static_cast<std::size_t>(t)] * x2) % m);
      int t3 = (t + t2) % k;
      tab[static_cast<std::size_t>(i) * nn + j] = t3 * m + x3;
    }
  }
  return FiniteGroup::from_table(nn, std::move(tab), {}, cap);
}

/// Quaternion group of order 8: {1,-1,i,-i,j,-j,k,-k}.
inline FiniteGroup build_quaternion8(int cap = kDefaultOrderCap) {
  // index: axis a in {1=scalar, i, j, k} and sign; encode (axis, sign) as axis*2+sign
  auto mul = [](int x, int y) {
    int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
    int sign = sx ^ sy;
    int axis;
    if (ax == 0) {
      axis = ay;
    } else if (ay == 0) {
      axis = ax;
    } else if (ax == ay) {
      axis = 0;
      sign ^= 1;  // i*i = -1
    } else {
      // i*j=k, j*k=i, k*i=j; reversed order flips sign
      axis = 6 - ax - ay;
      bool forward = (ay - ax + 3) % 3 == 1;
      if (!forward) sign ^= 1;
    }
    return axis * 2 + sign;
  };
  std::vector<int> t(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) t[static_cast<std::size_t>(x) * 8 + y] = mul(x, y);
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(8, std::move(t), std::move(labels), cap);
}

// ---------------------------------------------------------------------------
// Quotients

/// Normal subgroup, coset partition, quotient group, projection and section.
struct QuotientStructure {
  const FiniteGroup* parent = nullptr;
  GroupSubset normal_subgroup;
  FiniteGroup quotient;
  std::vector<int> projection;  // element -> coset index
  std::vector<int> section;     // coset index -> least representative

  int project(int x) const { return projection[static_cast<std::size_t>(x)]; }
};

inline QuotientStructure quotient(const FiniteGroup& g, const GroupSubset& h) {
  if (!g.is_normal(h)) throw invalid_input("quotient: subgroup is not normal");
  const int n = g.order();
  QuotientStructure q;
  q.parent = &g;
  q.normal_subgroup = h;
  q.projection.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (q.projection[static_cast<std::size_t>(x)] >= 0) continue;
    int c = static_cast<int>(q.section.size());
    q.section.push_back(x);
    h.for_each([&](int e) { q.projection[static_cast<std::size_t>(g.op(x, e))] = c; });
  }
  const int m = static_cast<int>(q.section.size());
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    labels[static_cast<std::size_t>(i)] = g.label(q.section[static_cast<std::size_t>(i)]) + "+H";
    for (int j = 0; j < m; ++j)
      t[static_cast<std::size_t>(i) * m + j] = q.projection[static_cast<std::size_t>(
          g.op(q.section[static_cast<std::size_t>(i)], q.section[static_cast<std::size_t>(j)]))];
  }
  q.quotient = FiniteGroup::from_table(m, std::move(t), std::move(labels));
  return q;
}

/// Table-equality-up-to-relabel for tiny groups (used in tests only).
inline bool isomorphic_small(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order();
  if (n != b.order()) return false;
  if (n > 16) throw cap_exceeded("isomorphic_small limited to order <= 16");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  // identity must map to identity, so only permute 1..n-1
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = perm[static_cast<std::size_t>(a.op(x, y))] ==
             b.op(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

}  // namespace dotplus
