#pragma once

// Named group catalog ("Z12", "Z2xZ4", "Heis3", "F21", "Q8", "D4", ...) plus
// a JSON Cayley-table loader for ad-hoc groups.

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dotplus/group.hpp"

namespace dotplus {

namespace catdetail {

/// "Z12" -> 12, otherwise nullopt.
inline std::optional<int> parse_cyclic(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'Z' && s[0] != 'z')) return std::nullopt;
  int v = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    v = v * 10 + (s[i] - '0');
    if (v > kDefaultOrderCap) return std::nullopt;
  }
  return v >= 1 ? std::optional<int>(v) : std::nullopt;
}

}  // namespace catdetail

/// Resolve a catalog name. Supported: Z<n>, products Z<a>xZ<b>[xZ<c>...],
/// Heis3, Heis5, F21, Q8, D4.
inline FiniteGroup catalog_group(const std::string& name, int cap = kDefaultOrderCap) {
  if (name == "Heis3") return build_heisenberg(3, cap);
  if (name == "Heis5") return build_heisenberg(5, cap);
  if (name == "F21") return build_semidirect_cyclic(7, 3, 2, cap);
  if (name == "Q8") return build_quaternion8(cap);
  if (name == "D4") return build_semidirect_cyclic(4, 2, 3, cap);

  // Z<a>xZ<b>... products
  std::vector<std::string> factors;
  std::string cur;
  for (char c : name) {
    if (c == 'x') {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  factors.push_back(cur);
  std::vector<int> orders;
  for (const auto& f : factors) {
    auto v = catdetail::parse_cyclic(f);
    if (!v) throw invalid_input("unknown catalog group: " + name);
    orders.push_back(*v);
  }
  if (orders.empty()) throw invalid_input("unknown catalog group: " + name);
  FiniteGroup g = build_cyclic(orders[0], cap);
  for (std::size_t i = 1; i < orders.size(); ++i)
    g = build_direct_product(g, build_cyclic(orders[i], cap), cap);
  return g;
}

/// Names exercised by the stock verification runs.
inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (int n = 2; n <= 12; ++n) out.push_back("Z" + std::to_string(n));
  out.insert(out.end(), {"Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "Z5xZ5", "Z7xZ7", "Q8", "D4",
                         "Heis3", "Heis5", "F21"});
  return out;
}

/// Group definition file: {"order": n, "table": [[...],...] or flat [...],
/// "labels": [...]} (labels optional). The table is validated like any other
/// input and the identity is renumbered to 0.
inline FiniteGroup load_cayley(const std::string& path, int cap = kDefaultOrderCap) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input("group file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw invalid_input("group file " + path + ": need object with \"order\" and \"table\"");
  int n = j.at("order").get<int>();
  std::vector<int> flat;
  const auto& t = j.at("table");
  if (!t.is_array()) throw invalid_input("group file " + path + ": \"table\" must be an array");
  if (!t.empty() && t.front().is_array()) {
    for (const auto& row : t)
      for (const auto& v : row) flat.push_back(v.get<int>());
  } else {
    for (const auto& v : t) flat.push_back(v.get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& v : j.at("labels")) labels.push_back(v.get<std::string>());
  return FiniteGroup::from_table(n, std::move(flat), std::move(labels), cap);
}

struct GroupInfo {
  int order = 0;
  int least_prime = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  int center_size = 0;
  std::uint64_t table_hash = 0;
};

inline GroupInfo group_info(const FiniteGroup& g) {
  GroupInfo info;
  info.order = g.order();
  info.least_prime = g.order() >= 2 ? g.least_prime_factor() : 0;
  info.abelian = g.is_abelian();
  info.nilpotent = g.is_nilpotent();
  info.solvable = g.is_solvable();
  info.center_size = g.center().count();
  info.table_hash = g.table_hash();
  return info;
}

}  // namespace dotplus
