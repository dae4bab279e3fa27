#pragma once

// Disk cache for automorphism groups, keyed by Cayley-table hash. Cached
// entries are revalidated on load (hom law + closure) before use.

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dotplus/automorphism.hpp"
#include "dotplus/group.hpp"

namespace dotplus {

class AutCache {
 public:
  AutCache() = default;
  explicit AutCache(std::string path) : path_(std::move(path)) { load(); }

  /// Cached permutations for the group, or enumerate, store, and persist.
  std::vector<Automorphism> get_or_enumerate(const FiniteGroup& g,
                                             int cap = kDefaultAutomorphismCap) {
    auto it = entries_.find(key(g));
    if (it != entries_.end()) {
      try {
        std::vector<Automorphism> out;
        out.reserve(it->second.size());
        for (const auto& perm : it->second) out.emplace_back(g, perm);  // revalidates hom law
        return out;
      } catch (const error&) {
        entries_.erase(it);  // stale or corrupt entry; fall through to recompute
      }
    }
    std::vector<Automorphism> out = enumerate_automorphisms(g, cap);
    std::vector<std::vector<int>>& stored = entries_[key(g)];
    stored.clear();
    for (const auto& s : out) stored.push_back(s.perm());
    if (!path_.empty()) save();
    return out;
  }

  std::size_t size() const { return entries_.size(); }

  void save() const {
    if (path_.empty()) return;
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, perms] : entries_) j[k] = perms;
    std::ofstream out(path_);
    if (!out) throw invalid_input("cannot write automorphism cache: " + path_);
    out << j.dump(1) << '\n';
  }

 private:
  static std::string key(const FiniteGroup& g) { return std::to_string(g.table_hash()); }

  void load() {
    std::ifstream in(path_);
    if (!in) return;  // cache starts empty
    nlohmann::json j;
    try {
      in >> j;
      for (auto it = j.begin(); it != j.end(); ++it)
        entries_[it.key()] = it.value().get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception&) {
      entries_.clear();  // unreadable cache is equivalent to no cache
    }
  }

  std::string path_;
  std::map<std::string, std::vector<std::vector<int>>> entries_;
};

}  // namespace dotplus
