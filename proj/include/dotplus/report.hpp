#pragma once

// Report serialization. The JSON form is canonical: keys are emitted in
// sorted order and wall-clock timing is deliberately excluded, so two runs of
// the same plan and seed produce byte-identical documents.

#include <sstream>
#include <string>

#include <json.hpp>

#include "dotplus/harness.hpp"
#include "dotplus/verify_types.hpp"

namespace dotplus {

inline nlohmann::json plan_to_json(const SearchPlan& p) {
  nlohmann::json j;
  j["mode"] = mode_name(p.mode);
  j["max_a"] = p.max_a;
  j["max_b"] = p.max_b;
  j["sample_count"] = p.sample_count;
  j["seed"] = p.seed;
  j["prune_inversion"] = p.prune_inversion;
  j["prune_automorphism"] = p.prune_automorphism;
  return j;  // jobs omitted: reports must not depend on thread count
}

inline SearchPlan plan_from_json(const nlohmann::json& j) {
  SearchPlan p;
  std::string m = j.at("mode").get<std::string>();
  if (m == "exhaustive")
    p.mode = SearchPlan::Mode::exhaustive;
  else if (m == "capped")
    p.mode = SearchPlan::Mode::size_capped;
  else if (m == "sampled")
    p.mode = SearchPlan::Mode::sampled;
  else
    throw invalid_input("unknown plan mode: " + m);
  p.max_a = j.at("max_a").get<int>();
  p.max_b = j.at("max_b").get<int>();
  p.sample_count = j.at("sample_count").get<long long>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.prune_inversion = j.at("prune_inversion").get<bool>();
  p.prune_automorphism = j.at("prune_automorphism").get<bool>();
  return p;
}

inline nlohmann::json violation_to_json(const Violation& v) {
  nlohmann::json j;
  j["a"] = v.a;
  if (v.b) j["b"] = *v.b;
  if (v.sigma_perm) j["sigma"] = *v.sigma_perm;
  if (v.gamma) j["gamma"] = *v.gamma;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

inline Violation violation_from_json(const nlohmann::json& j) {
  Violation v;
  v.a = j.at("a").get<std::vector<int>>();
  if (j.contains("b")) v.b = j.at("b").get<std::vector<int>>();
  if (j.contains("sigma")) v.sigma_perm = j.at("sigma").get<std::vector<int>>();
  if (j.contains("gamma")) v.gamma = j.at("gamma").get<int>();
  v.lhs = j.at("lhs").get<long long>();
  v.rhs = j.at("rhs").get<long long>();
  if (j.contains("detail")) v.detail = j.at("detail").get<std::string>();
  return v;
}

inline nlohmann::json report_to_json(const VerificationReport& r,
                                     const std::string& group_name = {}) {
  nlohmann::json j;
  if (!group_name.empty()) j["group"] = group_name;
  j["theorem"] = r.theorem;
  j["plan"] = plan_to_json(r.plan);
  j["instances_checked"] = r.instances_checked;
  j["equality_cases"] = r.equality_cases;
  j["diagonal_checked"] = r.diagonal_checked;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) j["violations"].push_back(violation_to_json(v));
  j["notes"] = r.notes;
  j["status"] = status_name(r.status);
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.plan = plan_from_json(j.at("plan"));
  r.instances_checked = j.at("instances_checked").get<unsigned long long>();
  r.equality_cases = j.at("equality_cases").get<unsigned long long>();
  r.diagonal_checked = j.at("diagonal_checked").get<unsigned long long>();
  for (const auto& v : j.at("violations")) r.violations.push_back(violation_from_json(v));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  std::string st = j.at("status").get<std::string>();
  r.status = st == "PASS" ? Status::PASS : st == "FAIL" ? Status::FAIL : Status::PARTIAL;
  return r;
}

/// Canonical byte form: sorted keys, two-space indent, trailing newline.
inline std::string report_to_canonical_string(const VerificationReport& r,
                                              const std::string& group_name = {}) {
  return report_to_json(r, group_name).dump(2) + "\n";
}

inline std::string report_to_text(const VerificationReport& r,
                                  const std::string& group_name = {}) {
  std::ostringstream os;
  os << status_name(r.status) << "  theorem=" << r.theorem;
  if (!group_name.empty()) os << "  group=" << group_name;
  os << "  mode=" << mode_name(r.plan.mode) << "  checked=" << r.instances_checked
     << "  equality=" << r.equality_cases;
  if (r.diagonal_checked) os << "  diagonal=" << r.diagonal_checked;
  os << "  violations=" << r.violations.size() << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  auto join = [](const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(xs[i]);
    }
    return s;
  };
  for (const auto& v : r.violations) {
    os << "  violation: A={" << join(v.a) << "}";
    if (v.b) os << " B={" << join(*v.b) << "}";
    if (v.sigma_perm) os << " sigma=[" << join(*v.sigma_perm) << "]";
    if (v.gamma) os << " gamma=" << *v.gamma;
    os << " lhs=" << v.lhs << " rhs=" << v.rhs;
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << "\n";
  }
  return os.str();
}

/// One row per equality instance; A and B are semicolon-joined element lists.
inline std::string extremal_to_csv(const ExtremalScan& scan) {
  std::ostringstream os;
  os << "bound,a,b,lhs,structure\n";
  auto join = [](const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ';';
      s += std::to_string(xs[i]);
    }
    return s;
  };
  for (const auto& inst : scan.instances) {
    os << scan.bound << "," << join(inst.a) << "," << (inst.b ? join(*inst.b) : std::string())
       << "," << inst.lhs << ",\"" << inst.structure << "\"\n";
  }
  return os.str();
}

inline nlohmann::json extremal_to_json(const ExtremalScan& scan) {
  nlohmann::json j;
  j["bound"] = scan.bound;
  j["instances_checked"] = scan.instances_checked;
  j["instances"] = nlohmann::json::array();
  for (const auto& inst : scan.instances) {
    nlohmann::json e;
    e["a"] = inst.a;
    if (inst.b) e["b"] = *inst.b;
    e["lhs"] = inst.lhs;
    if (!inst.structure.empty()) e["structure"] = inst.structure;
    j["instances"].push_back(e);
  }
  return j;
}

}  // namespace dotplus
