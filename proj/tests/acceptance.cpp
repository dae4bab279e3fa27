// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "dotplus/catalog.hpp"
#include "dotplus/field.hpp"
#include "dotplus/harness.hpp"
#include "dotplus/report.hpp"

using namespace dotplus;

namespace {

int g_jobs = 1;

struct CriterionResult {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> small_catalog(int max_order) {
  std::vector<std::string> out;
  for (const auto& name : catalog_names())
    if (catalog_group(name).order() <= max_order) out.push_back(name);
  return out;
}

// criterion 1: Cauchy-Davenport, exhaustive, every catalog group of order <= 12
CriterionResult criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  unsigned long long checked = 0;
  for (const auto& name : small_catalog(12)) {
    FiniteGroup g = catalog_group(name);
    SearchPlan plan;
    plan.jobs = g_jobs;
    VerificationReport rep = verify_cauchy_davenport(g, plan);
    checked += rep.instances_checked;
    if (rep.status != Status::PASS)
      return {false, name + ": " + std::to_string(rep.violations.size()) + " violations"};
  }
  double secs = seconds_since(t0);
  if (secs >= 60.0) return {false, "runtime " + std::to_string(secs) + "s >= 60s"};
  return {true, std::to_string(checked) + " pairs, " + std::to_string(secs).substr(0, 5) + "s"};
}

// criterion 2: Theorem 1 exhaustive on the listed nilpotent groups, plus
// capped + sampled Heisenberg(3)
CriterionResult criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> names;
  for (int n = 2; n <= 12; ++n) names.push_back("Z" + std::to_string(n));
  names.insert(names.end(), {"Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "Q8", "D4"});
  unsigned long long checked = 0;
  for (const auto& name : names) {
    FiniteGroup g = catalog_group(name);
    SearchPlan plan;
    plan.jobs = g_jobs;
    VerificationReport rep = verify_theorem1(g, plan);
    checked += rep.instances_checked;
    if (rep.status != Status::PASS)
      return {false, name + ": " + std::to_string(rep.violations.size()) + " violations"};
  }
  FiniteGroup heis = catalog_group("Heis3");
  SearchPlan capped;
  capped.mode = SearchPlan::Mode::size_capped;
  capped.max_a = capped.max_b = 4;
  capped.jobs = g_jobs;
  VerificationReport rc = verify_theorem1(heis, capped);
  checked += rc.instances_checked;
  if (rc.status != Status::PASS)
    return {false, "Heis3 capped: " + std::to_string(rc.violations.size()) + " violations"};
  SearchPlan sampled;
  sampled.mode = SearchPlan::Mode::sampled;
  sampled.sample_count = 1'000'000;
  sampled.seed = 20260824;
  sampled.jobs = g_jobs;
  VerificationReport rs = verify_theorem1(heis, sampled);
  checked += rs.instances_checked;
  if (rs.status != Status::PASS)
    return {false, "Heis3 sampled: " + std::to_string(rs.violations.size()) + " violations"};
  double secs = seconds_since(t0);
  if (secs >= 600.0) return {false, "runtime " + std::to_string(secs) + "s >= 600s"};
  return {true, std::to_string(checked) + " pairs, " + std::to_string(secs).substr(0, 5) + "s"};
}

// criterion 3: Theorem 2 + Corollary 1, exhaustive over all A within the size
// hypothesis |A| < (p(G)+3)/2 (cap (p+1)/2 covers it exactly for odd p)
CriterionResult criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  unsigned long long checked = 0, equalities = 0;
  for (const char* name : {"Heis3", "Heis5", "Z25", "Z5xZ5", "Z49", "Z7xZ7", "Z11", "Z13"}) {
    FiniteGroup g = catalog_group(name);
    SearchPlan plan;
    plan.mode = SearchPlan::Mode::size_capped;
    plan.max_a = (g.least_prime_factor() + 1) / 2;
    plan.jobs = g_jobs;
    VerificationReport rep = verify_theorem2(g, plan);
    checked += rep.instances_checked;
    equalities += rep.equality_cases;
    if (rep.status != Status::PASS)
      return {false, std::string(name) + ": " + std::to_string(rep.violations.size()) +
                         " structure violations"};
  }
  double secs = seconds_since(t0);
  if (secs >= 600.0) return {false, "runtime " + std::to_string(secs) + "s >= 600s"};
  return {true, std::to_string(checked) + " sets, " + std::to_string(equalities) +
                    " equality cases, " + std::to_string(secs).substr(0, 5) + "s"};
}

// criterion 4: Theorem 4.1 over all odd-order automorphisms; the size cap
// (p+1)/2 covers every qualifying A since 2|A|-3 < p(G) is required
CriterionResult criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  unsigned long long checked = 0, equalities = 0;
  for (const char* name : {"Z7", "Z9", "Z3xZ3", "Z5xZ5", "F21", "Heis3"}) {
    FiniteGroup g = catalog_group(name);
    SearchPlan plan;
    plan.mode = SearchPlan::Mode::size_capped;
    plan.max_a = (g.least_prime_factor() + 1) / 2;
    plan.jobs = g_jobs;
    VerificationReport rep = verify_theorem3(g, plan, /*aut_cap=*/512);
    checked += rep.instances_checked;
    equalities += rep.equality_cases;
    if (rep.status != Status::PASS)
      return {false, std::string(name) + ": status " + status_name(rep.status) + ", " +
                         std::to_string(rep.violations.size()) + " violations"};
  }
  double secs = seconds_since(t0);
  if (secs >= 900.0) return {false, "runtime " + std::to_string(secs) + "s >= 900s"};
  return {true, std::to_string(checked) + " (sigma,A) instances, " + std::to_string(equalities) +
                    " equality cases, " + std::to_string(secs).substr(0, 5) + "s"};
}

// criterion 5: Balister-Wheeler bound, 1e5 samples per catalog group; sigma
// drawn from the full automorphism group where it fits the raised cap,
// otherwise from identity + inner automorphisms
CriterionResult criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  unsigned long long checked = 0, even_sigma_groups = 0;
  for (const auto& name : catalog_names()) {
    FiniteGroup g = catalog_group(name);
    std::vector<Automorphism> auts;
    try {
      auts = enumerate_automorphisms(g, 512);
    } catch (const cap_exceeded&) {
      auts.push_back(Automorphism::identity(g));
      for (int a = 1; a < g.order(); ++a) {
        Automorphism inner = inner_automorphism(g, a);
        if (std::find(auts.begin(), auts.end(), inner) == auts.end()) auts.push_back(inner);
      }
      std::sort(auts.begin(), auts.end());
    }
    for (const auto& s : auts)
      if (s.even_order()) {
        ++even_sigma_groups;
        break;
      }
    SearchPlan plan;
    plan.mode = SearchPlan::Mode::sampled;
    plan.sample_count = 100'000;
    plan.seed = 5150;
    plan.jobs = g_jobs;
    VerificationReport rep = verify_balister_wheeler(g, plan, 512, &auts);
    checked += rep.instances_checked;
    if (rep.status != Status::PASS)
      return {false, name + ": status " + status_name(rep.status) + ", " +
                         std::to_string(rep.violations.size()) + " violations"};
  }
  if (even_sigma_groups == 0) return {false, "no even-order sigma was exercised"};
  double secs = seconds_since(t0);
  return {true, std::to_string(checked) + " samples, even-order sigma in " +
                    std::to_string(even_sigma_groups) + " groups, " +
                    std::to_string(secs).substr(0, 5) + "s"};
}

// criterion 6: Lemma 2.1 on Z_p and on quotient groups of the Theorem 1 family
CriterionResult criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  unsigned long long checked = 0;
  auto run = [&](const FiniteGroup& g, const std::string& tag) -> std::string {
    SearchPlan plan;
    plan.jobs = g_jobs;
    VerificationReport rep = verify_hall(g, plan);
    checked += rep.instances_checked;
    if (rep.status != Status::PASS)
      return tag + ": " + std::to_string(rep.violations.size()) + " SDR failures";
    return {};
  };
  for (int p : {3, 5, 7, 11}) {
    if (auto err = run(build_cyclic(p), "Z" + std::to_string(p)); !err.empty())
      return {false, err};
  }
  // quotients that appear in the Theorem 1 induction: Z3xZ3 / <(0,1)> and
  // Heis3 / center
  FiniteGroup z3z3 = catalog_group("Z3xZ3");
  QuotientStructure q1 = quotient(z3z3, z3z3.subgroup_generated(z3z3.subset_of({1})));
  if (auto err = run(q1.quotient, "Z3xZ3/line"); !err.empty()) return {false, err};
  FiniteGroup heis = catalog_group("Heis3");
  QuotientStructure q2 = quotient(heis, heis.center());
  if (auto err = run(q2.quotient, "Heis3/center"); !err.empty()) return {false, err};
  double secs = seconds_since(t0);
  return {true, std::to_string(checked) + " pairs, 100% SDR success, " +
                    std::to_string(secs).substr(0, 5) + "s"};
}

// criterion 7: Lemma 4.2 coefficient vs oracle, and the field bound
CriterionResult criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  unsigned long long grid = 0;
  for (int p : {3, 5, 7, 11, 13}) {
    FiniteField f(p, 1);
    for (int m = 2; m <= 6; ++m)
      for (int n = 2; n <= 6; ++n) {
        if (m + n - 2 > p) continue;
        for (int gamma = 0; gamma < p; ++gamma) {
          CoefficientCertificate cert = anr_coefficient(f, m, n, gamma);
          if (cert.value != expansion_oracle_coefficient(f, m, n, gamma))
            return {false, "coefficient mismatch p=" + std::to_string(p) +
                               " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                               " gamma=" + std::to_string(gamma)};
          ++grid;
        }
      }
  }
  unsigned long long bound_checked = 0;
  for (int p : {3, 5, 7}) {
    FiniteField f(p, 1);
    VerificationReport rep = verify_field_lemma(f, 3);
    bound_checked += rep.instances_checked;
    if (rep.status != Status::PASS)
      return {false, "field bound p=" + std::to_string(p) + ": " +
                         std::to_string(rep.violations.size()) + " violations"};
  }
  double secs = seconds_since(t0);
  return {true, std::to_string(grid) + " coefficient cells, " + std::to_string(bound_checked) +
                    " bound instances, " + std::to_string(secs).substr(0, 5) + "s"};
}

// criterion 8: pruning soundness on all catalog groups of order <= 9
CriterionResult criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : small_catalog(9)) {
    FiniteGroup g = catalog_group(name);
    if (!g.is_nilpotent()) continue;
    SearchPlan plain;
    plain.jobs = g_jobs;
    SearchPlan pruned = plain;
    pruned.prune_inversion = true;
    VerificationReport a = verify_theorem1(g, plain);
    VerificationReport b = verify_theorem1(g, pruned);
    if (!a.violations.empty() || !b.violations.empty())
      return {false, name + ": non-empty violation set"};
    if (b.instances_checked > a.instances_checked ||
        2 * b.instances_checked < a.instances_checked)
      return {false, name + ": inconsistent accounting (" +
                         std::to_string(b.instances_checked) + " pruned vs " +
                         std::to_string(a.instances_checked) + ")"};
  }
  double secs = seconds_since(t0);
  return {true, "identical empty violation sets, " + std::to_string(secs).substr(0, 5) + "s"};
}

// criterion 9: byte-identical reports for repeated sampled runs
CriterionResult criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  FiniteGroup heis = catalog_group("Heis3");
  SearchPlan plan;
  plan.mode = SearchPlan::Mode::sampled;
  plan.sample_count = 200'000;
  plan.seed = 99;
  plan.jobs = 1;
  std::string first = report_to_canonical_string(verify_theorem1(heis, plan), "Heis3");
  SearchPlan again = plan;
  again.jobs = 4;  // thread count must not leak into the bytes
  std::string second = report_to_canonical_string(verify_theorem1(heis, again), "Heis3");
  if (first != second) return {false, "reports differ between runs"};

  FiniteGroup z12 = build_cyclic(12);
  SearchPlan cd;
  cd.mode = SearchPlan::Mode::sampled;
  cd.sample_count = 100'000;
  cd.seed = 7;
  std::string c1 = report_to_canonical_string(verify_cauchy_davenport(z12, cd), "Z12");
  std::string c2 = report_to_canonical_string(verify_cauchy_davenport(z12, cd), "Z12");
  if (c1 != c2) return {false, "cd reports differ between runs"};
  double secs = seconds_since(t0);
  return {true, "byte-identical, " + std::to_string(secs).substr(0, 5) + "s"};
}

}  // namespace

int main() {
  g_jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (g_jobs < 1) g_jobs = 1;

  struct Entry {
    const char* name;
    CriterionResult (*fn)();
  };
  const Entry entries[] = {
      {"cauchy-davenport exhaustive, catalog |G| <= 12", criterion1},
      {"theorem 1 bounds, exhaustive + Heis3 capped/sampled", criterion2},
      {"theorem 2 + corollary 1 equality structure", criterion3},
      {"theorem 4.1 sigma-commutativity, odd-order sigma", criterion4},
      {"balister-wheeler bound, sampled with even-order sigma", criterion5},
      {"lemma 2.1 distinct representative sums", criterion6},
      {"lemma 4.2 coefficient formula + field bound", criterion7},
      {"pruning soundness, |G| <= 9", criterion8},
      {"sampled-run determinism", criterion9},
  };

  bool all = true;
  int idx = 0;
  for (const auto& e : entries) {
    ++idx;
    CriterionResult r = e.fn();
    all = all && r.pass;
    std::printf("[%d/9] %s: %s (%s)\n", idx, r.pass ? "PASS" : "FAIL", e.name, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
