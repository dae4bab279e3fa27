#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "dotplus/aut_cache.hpp"
#include "dotplus/catalog.hpp"
#include "dotplus/report.hpp"

using namespace dotplus;

TEST_CASE("report JSON round-trips") {
  FiniteGroup z5 = build_cyclic(5);
  SearchPlan plan;
  plan.mode = SearchPlan::Mode::sampled;
  plan.sample_count = 500;
  plan.seed = 11;
  plan.max_a = 3;
  VerificationReport rep = verify_cauchy_davenport(z5, plan);
  rep.notes.push_back("note one");

  nlohmann::json j = report_to_json(rep, "Z5");
  VerificationReport back = report_from_json(j);
  CHECK(back.theorem == rep.theorem);
  CHECK(back.instances_checked == rep.instances_checked);
  CHECK(back.equality_cases == rep.equality_cases);
  CHECK(back.diagonal_checked == rep.diagonal_checked);
  CHECK(back.status == rep.status);
  CHECK(back.notes == rep.notes);
  CHECK(back.plan.mode == rep.plan.mode);
  CHECK(back.plan.sample_count == rep.plan.sample_count);
  CHECK(back.plan.seed == rep.plan.seed);
  CHECK(back.plan.max_a == rep.plan.max_a);
}

TEST_CASE("violations round-trip with all payload fields") {
  Violation v;
  v.a = {1, 2, 3};
  v.b = std::vector<int>{4, 5};
  v.sigma_perm = std::vector<int>{0, 2, 1};
  v.gamma = 3;
  v.lhs = 2;
  v.rhs = 4;
  v.detail = "why";
  Violation back = violation_from_json(violation_to_json(v));
  CHECK(back.a == v.a);
  CHECK(back.b == v.b);
  CHECK(back.sigma_perm == v.sigma_perm);
  CHECK(back.gamma == v.gamma);
  CHECK(back.lhs == v.lhs);
  CHECK(back.rhs == v.rhs);
  CHECK(back.detail == v.detail);

  Violation sparse;
  sparse.a = {0};
  Violation sback = violation_from_json(violation_to_json(sparse));
  CHECK_FALSE(sback.b.has_value());
  CHECK_FALSE(sback.sigma_perm.has_value());
  CHECK_FALSE(sback.gamma.has_value());
}

TEST_CASE("canonical serialization is byte-identical across runs and jobs") {
  FiniteGroup h = catalog_group("Heis3");
  SearchPlan plan;
  plan.mode = SearchPlan::Mode::sampled;
  plan.sample_count = 100000;
  plan.seed = 123;
  VerificationReport r1 = verify_theorem1(h, plan);
  SearchPlan plan4 = plan;
  plan4.jobs = 4;
  VerificationReport r2 = verify_theorem1(h, plan4);
  CHECK(report_to_canonical_string(r1, "Heis3") == report_to_canonical_string(r2, "Heis3"));
  // timing differs between runs but never reaches the document
  CHECK(report_to_canonical_string(r1).find("wall") == std::string::npos);
}

TEST_CASE("text rendering mentions the essentials") {
  FiniteGroup z5 = build_cyclic(5);
  SearchPlan plan;
  VerificationReport rep = verify_theorem2(z5, plan);
  std::string text = report_to_text(rep, "Z5");
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("thm2") != std::string::npos);
  CHECK(text.find("Z5") != std::string::npos);
}

TEST_CASE("extremal CSV has a header and quoted structure column") {
  FiniteGroup z5 = build_cyclic(5);
  SearchPlan plan;
  ExtremalScan scan = extremal_scan(z5, plan, BoundKind::eh_diagonal);
  std::string csv = extremal_to_csv(scan);
  CHECK(csv.rfind("bound,a,b,lhs,structure\n", 0) == 0);
  CHECK(csv.find("eh_diagonal") != std::string::npos);
}

TEST_CASE("automorphism cache round-trips through disk") {
  const char* path = "test_aut_cache.json";
  std::remove(path);
  FiniteGroup d4 = catalog_group("D4");
  {
    AutCache cache(path);
    auto auts = cache.get_or_enumerate(d4);
    CHECK(auts.size() == 8);  // Aut(D4) = D4
    CHECK(cache.size() == 1);
  }
  {
    AutCache cache(path);  // warm load
    CHECK(cache.size() == 1);
    auto auts = cache.get_or_enumerate(d4);
    CHECK(auts.size() == 8);
    for (const auto& s : auts) CHECK_NOTHROW(s.require_group(d4));
  }
  // corrupt cache file degrades to recomputation
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  {
    AutCache cache(path);
    CHECK(cache.size() == 0);
    CHECK(cache.get_or_enumerate(d4).size() == 8);
  }
  std::remove(path);
}

TEST_CASE("group file loading") {
  const char* path = "test_group_file.json";
  {
    std::ofstream f(path);
    f << R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]], "labels": ["e","a","b"]})";
  }
  FiniteGroup g = load_cayley(path);
  CHECK(g.order() == 3);
  CHECK(isomorphic_small(g, build_cyclic(3)));
  CHECK(g.label(1) == "a");
  std::remove(path);

  // flat table form
  {
    std::ofstream f(path);
    f << R"({"order": 2, "table": [0,1,1,0]})";
  }
  CHECK(load_cayley(path).order() == 2);
  std::remove(path);

  // malformed input
  {
    std::ofstream f(path);
    f << R"({"order": 2})";
  }
  CHECK_THROWS_AS(load_cayley(path), invalid_input);
  std::remove(path);
  CHECK_THROWS_AS(load_cayley("no_such_file.json"), invalid_input);
}

TEST_CASE("plan mode names round-trip") {
  for (auto m : {SearchPlan::Mode::exhaustive, SearchPlan::Mode::size_capped,
                 SearchPlan::Mode::sampled}) {
    SearchPlan p;
    p.mode = m;
    CHECK(plan_from_json(plan_to_json(p)).mode == m);
  }
}
