// Command-line front end: group inspection, theorem verification runs, and
// extremal (equality-case) scans. Exit codes: 0 PASS, 2 FAIL, 3 PARTIAL,
// 4 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dotplus/aut_cache.hpp"
#include "dotplus/catalog.hpp"
#include "dotplus/field.hpp"
#include "dotplus/harness.hpp"
#include "dotplus/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 2;
constexpr int kExitPartial = 3;
constexpr int kExitUsage = 4;

struct CommonOpts {
  std::string group_name;
  std::string group_file;
  std::string mode = "exhaustive";
  int max_a = -1;
  int max_b = -1;
  long long samples = 100000;
  std::uint64_t seed = 1;
  std::string prune = "none";
  std::string format = "text";
  std::string out;
  int jobs = 1;
};

void add_group_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--group", o.group_name, "catalog group name (e.g. Z12, Z2xZ4, Heis3)");
  cmd->add_option("--group-file", o.group_file, "JSON Cayley-table file");
}

void add_plan_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--mode", o.mode, "search mode")
      ->check(CLI::IsMember({"exhaustive", "capped", "sampled"}));
  cmd->add_option("--max-a", o.max_a, "cap on |A| (capped/sampled modes)");
  cmd->add_option("--max-b", o.max_b, "cap on |B| (capped/sampled modes)");
  cmd->add_option("--samples", o.samples, "sample count (sampled mode)");
  cmd->add_option("--seed", o.seed, "RNG seed (sampled mode)");
  cmd->add_option("--prune", o.prune, "symmetry pruning")
      ->check(CLI::IsMember({"none", "inversion", "auto", "both"}));
  cmd->add_option("--jobs", o.jobs, "worker threads (does not affect report bytes)");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o, bool csv = false) {
  std::vector<std::string> formats = {"json", "text"};
  if (csv) formats.push_back("csv");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", o.out, "write output to file instead of stdout");
}

dotplus::FiniteGroup resolve_group(const CommonOpts& o) {
  if (!o.group_name.empty() && !o.group_file.empty())
    throw CLI::ValidationError("--group and --group-file are mutually exclusive");
  if (!o.group_name.empty()) return dotplus::catalog_group(o.group_name);
  if (!o.group_file.empty()) return dotplus::load_cayley(o.group_file);
  throw CLI::ValidationError("need --group or --group-file");
}

dotplus::SearchPlan resolve_plan(const CommonOpts& o, const dotplus::FiniteGroup& g) {
  dotplus::SearchPlan p;
  if (o.mode == "exhaustive")
    p.mode = dotplus::SearchPlan::Mode::exhaustive;
  else if (o.mode == "capped")
    p.mode = dotplus::SearchPlan::Mode::size_capped;
  else
    p.mode = dotplus::SearchPlan::Mode::sampled;
  p.max_a = o.max_a;
  p.max_b = o.max_b >= 0 ? o.max_b : o.max_a;
  p.sample_count = o.samples;
  p.seed = o.seed;
  p.jobs = o.jobs;
  if (o.prune == "inversion") {
    p.prune_inversion = true;
  } else if (o.prune == "both") {
    p.prune_inversion = p.prune_automorphism = true;
  } else if (o.prune == "auto") {
    p.prune_inversion = true;
    p.prune_automorphism = g.order() <= 12;
  }
  return p;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw dotplus::invalid_input("cannot write output file: " + out_path);
  f << text;
}

int status_to_exit(dotplus::Status s) {
  switch (s) {
    case dotplus::Status::PASS: return kExitPass;
    case dotplus::Status::FAIL: return kExitFail;
    case dotplus::Status::PARTIAL: return kExitPartial;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group sumset bound verifier"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string theorem, bound = "eh", aut_cache_path;
  int field_p = 0, field_alpha = 1;

  CLI::App* info = app.add_subcommand("group-info", "print structural invariants of a group");
  add_group_flags(info, o);
  add_output_flags(info, o);

  CLI::App* cat = app.add_subcommand("catalog", "list built-in group names");

  CLI::App* verify = app.add_subcommand("verify", "run a theorem verification");
  verify->add_option("theorem", theorem, "one of: cd thm1 thm2 thm3 bw hall field-lemma")
      ->required()
      ->check(CLI::IsMember({"cd", "thm1", "thm2", "thm3", "bw", "hall", "field-lemma"}));
  add_group_flags(verify, o);
  add_plan_flags(verify, o);
  add_output_flags(verify, o);
  verify->add_option("--aut-cache", aut_cache_path, "automorphism cache file (thm3/bw)");
  verify->add_option("--p", field_p, "field characteristic (field-lemma)");
  verify->add_option("--alpha", field_alpha, "field extension degree (field-lemma)");

  CLI::App* extremal = app.add_subcommand("extremal", "collect equality cases of a bound");
  extremal->add_option("--bound", bound, "one of: cd anr eh bw")
      ->check(CLI::IsMember({"cd", "anr", "eh", "bw"}));
  add_group_flags(extremal, o);
  add_plan_flags(extremal, o);
  add_output_flags(extremal, o, /*csv=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cat->parsed()) {
      for (const auto& n : dotplus::catalog_names()) std::cout << n << "\n";
      return kExitPass;
    }

    if (info->parsed()) {
      dotplus::FiniteGroup g = resolve_group(o);
      dotplus::GroupInfo gi = dotplus::group_info(g);
      if (o.format == "json") {
        nlohmann::json j;
        j["order"] = gi.order;
        j["least_prime"] = gi.least_prime;
        j["abelian"] = gi.abelian;
        j["nilpotent"] = gi.nilpotent;
        j["solvable"] = gi.solvable;
        j["center_size"] = gi.center_size;
        j["table_hash"] = gi.table_hash;
        emit(j.dump(2) + "\n", o.out);
      } else {
        std::ostringstream os;
        os << "order=" << gi.order << " p=" << gi.least_prime
           << " abelian=" << (gi.abelian ? "yes" : "no")
           << " nilpotent=" << (gi.nilpotent ? "yes" : "no")
           << " solvable=" << (gi.solvable ? "yes" : "no") << " |Z(G)|=" << gi.center_size
           << " table_hash=" << gi.table_hash << "\n";
        emit(os.str(), o.out);
      }
      return kExitPass;
    }

    if (verify->parsed()) {
      dotplus::VerificationReport rep;
      std::string group_tag;
      if (theorem == "field-lemma") {
        if (field_p < 2) throw CLI::ValidationError("field-lemma needs --p");
        dotplus::FiniteField f(field_p, field_alpha);
        int cap = o.max_a > 0 ? o.max_a : 3;
        rep = dotplus::verify_field_lemma(f, cap, 4'000'000, o.samples, o.seed);
        group_tag = "F" + std::to_string(f.size());
      } else {
        dotplus::FiniteGroup g = resolve_group(o);
        dotplus::SearchPlan plan = resolve_plan(o, g);
        group_tag = o.group_name.empty() ? o.group_file : o.group_name;
        std::vector<dotplus::Automorphism> cached_auts;
        const std::vector<dotplus::Automorphism>* auts = nullptr;
        if (!aut_cache_path.empty() && (theorem == "thm3" || theorem == "bw")) {
          dotplus::AutCache cache(aut_cache_path);
          cached_auts = cache.get_or_enumerate(g);
          auts = &cached_auts;
        }
        if (theorem == "cd")
          rep = dotplus::verify_cauchy_davenport(g, plan);
        else if (theorem == "thm1")
          rep = dotplus::verify_theorem1(g, plan);
        else if (theorem == "thm2")
          rep = dotplus::verify_theorem2(g, plan);
        else if (theorem == "thm3")
          rep = dotplus::verify_theorem3(g, plan, dotplus::kDefaultAutomorphismCap, auts);
        else if (theorem == "bw")
          rep = dotplus::verify_balister_wheeler(g, plan, dotplus::kDefaultAutomorphismCap, auts);
        else
          rep = dotplus::verify_hall(g, plan);
      }
      if (o.format == "json")
        emit(dotplus::report_to_canonical_string(rep, group_tag), o.out);
      else
        emit(dotplus::report_to_text(rep, group_tag), o.out);
      return status_to_exit(rep.status);
    }

    if (extremal->parsed()) {
      dotplus::FiniteGroup g = resolve_group(o);
      dotplus::SearchPlan plan = resolve_plan(o, g);
      auto kind = dotplus::bound_kind_from_name(bound);
      if (!kind) throw CLI::ValidationError("unknown bound: " + bound);
      dotplus::ExtremalScan scan = dotplus::extremal_scan(g, plan, *kind);
      if (o.format == "csv")
        emit(dotplus::extremal_to_csv(scan), o.out);
      else if (o.format == "json")
        emit(dotplus::extremal_to_json(scan).dump(2) + "\n", o.out);
      else {
        std::ostringstream os;
        os << "bound=" << scan.bound << " checked=" << scan.instances_checked
           << " equality_instances=" << scan.instances.size() << "\n";
        emit(os.str(), o.out);
      }
      return kExitPass;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dotplus::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dotplus::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
