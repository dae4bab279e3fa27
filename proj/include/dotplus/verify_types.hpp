#pragma once

// Search plans and verification reports shared by the harness, the field
// module, and the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dotplus {

struct SearchPlan {
  enum class Mode { exhaustive, size_capped, sampled };
  Mode mode = Mode::exhaustive;
  int max_a = -1;  // -1: no cap
  int max_b = -1;
  long long sample_count = 0;
  std::uint64_t seed = 0;
  bool prune_inversion = false;
  bool prune_automorphism = false;
  int jobs = 1;
};

inline const char* mode_name(SearchPlan::Mode m) {
  switch (m) {
    case SearchPlan::Mode::exhaustive: return "exhaustive";
    case SearchPlan::Mode::size_capped: return "capped";
    case SearchPlan::Mode::sampled: return "sampled";
  }
  return "?";
}

/// One bound or structure failure, with enough payload to replay it.
struct Violation {
  std::vector<int> a;
  std::optional<std::vector<int>> b;
  std::optional<std::vector<int>> sigma_perm;
  std::optional<int> gamma;  // field-lemma scans
  long long lhs = 0;
  long long rhs = 0;
  std::string detail;
};

enum class Status { PASS, FAIL, PARTIAL };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::PARTIAL: return "PARTIAL";
  }
  return "?";
}

struct VerificationReport {
  std::string theorem;
  SearchPlan plan;
  unsigned long long instances_checked = 0;
  unsigned long long equality_cases = 0;
  unsigned long long diagonal_checked = 0;  // A == B pairs routed to the diagonal bound
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  Status status = Status::PASS;
  double wall_seconds = 0.0;  // informational; excluded from canonical serialization

  void finish() {
    if (status != Status::PARTIAL) status = violations.empty() ? Status::PASS : Status::FAIL;
  }

  /// Associative merge of chunked runs.
  void absorb(const VerificationReport& o) {
    instances_checked += o.instances_checked;
    equality_cases += o.equality_cases;
    diagonal_checked += o.diagonal_checked;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    if (o.status == Status::PARTIAL) status = Status::PARTIAL;
    wall_seconds += o.wall_seconds;
  }
};

}  // namespace dotplus
