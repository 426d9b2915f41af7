#pragma once

#include <string>
#include <vector>

#include "nbspectra/graph.hpp"

namespace nbspectra {

struct CheckResult {
  enum class Status { pass, fail, skip, info };
  std::string name;
  Status status = Status::skip;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int passed = 0, failed = 0, skipped = 0, infos = 0;
  bool ok() const { return failed == 0; }
};

// Runs every structural and spectral check that applies to g.
//
// Checks whose statements need minimum degree >= 2 are skipped (with the
// reason) on other graphs; checks that degenerate when a connected component
// is a cycle are likewise skipped with a note.  Exact identities are checked
// over the rationals with no tolerance; numeric residual checks use tol,
// except for a few fixed eigenfunction thresholds documented inline.
// Conjecture outcomes appear with status "info" and never fail the report.
VerifyReport verify_graph(const SimpleGraph& g, double tol);

std::string check_status_name(CheckResult::Status s);
std::string verify_report_json(const SimpleGraph& g, double tol, const VerifyReport& r);

}  // namespace nbspectra
