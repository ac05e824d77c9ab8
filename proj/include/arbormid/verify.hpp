#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace arbormid {

// Outcome of one invariant suite.
struct SuiteResult {
  explicit SuiteResult(std::string suite_name = {}) : name(std::move(suite_name)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few counterexamples

  void fail(std::string what);
};

struct VerifyOptions {
  std::size_t n_max = 12;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

// Shape, pendant-exclusion, concavity and metric invariants over every free
// tree up to n_max.
SuiteResult verify_structure(const VerifyOptions& opt);
// Dynamic-programming counts against the enumeration oracle.
SuiteResult verify_counts(const VerifyOptions& opt);
// Closed forms against direct computation for 5 <= n <= 40.
SuiteResult verify_path_stars(const VerifyOptions& opt);
// Exhaustive extremal maxima against the bounds, 5 <= n <= n_max.
SuiteResult verify_extremal(const VerifyOptions& opt);
// Leaf and path move identities and core stability.
SuiteResult verify_perturbations(const VerifyOptions& opt);
// The 27-vertex betweenness counterexample and the 9-vertex disjoint-middles witness.
SuiteResult verify_examples(const VerifyOptions& opt);
// Generator counts and canonical code relabelling invariance.
SuiteResult verify_generation(const VerifyOptions& opt);

std::vector<SuiteResult> verify_all(const VerifyOptions& opt);

}  // namespace arbormid
