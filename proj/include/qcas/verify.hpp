#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcas {

/// Bounds for the identity suite. Defaults are sized for an interactive run;
/// the acceptance harness passes larger grids.
struct VerifyOptions {
  int nmax = 4;
  int kmax = 6;
  int closed_form_nmax = 6;   // G_{n,0}, G_{n,1} closed forms
  int weight_bound = 2;       // eigenvalue grid: |Lambda_i| <= bound
  int eigen_nmax = 4;
  int eigen_kmax = 4;
  int schur_weight_max = 6;   // |lambda| cap for the tableau cross-check
  int schur_nmax = 4;
  int genfun_trunc = 6;
  int max_degree = 8;         // tableau-oracle weight bound override
  std::uint64_t seed = 0x9d2c5680u;
  int random_trials = 40;
  std::string inject_fault;   // test-only hook: corrupts the named check
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // first failing cell; empty when the check passes
};

/// Canonical list of identity checks, in reporting order.
std::vector<std::string> verify_check_names();

/// Runs a single named check.
CheckResult run_verify_check(const std::string& name, const VerifyOptions& opt);

/// Runs the whole suite on a worker pool of the given size. Results come
/// back in canonical order regardless of the job count.
std::vector<CheckResult> run_verify(const VerifyOptions& opt, int jobs);

}  // namespace qcas
