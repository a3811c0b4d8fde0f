// Acceptance harness: runs every acceptance criterion at its stated bounds
// and budget, printing one pass/fail line per criterion. Exits nonzero if
// any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcas/verify.hpp"

namespace {

using qcas::CheckResult;
using qcas::VerifyOptions;

struct Criterion {
  std::string description;
  double budget_seconds;  // <= 0 means no budget
  std::function<CheckResult()> body;
};

std::string run_cli_capture(const std::string& args, int& code) {
  std::string cmd = std::string(QCAS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

CheckResult named_check(const std::string& name, const VerifyOptions& opt) {
  return qcas::run_verify_check(name, opt);
}

CheckResult all_of(std::initializer_list<CheckResult> results) {
  for (const auto& r : results)
    if (!r.pass) return r;
  return CheckResult{"", true, ""};
}

CheckResult determinism_criterion() {
  int c1 = 0, c2 = 0, c3 = 0;
  std::string first = run_cli_capture("verify --n 4 --kmax 6 --jobs 1", c1);
  std::string second = run_cli_capture("verify --n 4 --kmax 6 --jobs 1", c2);
  std::string third = run_cli_capture("verify --n 4 --kmax 6 --jobs 8", c3);
  if (c1 != 0 || c2 != 0 || c3 != 0)
    return {"determinism", false,
            "verify exited " + std::to_string(c1) + "/" + std::to_string(c2) + "/" +
                std::to_string(c3)};
  if (first != second) return {"determinism", false, "output differs between identical runs"};
  if (first != third) return {"determinism", false, "output differs between --jobs 1 and --jobs 8"};
  if (first.empty()) return {"determinism", false, "verify produced no output"};
  return {"determinism", true, ""};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  {
    VerifyOptions opt;
    opt.closed_form_nmax = 6;
    criteria.push_back({"closed forms G(n,0) and G(n,1), n = 2..6", 5.0,
                        [opt] { return named_check("closed-form-g", opt); }});
  }
  {
    VerifyOptions opt;
    opt.nmax = 5;
    opt.kmax = 10;  // the check caps k at 2n per rank
    criteria.push_back({"polynomiality of G(n,k), n <= 5, k <= 2n", 60.0,
                        [opt] { return named_check("polynomiality", opt); }});
  }
  {
    VerifyOptions opt;
    opt.nmax = 5;
    opt.kmax = 8;
    criteria.push_back({"triple-path G equality plus two-term recursion, n <= 5, k <= 8", 60.0,
                        [opt] {
                          return all_of({named_check("triple-path-g", opt),
                                         named_check("two-term-recursion", opt)});
                        }});
  }
  {
    VerifyOptions opt;
    opt.nmax = 5;
    opt.genfun_trunc = 6;
    criteria.push_back({"generating-function identity through t^6, n = 2..5", 30.0,
                        [opt] { return named_check("generating-function", opt); }});
  }
  {
    VerifyOptions opt;
    opt.nmax = 4;
    opt.kmax = 6;
    criteria.push_back({"hook decomposition of G(n,k), n <= 4, k <= 6", 0.0,
                        [opt] { return named_check("hook-decomposition", opt); }});
  }
  {
    VerifyOptions opt;
    opt.eigen_nmax = 4;
    opt.eigen_kmax = 4;
    opt.weight_bound = 3;
    criteria.push_back({"eigenvalue coherence across three routes, |weight| <= 3, n <= 4, k <= 4",
                        120.0, [opt] { return named_check("eigenvalue-coherence", opt); }});
  }
  {
    VerifyOptions opt;
    opt.eigen_nmax = 4;
    opt.weight_bound = 3;
    criteria.push_back({"classical limit of the first Casimir equals the weight sum", 0.0,
                        [opt] { return named_check("classical-limit", opt); }});
  }
  {
    VerifyOptions opt;
    opt.nmax = 4;
    criteria.push_back({"center generation: h_k expression round-trips and the inverse clears",
                        60.0, [opt] {
                          return all_of({named_check("h-generation", opt),
                                         named_check("center-inverse", opt)});
                        }});
  }
  {
    VerifyOptions opt;
    opt.schur_nmax = 4;
    opt.schur_weight_max = 6;
    criteria.push_back({"Schur bialternant equals tableau enumeration, |lambda| <= 6, n <= 4",
                        30.0, [opt] { return named_check("schur-oracle", opt); }});
  }
  criteria.push_back({"CLI verify output is byte-identical across runs and job counts", 0.0,
                      determinism_criterion});

  int failures = 0;
  std::cout << std::fixed << std::setprecision(2);
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    CheckResult result = c.body();
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = c.budget_seconds <= 0 || sec <= c.budget_seconds;
    bool pass = result.pass && in_budget;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << c.description << "  ("
              << sec << "s";
    if (c.budget_seconds > 0) std::cout << ", budget " << c.budget_seconds << "s";
    std::cout << ")";
    if (!result.pass) std::cout << "  [" << result.name << ": " << result.witness << "]";
    if (result.pass && !in_budget) std::cout << "  [over budget]";
    std::cout << "\n";
    if (!pass) ++failures;
  }
  std::cout << (criteria.size() - static_cast<size_t>(failures)) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
