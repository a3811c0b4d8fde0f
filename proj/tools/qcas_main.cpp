#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qcas/serialize.hpp"
#include "qcas/verify.hpp"

namespace {

using namespace qcas;

template <typename Fn>
void parallel_for(int jobs, int count, Fn fn) {
  std::atomic<int> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      int i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs <= 1 || count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int spawn = std::min(jobs, count);
    pool.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + out_path);
  out << text;
}

void warn_large(int n, int k) {
  if (n > 5 || k > 8)
    std::cerr << "warning: n=" << n << " k=" << k
              << " is beyond the verified desk-scale grid; this may take a while\n";
}

struct RangeJob {
  int n = 1;
  int kmin = 0;
  int kmax = 0;
  bool single = false;
  std::string format = "text";
  std::string out;
  int jobs = 1;
};

// Shared driver for the g/hc/eigen subcommands: compute per-k cells on the
// worker pool, then join in index order so output is deterministic.
int run_range(const RangeJob& job, const std::string& label,
              const std::function<std::string(int)>& text_of,
              const std::function<Json(int)>& json_of) {
  const int count = job.kmax - job.kmin + 1;
  std::vector<std::string> texts(static_cast<size_t>(count));
  std::vector<Json> jsons(static_cast<size_t>(count));
  const bool json = job.format == "json";
  parallel_for(job.jobs, count, [&](int idx) {
    int k = job.kmin + idx;
    if (json)
      jsons[static_cast<size_t>(idx)] = json_of(k);
    else
      texts[static_cast<size_t>(idx)] = text_of(k);
  });
  std::ostringstream os;
  if (json) {
    if (job.single) {
      os << dump_json(jsons[0]);
    } else {
      Json results = Json::array();
      for (int idx = 0; idx < count; ++idx)
        results.push_back({{"k", job.kmin + idx}, {"value", jsons[static_cast<size_t>(idx)]}});
      os << dump_json(Json{{"n", job.n}, {"results", results}});
    }
  } else {
    for (int idx = 0; idx < count; ++idx) {
      if (!job.single) os << label << "[" << job.n << "," << (job.kmin + idx) << "] = ";
      os << texts[static_cast<size_t>(idx)] << "\n";
    }
  }
  emit(os.str(), job.out);
  return 0;
}

int cmd_verify(const VerifyOptions& opt, int jobs, const std::string& out_path) {
  std::vector<CheckResult> results = run_verify(opt, jobs);
  std::ostringstream os;
  os << "identity suite: nmax=" << opt.nmax << " kmax=" << opt.kmax
     << " weight-bound=" << opt.weight_bound << " seed=" << opt.seed << "\n";
  size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failures = 0;
  const CheckResult* first_fail = nullptr;
  for (const auto& r : results) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << r.name
       << (r.pass ? "PASS" : "FAIL");
    if (!r.pass) {
      os << "  " << r.witness;
      ++failures;
      if (!first_fail) first_fail = &r;
    }
    os << "\n";
  }
  if (failures == 0) {
    os << "all " << results.size() << " identity checks passed\n";
  } else {
    os << failures << " of " << results.size() << " identity checks failed; first: "
       << first_fail->name << " (" << first_fail->witness << ")\n";
  }
  emit(os.str(), out_path);
  return failures == 0 ? 0 : 1;
}

int cmd_bench(int nmax, int kmax, int jobs, const std::string& out_path) {
  struct Cell {
    int n, k;
    double direct_ms = 0, recursive_ms = 0, character_ms = -1;
  };
  std::vector<Cell> cells;
  for (int n = 1; n <= nmax; ++n)
    for (int k = 0; k <= kmax; ++k) cells.push_back({n, k});
  auto ms_since = [](std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };
  parallel_for(jobs, static_cast<int>(cells.size()), [&](int idx) {
    Cell& c = cells[static_cast<size_t>(idx)];
    auto t0 = std::chrono::steady_clock::now();
    MPoly d = g_direct(c.n, c.k);
    c.direct_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    GCache fresh;  // a cold cache, so each cell reports its full cost
    MPoly r = g_recursive(c.n, c.k, fresh);
    c.recursive_ms = ms_since(t0);
    if (c.k >= 1) {
      t0 = std::chrono::steady_clock::now();
      MPoly ch = g_character(c.n, c.k);
      c.character_ms = ms_since(t0);
      if (ch != d) throw CancellationFailure("bench cross-check failed");
    }
    if (r != d) throw CancellationFailure("bench cross-check failed");
  });
  std::ostringstream os;
  os << std::setw(4) << "n" << std::setw(5) << "k" << std::setw(14) << "direct-ms"
     << std::setw(14) << "recursive-ms" << std::setw(14) << "character-ms" << "\n";
  os << std::fixed << std::setprecision(3);
  for (const auto& c : cells) {
    os << std::setw(4) << c.n << std::setw(5) << c.k << std::setw(14) << c.direct_ms
       << std::setw(14) << c.recursive_ms;
    if (c.character_ms < 0)
      os << std::setw(14) << "-";
    else
      os << std::setw(14) << c.character_ms;
    os << "\n";
  }
  emit(os.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Casimir images, eigenvalues and center generation for the quantum linear group"};
  app.require_subcommand(1);

  // g ------------------------------------------------------------------
  auto* g_cmd = app.add_subcommand("g", "compute G(n,k), the k-th Casimir building block");
  int g_n = 2, g_k = -1, g_kmax = -1, g_jobs = 1;
  std::string g_format = "text", g_out;
  g_cmd->add_option("--n", g_n, "number of variables")->required()->check(CLI::PositiveNumber);
  g_cmd->add_option("--k", g_k, "degree");
  g_cmd->add_option("--kmax", g_kmax, "compute all degrees 0..kmax");
  g_cmd->add_option("--format", g_format)->check(CLI::IsMember({"text", "json"}));
  g_cmd->add_option("--out", g_out, "write output to a file");
  g_cmd->add_option("--jobs", g_jobs)->check(CLI::PositiveNumber);

  // hc -----------------------------------------------------------------
  auto* hc_cmd = app.add_subcommand("hc", "compute the Harish-Chandra image C0(n,k)");
  int hc_n = 2, hc_k = -1, hc_kmax = -1, hc_jobs = 1;
  std::string hc_format = "text", hc_out;
  hc_cmd->add_option("--n", hc_n)->required()->check(CLI::PositiveNumber);
  hc_cmd->add_option("--k", hc_k, "degree");
  hc_cmd->add_option("--kmax", hc_kmax, "compute all degrees 0..kmax");
  hc_cmd->add_option("--format", hc_format)->check(CLI::IsMember({"text", "json"}));
  hc_cmd->add_option("--out", hc_out);
  hc_cmd->add_option("--jobs", hc_jobs)->check(CLI::PositiveNumber);

  // eigen ---------------------------------------------------------------
  auto* ei_cmd = app.add_subcommand("eigen", "Casimir eigenvalue on a highest-weight module");
  int ei_n = 0, ei_k = -1, ei_kmax = -1, ei_jobs = 1;
  std::vector<int> ei_weight;
  std::string ei_format = "text", ei_out;
  ei_cmd->add_option("--n", ei_n, "rank (defaults to the weight length)");
  ei_cmd->add_option("--weight", ei_weight, "dominant weight, e.g. 2,1,0")
      ->required()
      ->delimiter(',');
  ei_cmd->add_option("--k", ei_k);
  ei_cmd->add_option("--kmax", ei_kmax);
  ei_cmd->add_option("--format", ei_format)->check(CLI::IsMember({"text", "json"}));
  ei_cmd->add_option("--out", ei_out);
  ei_cmd->add_option("--jobs", ei_jobs)->check(CLI::PositiveNumber);

  // schur ---------------------------------------------------------------
  auto* sc_cmd = app.add_subcommand("schur", "Schur polynomial of a partition");
  int sc_n = 1, sc_maxdeg = 8;
  std::vector<int> sc_lambda;
  std::string sc_format = "text", sc_out, sc_route = "bialternant";
  sc_cmd->add_option("--n", sc_n)->required()->check(CLI::PositiveNumber);
  sc_cmd->add_option("--lambda", sc_lambda, "partition, e.g. 3,1")->required()->delimiter(',');
  sc_cmd->add_option("--route", sc_route, "bialternant or tableaux")
      ->check(CLI::IsMember({"bialternant", "tableaux"}));
  sc_cmd->add_option("--max-degree", sc_maxdeg, "tableau enumeration bound");
  sc_cmd->add_option("--format", sc_format)->check(CLI::IsMember({"text", "json"}));
  sc_cmd->add_option("--out", sc_out);

  // express --------------------------------------------------------------
  auto* ex_cmd =
      app.add_subcommand("express", "express h_k (or e_k) in the quantum Casimir images");
  int ex_n = 2, ex_k = 1;
  std::string ex_basis = "h", ex_format = "text", ex_out;
  ex_cmd->add_option("--n", ex_n)->required()->check(CLI::PositiveNumber);
  ex_cmd->add_option("--k", ex_k)->required()->check(CLI::NonNegativeNumber);
  ex_cmd->add_option("--basis", ex_basis, "h (complete homogeneous) or e (elementary)")
      ->check(CLI::IsMember({"h", "e"}));
  ex_cmd->add_option("--format", ex_format)->check(CLI::IsMember({"text", "json"}));
  ex_cmd->add_option("--out", ex_out);

  // verify ----------------------------------------------------------------
  auto* ve_cmd = app.add_subcommand("verify", "run the identity suite for the given bounds");
  VerifyOptions vopt;
  int ve_jobs = 1;
  std::string ve_out;
  ve_cmd->add_option("--n", vopt.nmax, "maximum rank")->check(CLI::PositiveNumber);
  ve_cmd->add_option("--kmax", vopt.kmax)->check(CLI::NonNegativeNumber);
  ve_cmd->add_option("--weight-bound", vopt.weight_bound)->check(CLI::NonNegativeNumber);
  ve_cmd->add_option("--max-degree", vopt.max_degree)->check(CLI::PositiveNumber);
  ve_cmd->add_option("--seed", vopt.seed, "seed for the randomized property subsets");
  ve_cmd->add_option("--jobs", ve_jobs)->check(CLI::PositiveNumber);
  ve_cmd->add_option("--out", ve_out);
  ve_cmd->add_option("--inject-fault", vopt.inject_fault)->group("");  // test-only hook

  // bench -------------------------------------------------------------------
  auto* be_cmd = app.add_subcommand("bench", "wall time per (n,k) cell");
  int be_n = 4, be_kmax = 6, be_jobs = 1;
  std::string be_out;
  be_cmd->add_option("--n", be_n)->check(CLI::PositiveNumber);
  be_cmd->add_option("--kmax", be_kmax)->check(CLI::NonNegativeNumber);
  be_cmd->add_option("--jobs", be_jobs)->check(CLI::PositiveNumber);
  be_cmd->add_option("--out", be_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::ostringstream os;
    app.exit(e, os, os);
    std::cerr << os.str();
    return 2;
  }

  try {
    if (*g_cmd || *hc_cmd) {
      const bool is_g = static_cast<bool>(*g_cmd);
      RangeJob job;
      job.n = is_g ? g_n : hc_n;
      int k = is_g ? g_k : hc_k;
      int kmax = is_g ? g_kmax : hc_kmax;
      if ((k < 0) == (kmax < 0)) {
        std::cerr << "error: exactly one of --k or --kmax is required\n";
        return 2;
      }
      job.single = k >= 0;
      job.kmin = job.single ? k : 0;
      job.kmax = job.single ? k : kmax;
      job.format = is_g ? g_format : hc_format;
      job.out = is_g ? g_out : hc_out;
      job.jobs = is_g ? g_jobs : hc_jobs;
      warn_large(job.n, job.kmax);
      if (is_g)
        return run_range(
            job, "G", [&](int kk) { return g_recursive(job.n, kk).str(); },
            [&](int kk) { return to_json(g_recursive(job.n, kk)); });
      return run_range(
          job, "C0", [&](int kk) { return hc_image(job.n, kk).str(); },
          [&](int kk) { return to_json(hc_image(job.n, kk)); });
    }

    if (*ei_cmd) {
      if (ei_n != 0 && ei_n != static_cast<int>(ei_weight.size())) {
        std::cerr << "error: --n disagrees with the weight length\n";
        return 2;
      }
      std::unique_ptr<Weight> w;
      try {
        w = std::make_unique<Weight>(ei_weight);
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      if ((ei_k < 0) == (ei_kmax < 0)) {
        std::cerr << "error: exactly one of --k or --kmax is required\n";
        return 2;
      }
      RangeJob job;
      job.n = w->n();
      job.single = ei_k >= 0;
      job.kmin = job.single ? ei_k : 0;
      job.kmax = job.single ? ei_k : ei_kmax;
      job.format = ei_format;
      job.out = ei_out;
      job.jobs = ei_jobs;
      warn_large(job.n, job.kmax);
      return run_range(
          job, "chi",
          [&](int kk) {
            QField direct = eigenvalue_direct(*w, kk);
            if (direct != eigenvalue_via_hc(*w, kk))
              throw Error("eigenvalue routes disagree at k=" + std::to_string(kk));
            return direct.str();
          },
          [&](int kk) { return to_json(eigenvalue_direct(*w, kk)); });
    }

    if (*sc_cmd) {
      Partition lambda(sc_lambda);
      MPoly s = sc_route == "tableaux"
                    ? schur_tableaux_oracle(lambda, sc_n, TableauxBounds{sc_maxdeg, sc_n})
                    : schur_bialternant(lambda, sc_n);
      emit(sc_format == "json" ? dump_json(to_json(s)) : s.str() + "\n", sc_out);
      return 0;
    }

    if (*ex_cmd) {
      MPoly target =
          ex_basis == "h" ? complete_homogeneous(ex_k, ex_n) : elementary(ex_k, ex_n);
      CasimirExpression ex = express_in_casimirs(target);
      if (ex.reconstruct() != target) throw SolveFailure("expression failed to round-trip");
      emit(ex_format == "json" ? dump_json(to_json(ex)) : ex.str() + "\n", ex_out);
      return 0;
    }

    if (*ve_cmd) return cmd_verify(vopt, ve_jobs, ve_out);
    if (*be_cmd) return cmd_bench(be_n, be_kmax, be_jobs, be_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
