// greenfn: closed-form Green's functions on cycles, tori, and Cartesian
// products, plus hitting-time grids, verification suites, and a benchmark
// of the representative-row evaluation path.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greenfn/greenfn.hpp"

namespace {

volatile double bench_sink = 0.0;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void check_source(const std::vector<int>& source, const std::vector<int>& dims) {
  if (source.size() != dims.size())
    throw std::invalid_argument("--source needs one coordinate per dimension");
  for (std::size_t i = 0; i < source.size(); ++i)
    if (source[i] < 0 || source[i] >= dims[i])
      throw std::invalid_argument("--source coordinate out of range");
}

void print_report(const greenfn::RunReport& r) {
  for (const auto& c : r.checks)
    std::printf("  [%s] %s: residual %.3g (tolerance %.3g)\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                c.tolerance);
  std::printf("[suite %s] %d/%d checks passed, max residual %.3g, %.2f s\n",
              r.suite.c_str(), r.passed, r.attempted, r.max_residual,
              r.seconds);
}

greenfn::BenchRecord bench_once(const greenfn::TorusSpec& spec,
                                const std::string& mode, int threads) {
  greenfn::BenchRecord rec;
  rec.n = spec.vertex_count();
  rec.t = spec.order();
  rec.mode = mode;
  auto t0 = std::chrono::steady_clock::now();
  double sum = 0.0;
  if (mode == "row") {
    greenfn::TorusPlan plan(spec);
    greenfn::TorusPlan::Row row = plan.representative_row(threads);
    rec.entries_computed = static_cast<long long>(row.values.size());
    for (double v : row.values) sum += v;
  } else {  // full-rep: same entry set, each by the full eigenmode sum
    std::vector<int> reps(spec.order());
    for (int s = 0; s < spec.order(); ++s) reps[s] = spec.dims[s] / 2 + 1;
    std::vector<std::vector<int>> disps;
    greenfn::for_each_index(
        reps, [&](const std::vector<int>& d) { disps.push_back(d); });
    std::vector<double> values(disps.size());
    greenfn::parallel_for(static_cast<int>(disps.size()), threads, [&](int i) {
      values[i] = greenfn::t_torus_green_fourier(spec, disps[i]);
    });
    rec.entries_computed = static_cast<long long>(disps.size());
    for (double v : values) sum += v;
  }
  rec.nanos_total = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  bench_sink = bench_sink + sum;
  return rec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "discrete Green's functions of cycles, tori, and Cartesian products"};
  app.require_subcommand(1);
  int exit_status = 0;

  int m = 0;
  double alpha = 1.0;
  std::vector<int> dims;
  std::vector<int> source;
  std::string out;
  int digits = 15;
  int threads = 1;

  CLI::App* green =
      app.add_subcommand("green", "emit a Green's function table as CSV");
  green->require_subcommand(1);

  CLI::App* gcycle =
      green->add_subcommand("cycle", "cycle C_m; rows a,value over distances");
  gcycle->add_option("--m", m, "cycle size")->required();
  gcycle->add_option("--source", source, "source vertex")->delimiter(',');
  gcycle->add_option("--out", out, "output path (default stdout)");
  gcycle->add_option("--digits", digits, "significant digits")
      ->check(CLI::Range(1, 17));
  gcycle->callback([&] {
    if (m < 3) throw std::invalid_argument("--m must be at least 3");
    if (!source.empty()) check_source(source, {m});
    std::ofstream f;
    greenfn::write_cycle_csv(open_out(f, out), m, digits);
  });

  CLI::App* ggalpha = green->add_subcommand(
      "galpha", "shifted cycle form at --alpha; rows a,value");
  ggalpha->add_option("--m", m, "cycle size")->required();
  ggalpha->add_option("--alpha", alpha, "positive spectral shift")->required();
  ggalpha->add_option("--source", source, "source vertex")->delimiter(',');
  ggalpha->add_option("--out", out, "output path (default stdout)");
  ggalpha->add_option("--digits", digits, "significant digits")
      ->check(CLI::Range(1, 17));
  ggalpha->callback([&] {
    if (m < 3) throw std::invalid_argument("--m must be at least 3");
    if (alpha <= 0.0) throw std::invalid_argument("--alpha must be positive");
    if (!source.empty()) check_source(source, {m});
    std::ofstream f;
    greenfn::write_galpha_csv(open_out(f, out), m, alpha, digits);
  });

  CLI::App* gtorus = green->add_subcommand(
      "torus", "2-torus C_m x C_n; rows dx,dy,value over displacements");
  gtorus->add_option("--dims", dims, "two cycle sizes, comma separated")
      ->required()
      ->delimiter(',');
  gtorus->add_option("--source", source, "source coordinates")->delimiter(',');
  gtorus->add_option("--out", out, "output path (default stdout)");
  gtorus->add_option("--digits", digits, "significant digits")
      ->check(CLI::Range(1, 17));
  gtorus->callback([&] {
    if (dims.size() != 2)
      throw std::invalid_argument("torus needs exactly two dimensions");
    greenfn::TorusSpec spec(dims);
    if (!source.empty()) check_source(source, dims);
    std::ofstream f;
    greenfn::write_torus_csv(open_out(f, out), dims[0], dims[1], digits);
  });

  CLI::App* gttorus = green->add_subcommand(
      "ttorus", "t-torus; rows d1,...,dt,value over displacements");
  gttorus->add_option("--dims", dims, "cycle sizes, comma separated")
      ->required()
      ->delimiter(',');
  gttorus->add_option("--source", source, "source coordinates")->delimiter(',');
  gttorus->add_option("--out", out, "output path (default stdout)");
  gttorus->add_option("--digits", digits, "significant digits")
      ->check(CLI::Range(1, 17));
  gttorus->add_option("--threads", threads, "row evaluation streams")
      ->check(CLI::Range(1, 256));
  gttorus->callback([&] {
    greenfn::TorusSpec spec(dims);
    if (!source.empty()) check_source(source, dims);
    std::ofstream f;
    greenfn::write_ttorus_csv(open_out(f, out), spec, digits, threads);
  });

  CLI::App* hitting = app.add_subcommand(
      "hitting", "expected hitting times from --source over a 2-torus grid");
  hitting->add_option("--dims", dims, "two cycle sizes, comma separated")
      ->required()
      ->delimiter(',');
  hitting->add_option("--source", source, "source coordinates, default 0,0")
      ->delimiter(',');
  hitting->add_option("--out", out, "output path (default stdout)");
  hitting->add_option("--digits", digits, "significant digits")
      ->check(CLI::Range(1, 17));
  hitting->callback([&] {
    if (dims.size() != 2)
      throw std::invalid_argument("hitting grids need exactly two dimensions");
    greenfn::TorusSpec spec(dims);
    if (source.empty()) source = {0, 0};
    check_source(source, dims);
    greenfn::HittingTable table = greenfn::hitting_grid(spec, source);
    std::ofstream f;
    greenfn::write_hitting_csv(open_out(f, out), table, digits);
  });

  std::string suite = "all";
  int max_size = 0;
  double tol = 0.0;
  CLI::App* verify =
      app.add_subcommand("verify", "run verification suites against oracles");
  verify->add_option("--suite", suite, "which suite")
      ->check(CLI::IsMember({"all", "cycle", "galpha", "torus", "ttorus",
                             "product", "walk", "identities", "relations"}));
  verify->add_option("--max-size", max_size,
                     "largest instance (cycle, galpha, torus suites)");
  verify->add_option("--tol", tol, "override the main tolerance");
  verify->callback([&] {
    std::vector<greenfn::RunReport> reports;
    if (suite == "all") {
      reports = greenfn::run_all_suites();
    } else if (suite == "cycle") {
      reports.push_back(greenfn::run_cycle_suite(max_size > 0 ? max_size : 50,
                                                 tol > 0 ? tol : 1e-9));
    } else if (suite == "galpha") {
      reports.push_back(greenfn::run_galpha_suite(max_size > 0 ? max_size : 20,
                                                  tol > 0 ? tol : 1e-9));
    } else if (suite == "torus") {
      reports.push_back(greenfn::run_torus_suite(max_size > 0 ? max_size : 10,
                                                 tol > 0 ? tol : 1e-8));
    } else if (suite == "ttorus") {
      reports.push_back(greenfn::run_ttorus_suite(tol > 0 ? tol : 1e-8));
    } else if (suite == "product") {
      reports.push_back(greenfn::run_product_suite(tol > 0 ? tol : 1e-9));
    } else if (suite == "walk") {
      reports.push_back(greenfn::run_walk_suite(tol > 0 ? tol : 1e-7));
    } else if (suite == "identities") {
      reports.push_back(greenfn::run_identities_suite(tol > 0 ? tol : 1e-10));
    } else if (suite == "relations") {
      reports.push_back(greenfn::run_relations_suite(tol > 0 ? tol : 1e-9));
    }
    bool all_ok = true;
    for (const greenfn::RunReport& r : reports) {
      print_report(r);
      all_ok = all_ok && r.ok();
    }
    std::printf("verification %s\n", all_ok ? "passed" : "FAILED");
    exit_status = all_ok ? 0 : 1;
  });

  std::string mode = "row";
  int repeat = 3;
  CLI::App* bench = app.add_subcommand(
      "bench", "time the representative-row path; JSON-lines records");
  bench->add_option("--dims", dims, "cycle sizes, comma separated")
      ->required()
      ->delimiter(',');
  bench->add_option("--mode", mode,
                    "row (closed form) or full-rep (eigenmode sum)")
      ->check(CLI::IsMember({"row", "full-rep"}));
  bench->add_option("--repeat", repeat, "number of timed repetitions")
      ->check(CLI::Range(1, 1000));
  bench->add_option("--threads", threads, "row evaluation streams")
      ->check(CLI::Range(1, 256));
  bench->add_option("--out", out, "output path (default stdout)");
  bench->callback([&] {
    greenfn::TorusSpec spec(dims);
    std::ofstream f;
    std::ostream& os = open_out(f, out);
    for (int i = 0; i < repeat; ++i)
      greenfn::write_bench_record(os, bench_once(spec, mode, threads));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return exit_status;
}
