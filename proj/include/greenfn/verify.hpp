#pragma once

// Verification suites behind the `verify` command and the acceptance run.
// Every suite pits a closed form against something computed independently:
// dense spectral pseudo-inverses, dense Dirichlet inversions, first-step
// linear systems, or both sides of a summation identity.

#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "greenfn/closed_forms.hpp"
#include "greenfn/graph.hpp"
#include "greenfn/matrix.hpp"
#include "greenfn/products.hpp"
#include "greenfn/random_walk.hpp"
#include "greenfn/spectral.hpp"

namespace greenfn {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct RunReport {
  std::string suite;
  int attempted = 0;
  int passed = 0;
  double max_residual = 0.0;
  double seconds = 0.0;
  std::vector<CheckResult> checks;

  bool ok() const { return attempted > 0 && passed == attempted; }

  void add(std::string name, double residual, double tol) {
    bool pass = residual <= tol;
    checks.push_back(CheckResult{std::move(name), residual, tol, pass});
    ++attempted;
    if (pass) ++passed;
    max_residual = std::max(max_residual, residual);
  }
};

namespace detail {

class SuiteTimer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline Eigensystem dense_eigensystem(const DirichletSubset& s) {
  return eigensystem(laplacian(s, LaplacianKind::Normalized));
}

inline GreenTable cycle_pseudo_oracle(int m) {
  return greens_pseudo(dense_eigensystem(full_subset(build_cycle(m))));
}

inline GreenTable torus_pseudo_oracle(const TorusSpec& spec) {
  return greens_pseudo(dense_eigensystem(full_subset(torus_graph(spec))));
}

inline int cyclic_diff(int y, int x, int m) { return ((y - x) % m + m) % m; }

// max |L G - (I - 11^T/n)| and max row sum, the two defining residuals of a
// boundaryless table.
inline double pseudo_relation_residual(const GreenTable& g) {
  LaplacianMatrix lap = laplacian(g.subset, LaplacianKind::Normalized);
  int n = g.entries.rows();
  Matrix want = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) want(i, j) -= 1.0 / n;
  double res = max_abs_diff(lap.entries * g.entries, want);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += g.entries(i, j);
    res = std::max(res, std::abs(s));
  }
  return res;
}

template <typename Fn>
inline void expect_invalid(RunReport& r, const std::string& name, Fn&& fn) {
  bool threw = false;
  try {
    fn();
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  r.add(name, threw ? 0.0 : 1.0, 0.5);
}

}  // namespace detail

// Cycle polynomial vs the dense pseudo-inverse, every distance.
inline RunReport run_cycle_suite(int max_m = 50, double tol = 1e-9) {
  RunReport r;
  r.suite = "cycle";
  detail::SuiteTimer timer;
  for (int m = 3; m <= max_m; ++m) {
    GreenTable oracle = detail::cycle_pseudo_oracle(m);
    double res = 0.0;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        res = std::max(res, std::abs(oracle.entries(x, y) -
                                     cycle_green(m, detail::cyclic_diff(y, x, m))));
    r.add("C_" + std::to_string(m) + " closed form vs dense pseudo-inverse",
          res, tol);
  }
  r.seconds = timer.seconds();
  return r;
}

// Shifted cycle closed form vs the eigenmode sum over the exact Fourier
// spectrum, six shifts per size, odd sizes giving half-integer orders.
inline RunReport run_galpha_suite(int max_m = 20, double tol = 1e-9) {
  RunReport r;
  r.suite = "galpha";
  detail::SuiteTimer timer;
  const double alphas[] = {0.1, 0.5, 1.0, 1.5, 2.0, 5.0};
  for (int m = 3; m <= max_m; ++m) {
    Eigensystem es = cycle_eigensystem(m);
    double res = 0.0;
    for (double alpha : alphas) {
      GreenTable oracle = greens_alpha_oracle(es, alpha);
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
          res = std::max(
              res, std::abs(oracle.entries(x, y) -
                            cycle_green_alpha(m, alpha,
                                              detail::cyclic_diff(y, x, m))));
    }
    r.add("C_" + std::to_string(m) + " shifted forms vs eigenmode sums", res,
          tol);
  }
  r.seconds = timer.seconds();
  return r;
}

// 2-torus single-spectrum form vs the dense pseudo-inverse, every vertex pair.
inline RunReport run_torus_suite(int max_side = 10, double tol = 1e-8) {
  RunReport r;
  r.suite = "torus";
  detail::SuiteTimer timer;
  for (int m = 3; m <= max_side; ++m)
    for (int n = 3; n <= max_side; ++n) {
      TorusSpec spec({m, n});
      GreenTable oracle = detail::torus_pseudo_oracle(spec);
      int total = m * n;
      double res = 0.0;
      for (int u = 0; u < total; ++u) {
        int ux = u / n, uy = u % n;
        for (int v = 0; v < total; ++v) {
          int vx = v / n, vy = v % n;
          double closed = torus_green(m, n, detail::cyclic_diff(vx, ux, m),
                                      detail::cyclic_diff(vy, uy, n));
          res = std::max(res, std::abs(oracle.entries(u, v) - closed));
        }
      }
      r.add("C_" + std::to_string(m) + " x C_" + std::to_string(n) +
                " vs dense pseudo-inverse",
            res, tol);
    }
  r.seconds = timer.seconds();
  return r;
}

// Higher-order tori: the recursive plan vs the dense pseudo-inverse, the
// unrolled 3-torus form vs the plan, row evaluation vs pointwise evaluation,
// and invariance under relabeling the factors.
inline RunReport run_ttorus_suite(double tol = 1e-8) {
  RunReport r;
  r.suite = "ttorus";
  detail::SuiteTimer timer;
  const std::vector<std::vector<int>> specs = {
      {3, 3, 3}, {3, 4, 5}, {4, 4, 4}, {3, 3, 3, 3}};
  for (const auto& dims : specs) {
    TorusSpec spec(dims);
    GreenTable oracle = detail::torus_pseudo_oracle(spec);
    TorusPlan plan(spec);
    int total = static_cast<int>(spec.vertex_count());
    int t = spec.order();
    double res = 0.0;
    std::vector<int> disp(t);
    for (int u = 0; u < total; ++u) {
      std::vector<int> cu = index_to_coords(dims, u);
      for (int v = 0; v < total; ++v) {
        std::vector<int> cv = index_to_coords(dims, v);
        for (int s = 0; s < t; ++s)
          disp[s] = detail::cyclic_diff(cv[s], cu[s], dims[s]);
        res = std::max(res, std::abs(oracle.entries(u, v) - plan.eval(disp)));
      }
    }
    std::string name = "torus";
    for (int d : dims) name += " " + std::to_string(d);
    r.add(name + " vs dense pseudo-inverse", res, tol);
  }
  {
    double res = 0.0;
    for (int m = 3; m <= 5; ++m) {
      TorusPlan plan(TorusSpec({m, m, m}));
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int c = 0; c < m; ++c)
            res = std::max(res, std::abs(torus3_green(m, {a, b, c}) -
                                         plan.eval({a, b, c})));
    }
    r.add("unrolled 3-torus form vs the plan, m = 3..5", res, 1e-10);
  }
  {
    double res = 0.0;
    for (const auto& dims : {std::vector<int>{3, 4, 5}, {4, 4, 4}}) {
      TorusPlan plan((TorusSpec(dims)));
      TorusPlan::Row row = plan.representative_row();
      for (std::size_t i = 0; i < row.values.size(); ++i)
        res = std::max(res,
                       std::abs(row.values[i] - plan.eval(row.displacements[i])));
    }
    r.add("representative row vs pointwise evaluation", res, 1e-12);
  }
  {
    TorusPlan a((TorusSpec({3, 4, 5})));
    TorusPlan b((TorusSpec({5, 4, 3})));
    double res = 0.0;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 4; ++y)
        for (int z = 0; z < 5; ++z)
          res = std::max(res,
                         std::abs(a.eval({x, y, z}) - b.eval({z, y, x})));
    r.add("factor relabeling invariance 3x4x5", res, 1e-12);
  }
  r.seconds = timer.seconds();
  return r;
}

// Product assembly vs dense Dirichlet inversion (bounded cases) and the
// dense pseudo-inverse (boundaryless cases), with the defining relation,
// rotation independence, and the misuse guards.
inline RunReport run_product_suite(double tol = 1e-9) {
  RunReport r;
  r.suite = "product";
  detail::SuiteTimer timer;

  {
    GAlphaProvider gp =
        oracle_galpha_provider(dirichlet_subset(build_cycle(3), {0, 1}));
    FactorSpectrum fs{detail::dense_eigensystem(full_subset(build_cycle(3)))};
    GreenTable got = product_green_boundary_equal(gp, fs);
    GreenTable want =
        greens_dirichlet(laplacian(got.subset, LaplacianKind::Normalized));
    double res = max_abs_diff(got.entries, want.entries);
    res = std::max(res, std::abs(got.entries(0, 0) - 13.0 / 9.0));
    res = std::max(res, max_abs_diff(laplacian(got.subset,
                                               LaplacianKind::Normalized)
                                             .entries *
                                         got.entries,
                                     Matrix::identity(got.entries.rows())));
    r.add("edge of C_3 crossed with C_3, diagonal 13/9", res, tol);
  }
  {
    GAlphaProvider gp =
        oracle_galpha_provider(dirichlet_subset(build_cycle(4), {0}));
    FactorSpectrum fs{detail::dense_eigensystem(full_subset(build_cycle(4)))};
    GreenTable got = product_green_boundary_equal(gp, fs);
    GreenTable want =
        greens_dirichlet(laplacian(got.subset, LaplacianKind::Normalized));
    double res = max_abs_diff(got.entries, want.entries);
    res = std::max(res, std::abs(got.entries(0, 0) - 7.0 / 6.0));
    r.add("vertex of C_4 crossed with C_4, diagonal 7/6", res, tol);
  }
  {
    GAlphaProvider gp =
        oracle_galpha_provider(dirichlet_subset(build_cycle(4), {0, 1}));
    FactorSpectrum fs{detail::dense_eigensystem(
        dirichlet_subset(build_cycle(4), {0, 1}))};
    GreenTable got = product_green_boundary_equal(gp, fs);
    GreenTable want =
        greens_dirichlet(laplacian(got.subset, LaplacianKind::Normalized));
    r.add("both factors bounded, edge of C_4 squared",
          max_abs_diff(got.entries, want.entries), tol);
  }
  {
    GAlphaProvider gp =
        oracle_galpha_provider(dirichlet_subset(build_cycle(4), {0, 1}));
    FactorSpectrum fs{
        detail::dense_eigensystem(full_subset(torus_graph(TorusSpec({3, 3}))))};
    GreenTable got = product_green_boundary_general(gp, fs);
    GreenTable want =
        greens_dirichlet(laplacian(got.subset, LaplacianKind::Normalized));
    r.add("edge of C_4 (degree 2) crossed with 3x3 torus (degree 4)",
          max_abs_diff(got.entries, want.entries), tol);
  }
  {
    GAlphaProvider gp = cycle_galpha_provider(4);
    FactorSpectrum fs{detail::dense_eigensystem(full_subset(build_cycle(5)))};
    GreenTable got = product_green_noboundary_equal(gp, fs);
    GreenTable want = detail::torus_pseudo_oracle(TorusSpec({4, 5}));
    double res = max_abs_diff(got.entries, want.entries);
    res = std::max(res, detail::pseudo_relation_residual(got));
    r.add("C_4 x C_5 assembled vs dense pseudo-inverse", res, tol);
  }
  {
    GAlphaProvider gp = cycle_galpha_provider(3);
    FactorSpectrum fs{
        detail::dense_eigensystem(full_subset(torus_graph(TorusSpec({3, 3}))))};
    GreenTable got = product_green_noboundary_general(gp, fs);
    GreenTable want = detail::torus_pseudo_oracle(TorusSpec({3, 3, 3}));
    double res = max_abs_diff(got.entries, want.entries);
    res = std::max(res, std::abs(got.entries(0, 0) - 88.0 / 81.0));
    res = std::max(res, detail::pseudo_relation_residual(got));
    r.add("C_3 (degree 2) crossed with 3x3 torus (degree 4), diagonal 88/81",
          res, tol);
  }
  {
    std::mt19937 rng(20240901u);
    GAlphaProvider gp4 = cycle_galpha_provider(4);
    FactorSpectrum base{detail::dense_eigensystem(full_subset(build_cycle(4)))};
    FactorSpectrum mixed{rotate_degenerate_eigenspaces(base.es, rng)};
    double res = max_abs_diff(product_green_noboundary_equal(gp4, base).entries,
                              product_green_noboundary_equal(gp4, mixed).entries);
    GAlphaProvider gp3 = cycle_galpha_provider(3);
    FactorSpectrum tbase{
        detail::dense_eigensystem(full_subset(torus_graph(TorusSpec({3, 3}))))};
    FactorSpectrum tmixed{rotate_degenerate_eigenspaces(tbase.es, rng)};
    res = std::max(res,
                   max_abs_diff(product_green_noboundary_general(gp3, tbase).entries,
                                product_green_noboundary_general(gp3, tmixed).entries));
    r.add("independence of the eigenbasis inside repeated eigenspaces", res,
          tol);
  }
  {
    GAlphaProvider bounded =
        oracle_galpha_provider(dirichlet_subset(build_cycle(4), {0, 1}));
    GAlphaProvider free3 = cycle_galpha_provider(3);
    FactorSpectrum c3{detail::dense_eigensystem(full_subset(build_cycle(3)))};
    FactorSpectrum t33{
        detail::dense_eigensystem(full_subset(torus_graph(TorusSpec({3, 3}))))};
    FactorSpectrum bounded_fs{detail::dense_eigensystem(
        dirichlet_subset(build_cycle(4), {0, 1}))};
    detail::expect_invalid(r, "boundary form rejects a boundaryless provider",
                           [&] { product_green_boundary_equal(free3, c3); });
    detail::expect_invalid(r, "equal-degree boundary form rejects degree mismatch",
                           [&] { product_green_boundary_equal(bounded, t33); });
    detail::expect_invalid(r, "boundaryless form rejects a bounded provider",
                           [&] { product_green_noboundary_equal(bounded, c3); });
    detail::expect_invalid(
        r, "equal-degree boundaryless form rejects degree mismatch",
        [&] { product_green_noboundary_equal(free3, t33); });
    detail::expect_invalid(
        r, "boundaryless form rejects a bounded spectrum factor",
        [&] { product_green_noboundary_general(free3, bounded_fs); });
  }
  r.seconds = timer.seconds();
  return r;
}

// Hitting-time formula vs the first-step linear system, and the cycle law.
inline RunReport run_walk_suite(double tol = 1e-7) {
  RunReport r;
  r.suite = "walk";
  detail::SuiteTimer timer;
  for (int m = 3; m <= 12; ++m) {
    RegularGraph g = build_cycle(m);
    GreenTable green = detail::cycle_pseudo_oracle(m);
    double res = 0.0;
    for (int y = 0; y < m; ++y) {
      std::vector<double> col = hitting_oracle(g, y);
      for (int x = 0; x < m; ++x) {
        double q = hitting_time(g, green, x, y);
        res = std::max(res, std::abs(q - col[x]) / std::max(1.0, col[x]));
      }
    }
    r.add("C_" + std::to_string(m) + " formula vs first-step system", res, tol);
  }
  {
    double res = 0.0;
    for (int m = 3; m <= 50; ++m) {
      GreenTable table = cycle_green_table(m);
      for (int a = 0; a < m; ++a) {
        double q = hitting_time(table.subset.host, table, 0, a);
        res = std::max(res, std::abs(q - static_cast<double>(a) * (m - a)));
      }
    }
    r.add("cycle law Q(a) = a(m-a), m <= 50", res, 1e-8);
  }
  for (int m = 3; m <= 6; ++m)
    for (int n = 3; n <= 6; ++n) {
      TorusSpec spec({m, n});
      RegularGraph g = torus_graph(spec);
      std::vector<int> source = {1, 2};
      HittingTable grid = hitting_grid(spec, source);
      int src = source[0] * n + source[1];
      double res = 0.0;
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y) {
          std::vector<double> col = hitting_oracle(g, x * n + y);
          res = std::max(res, std::abs(grid.q(x, y) - col[src]) /
                                  std::max(1.0, col[src]));
        }
      r.add("grid on C_" + std::to_string(m) + " x C_" + std::to_string(n) +
                " vs first-step system",
            res, tol);
    }
  r.seconds = timer.seconds();
  return r;
}

// Both sides of the summation identities: Fourier mode sums vs the cycle
// polynomial and the single-spectrum torus form.
inline RunReport run_identities_suite(double tol = 1e-10) {
  RunReport r;
  r.suite = "identities";
  detail::SuiteTimer timer;
  for (int m = 3; m <= 12; ++m) {
    double res = 0.0;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        res = std::max(res, identity_residual_cycle(m, x, y));
    r.add("cycle identity on C_" + std::to_string(m), res, tol);
  }
  for (int m = 3; m <= 6; ++m)
    for (int n = 3; n <= 6; ++n) {
      double res = 0.0;
      for (int x = 0; x < m; ++x)
        for (int xp = 0; xp < n; ++xp)
          for (int y = 0; y < m; ++y)
            for (int yp = 0; yp < n; ++yp)
              res = std::max(res, identity_residual_torus(m, n, x, xp, y, yp));
      r.add("torus identity on C_" + std::to_string(m) + " x C_" +
                std::to_string(n),
            res, tol);
    }
  r.seconds = timer.seconds();
  return r;
}

// Defining relations: the killed-walk series sums to the Dirichlet inverse,
// the fundamental matrix coincides with the pseudo-inverse on regular graphs
// and kills constants, and the closed-form tables solve their equations.
inline RunReport run_relations_suite(double tol = 1e-9) {
  RunReport r;
  r.suite = "relations";
  detail::SuiteTimer timer;
  {
    const std::vector<std::pair<std::string, DirichletSubset>> cases = {
        {"half of C_6", dirichlet_subset(build_cycle(6), {0, 1, 2})},
        {"half of C_10", dirichlet_subset(build_cycle(10), {0, 1, 2, 3, 4})},
        {"edge of C_4 crossed with C_3",
         product_subset(dirichlet_subset(build_cycle(4), {0, 1}),
                        full_subset(build_cycle(3)))}};
    for (const auto& [name, sub] : cases) {
      GreenTable series = transient_series(transition_matrix(sub));
      GreenTable direct =
          greens_dirichlet(laplacian(sub, LaplacianKind::Normalized));
      r.add("killed-walk series sums to the Dirichlet inverse, " + name,
            max_abs_diff(series.entries, direct.entries), 10.0 * tol);
    }
  }
  {
    Matrix z = fundamental_matrix(build_cycle(3));
    double res = std::max(std::abs(z(0, 0) - 4.0 / 9.0),
                          std::abs(z(0, 1) + 2.0 / 9.0));
    r.add("fundamental matrix of the triangle, 4/9 and -2/9", res, 1e-12);
  }
  {
    double eq = 0.0, rows = 0.0, defining = 0.0;
    std::vector<RegularGraph> graphs;
    for (int m = 3; m <= 8; ++m) graphs.push_back(build_cycle(m));
    graphs.push_back(torus_graph(TorusSpec({3, 4})));
    for (const RegularGraph& g : graphs) {
      int n = g.size();
      Matrix z = fundamental_matrix(g);
      GreenTable pseudo =
          greens_pseudo(detail::dense_eigensystem(full_subset(g)));
      eq = std::max(eq, max_abs_diff(z, pseudo.entries));
      TransitionMatrix p = transition_matrix(full_subset(g));
      Matrix want = Matrix::identity(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) want(i, j) -= 1.0 / n;
      defining = std::max(
          defining,
          max_abs_diff((Matrix::identity(n) - p.entries) * z, want));
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += z(i, j);
        rows = std::max(rows, std::abs(s));
      }
    }
    r.add("fundamental matrix equals the pseudo-inverse on regular graphs",
          eq, 1e-10);
    r.add("fundamental matrix kills constants", rows, 1e-10);
    r.add("fundamental matrix solves its defining equation", defining, 1e-10);
  }
  {
    double res = 0.0;
    for (const auto& dims :
         {std::vector<int>{5, 7}, {8, 8}, {4, 4, 4}}) {
      GreenTable table = torus_green_table(TorusSpec(dims));
      res = std::max(res, detail::pseudo_relation_residual(table));
    }
    r.add("closed-form torus tables solve the pseudo-inverse relation", res,
          tol);
  }
  r.seconds = timer.seconds();
  return r;
}

inline std::vector<RunReport> run_all_suites() {
  std::vector<RunReport> out;
  out.push_back(run_cycle_suite());
  out.push_back(run_galpha_suite());
  out.push_back(run_torus_suite());
  out.push_back(run_ttorus_suite());
  out.push_back(run_product_suite());
  out.push_back(run_walk_suite());
  out.push_back(run_identities_suite());
  out.push_back(run_relations_suite());
  return out;
}

}  // namespace greenfn
