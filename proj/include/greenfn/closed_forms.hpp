#pragma once

// Closed-form Green's functions on cycles and tori:
//   - the cycle polynomial (m+1)(m-1)/(6m) - a + a^2/m,
//   - the shifted cycle form -1/(m alpha) + Chebyshev ratio,
//   - the 2-torus single sum over the second factor's spectrum,
//   - the t-torus recursion, with a reusable evaluation plan whose per-entry
//     cost is the product of the trailing dimensions (keep the largest
//     factor first; the plan sorts for you).
//
// The direct Fourier double sums live here too; they are the left-hand
// sides of the summation identities and the brute-force comparator the
// benchmark runs against.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "greenfn/chebyshev.hpp"
#include "greenfn/graph.hpp"
#include "greenfn/spectral.hpp"
#include "greenfn/util.hpp"

namespace greenfn {

// Pseudo-inverse Green's function of C_m at hop distance a in [0, m-1].
inline double cycle_green(int m, int a) {
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  if (a < 0 || a >= m)
    throw std::invalid_argument("cycle displacement out of range");
  double dm = m;
  return (dm + 1.0) * (dm - 1.0) / (6.0 * dm) - a +
         static_cast<double>(a) * a / dm;
}

// Fourier eigensystem of C_m: values 1 - cos(2 pi j / m), vectors
// exp(-2 pi i j x / m)/sqrt(m), sorted ascending by value.
inline Eigensystem cycle_eigensystem(int m) {
  RegularGraph g = build_cycle(m);
  int n = g.size();
  std::vector<double> vals(n);
  for (int j = 0; j < n; ++j) vals[j] = 1.0 - std::cos(2.0 * kPi * j / m);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return vals[a] < vals[b]; });
  Eigensystem es;
  es.subset = full_subset(std::move(g));
  es.singular = true;
  es.values.resize(n);
  es.vectors.resize(n);
  double norm = 1.0 / std::sqrt(static_cast<double>(m));
  for (int rank = 0; rank < n; ++rank) {
    int j = order[rank];
    es.values[rank] = vals[j];
    es.vectors[rank].resize(n);
    for (int x = 0; x < n; ++x)
      es.vectors[rank][x] = norm * cis(-2.0 * kPi * j * x / m);
  }
  es.values[0] = 0.0;
  return es;
}

// Precomputed pieces of the shifted cycle Green's function at a fixed shift:
// eval(a) = c0 + (e^{-a theta} + e^{-(m-a) theta}) * dinv. This is the
// hoisted form of -1/(m alpha) + cheb_shift_ratio, shared by the torus plans
// so the shift-dependent transcendentals are paid once per shift.
struct CycleShiftKernel {
  int m;
  double c0;     // -1/(m alpha)
  double theta;  // acosh(1 + alpha)
  double dinv;   // 1 / (sinh(theta) (1 - e^{-m theta}))
};

inline CycleShiftKernel make_shift_kernel(int m, double alpha) {
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  if (!(alpha > 0.0))
    throw std::domain_error(
        "shifted cycle Green's function has a pole at alpha = 0");
  SpectralParameter p = param_from_alpha(alpha);
  double denom = std::sinh(p.theta) * (-std::expm1(-m * p.theta));
  return CycleShiftKernel{m, -1.0 / (m * alpha), p.theta, 1.0 / denom};
}

inline double shift_kernel_eval(const CycleShiftKernel& k, int a) {
  return k.c0 +
         (std::exp(-a * k.theta) + std::exp(-(k.m - a) * k.theta)) * k.dinv;
}

// Shift-generalized Green's function of C_m, alpha > 0, at distance a.
inline double cycle_green_alpha(int m, double alpha, int a) {
  if (a < 0 || a >= m)
    throw std::invalid_argument("cycle displacement out of range");
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  if (!(alpha > 0.0))
    throw std::domain_error(
        "shifted cycle Green's function has a pole at alpha = 0");
  return -1.0 / (m * alpha) + cheb_shift_ratio(m, a, param_from_alpha(alpha));
}

// Green's function of C_m x C_n as a single sum over the C_n spectrum:
// each nonzero mode 1 - cos(2 pi k / n) shifts the C_m cycle form, and the
// two zero-mode pieces contribute the plain cycle Green's functions.
inline double torus_green(int m, int n, int da, int db) {
  if (da < 0 || da >= m || db < 0 || db >= n)
    throw std::invalid_argument("torus displacement out of range");
  std::complex<double> acc{0.0, 0.0};
  double scale = 0.0;
  for (int k = 1; k < n; ++k) {
    double shifted = cycle_green_alpha(m, 1.0 - std::cos(2.0 * kPi * k / n), da);
    acc += cis(2.0 * kPi * k * db / n) * shifted;
    scale += std::abs(shifted);
  }
  double cross = checked_real(acc, scale) * 2.0 / n;
  return cross + 2.0 / n * cycle_green(m, da) + 2.0 / m * cycle_green(n, db);
}

// Brute-force comparator: the pseudo-inverse as its full eigenmode sum over
// all prod(m_s) Fourier modes. Cost is O(t n) per entry versus the plan's
// O(n / m_max); used by the identity checks and as the benchmark baseline.
inline double t_torus_green_fourier(const TorusSpec& spec,
                                    const std::vector<int>& disp) {
  int t = spec.order();
  if (static_cast<int>(disp.size()) != t)
    throw std::invalid_argument("displacement rank mismatch");
  std::vector<std::vector<double>> lam(t);
  std::vector<std::vector<std::complex<double>>> phase(t);
  for (int s = 0; s < t; ++s) {
    int m = spec.dims[s];
    if (disp[s] < 0 || disp[s] >= m)
      throw std::invalid_argument("torus displacement out of range");
    lam[s].resize(m);
    phase[s].resize(m);
    for (int j = 0; j < m; ++j) {
      lam[s][j] = 1.0 - std::cos(2.0 * kPi * j / m);
      phase[s][j] = cis(2.0 * kPi * j * disp[s] / m);
    }
  }
  std::complex<double> acc{0.0, 0.0};
  double scale = 0.0;
  for_each_index(spec.dims, [&](const std::vector<int>& k) {
    double sigma = 0.0;
    for (int s = 0; s < t; ++s) sigma += lam[s][k[s]];
    if (sigma == 0.0) return;  // the all-zero mode is projected out
    std::complex<double> prod = phase[0][k[0]];
    for (int s = 1; s < t; ++s) prod *= phase[s][k[s]];
    double w = t / sigma;
    acc += prod * w;
    scale += w;
  });
  return checked_real(acc, scale) / static_cast<double>(spec.vertex_count());
}

// Evaluation plan for the t-torus closed form. Dimensions are sorted
// descending so the largest factor hosts the shifted cycle form and the
// mode sum runs over the smaller trailing factors only. Each trailing mode
// K contributes its phase times the cycle form shifted by
// sigma_K = sum of the factor eigenvalues 1 - cos(2 pi j_s / m_s).
class TorusPlan {
 public:
  explicit TorusPlan(const TorusSpec& spec) : dims_(spec.dims) {
    t_ = static_cast<int>(dims_.size());
    source_.resize(t_);
    std::iota(source_.begin(), source_.end(), 0);
    std::stable_sort(source_.begin(), source_.end(),
                     [&](int a, int b) { return dims_[a] > dims_[b]; });
    std::sort(dims_.begin(), dims_.end(), std::greater<int>());
    m1_ = dims_[0];
    if (t_ == 1) return;
    tail_.assign(dims_.begin() + 1, dims_.end());
    long long tail_count = 1;
    for (int m : tail_) tail_count *= m;
    std::vector<std::vector<double>> lam(tail_.size());
    for (std::size_t s = 0; s < tail_.size(); ++s) {
      lam[s].resize(tail_[s]);
      for (int j = 0; j < tail_[s]; ++j)
        lam[s][j] = 1.0 - std::cos(2.0 * kPi * j / tail_[s]);
    }
    term_idx_.reserve((tail_count - 1) * tail_.size());
    kernels_.reserve(tail_count - 1);
    for_each_index(tail_, [&](const std::vector<int>& k) {
      double sigma = 0.0;
      for (std::size_t s = 0; s < tail_.size(); ++s) sigma += lam[s][k[s]];
      if (sigma == 0.0) return;
      term_idx_.insert(term_idx_.end(), k.begin(), k.end());
      kernels_.push_back(make_shift_kernel(m1_, sigma));
    });
    k_scale_ = static_cast<double>(t_) / static_cast<double>(tail_count);
    g1_weight_ = static_cast<double>(t_) / ((t_ - 1.0) * m1_);
    g2_weight_ = k_scale_;
    if (t_ >= 3) tail_plan_ = std::make_unique<TorusPlan>(TorusSpec(tail_));
    kernel_bound_ = 0.0;
    for (const CycleShiftKernel& k : kernels_)
      kernel_bound_ += std::abs(k.c0) + 2.0 * k.dinv;
  }

  int order() const { return t_; }
  const std::vector<int>& sorted_dims() const { return dims_; }

  // displacement is given in the caller's original dimension order.
  double eval(const std::vector<int>& displacement) const {
    std::vector<int> d = to_sorted(displacement);
    if (t_ == 1) return cycle_green(m1_, d[0]);
    std::vector<std::vector<std::complex<double>>> phase(tail_.size());
    for (std::size_t s = 0; s < tail_.size(); ++s) {
      phase[s].resize(tail_[s]);
      for (int j = 0; j < tail_[s]; ++j)
        phase[s][j] = cis(2.0 * kPi * j * d[s + 1] / tail_[s]);
    }
    std::complex<double> acc{0.0, 0.0};
    const int width = static_cast<int>(tail_.size());
    for (std::size_t term = 0; term < kernels_.size(); ++term) {
      const int* idx = term_idx_.data() + term * width;
      std::complex<double> p = phase[0][idx[0]];
      for (int s = 1; s < width; ++s) p *= phase[s][idx[s]];
      acc += p * shift_kernel_eval(kernels_[term], d[0]);
    }
    double cross = checked_real(acc * k_scale_, kernel_bound_ * k_scale_);
    return cross + g1_weight_ * tail_value(d) + g2_weight_ * cycle_green(m1_, d[0]);
  }

  // All canonically distinct displacements (every coordinate in
  // [0, m_s/2]) and their values, exploiting a -> m-a symmetry. Mode
  // phases and shift kernels are hoisted across the row; this is the
  // production path for whole-table work.
  struct Row {
    std::vector<std::vector<int>> displacements;  // original dimension order
    std::vector<double> values;
  };

  Row representative_row(int threads = 1) const {
    Row row;
    if (t_ == 1) {
      for (int a = 0; a <= m1_ / 2; ++a) {
        row.displacements.push_back({a});
        row.values.push_back(cycle_green(m1_, a));
      }
      return row;
    }
    std::vector<int> tail_reps(tail_.size());
    for (std::size_t s = 0; s < tail_.size(); ++s) tail_reps[s] = tail_[s] / 2 + 1;
    std::vector<std::vector<int>> combos;
    for_each_index(tail_reps, [&](const std::vector<int>& c) { combos.push_back(c); });
    int reps1 = m1_ / 2 + 1;
    // u[k][a] = e^{-a theta_k}, shared by every entry of the row
    std::vector<std::vector<double>> u(kernels_.size());
    for (std::size_t k = 0; k < kernels_.size(); ++k) {
      u[k].resize(m1_ + 1);
      double q = std::exp(-kernels_[k].theta);
      u[k][0] = 1.0;
      for (int a = 1; a <= m1_; ++a) u[k][a] = u[k][a - 1] * q;
    }
    std::vector<double> cyc1(reps1);
    for (int a = 0; a < reps1; ++a) cyc1[a] = cycle_green(m1_, a);
    int ncombo = static_cast<int>(combos.size());
    row.displacements.resize(static_cast<std::size_t>(ncombo) * reps1);
    row.values.resize(static_cast<std::size_t>(ncombo) * reps1);
    const int width = static_cast<int>(tail_.size());
    double imag_bound = 1e-9 * std::max(1.0, kernel_bound_ * k_scale_);
    parallel_for(ncombo, threads, [&](int ci) {
      const std::vector<int>& combo = combos[ci];
      std::vector<std::vector<std::complex<double>>> phase(tail_.size());
      for (std::size_t s = 0; s < tail_.size(); ++s) {
        phase[s].resize(tail_[s]);
        for (int j = 0; j < tail_[s]; ++j)
          phase[s][j] = cis(2.0 * kPi * j * combo[s] / tail_[s]);
      }
      std::vector<std::complex<double>> ph(kernels_.size());
      for (std::size_t term = 0; term < kernels_.size(); ++term) {
        const int* idx = term_idx_.data() + term * width;
        std::complex<double> p = phase[0][idx[0]];
        for (int s = 1; s < width; ++s) p *= phase[s][idx[s]];
        ph[term] = p;
      }
      double tail_g = t_ == 2 ? cycle_green(tail_[0], combo[0])
                              : tail_plan_->eval_sorted(combo);
      for (int a = 0; a < reps1; ++a) {
        double re = 0.0, im = 0.0;
        for (std::size_t k = 0; k < kernels_.size(); ++k) {
          double g = kernels_[k].c0 +
                     (u[k][a] + u[k][m1_ - a]) * kernels_[k].dinv;
          re += ph[k].real() * g;
          im += ph[k].imag() * g;
        }
        if (!(std::abs(im * k_scale_) <= imag_bound))
          throw std::runtime_error("imaginary residue exceeds tolerance");
        std::size_t slot = static_cast<std::size_t>(ci) * reps1 + a;
        std::vector<int> ext(t_);
        ext[source_[0]] = a;
        for (int s = 1; s < t_; ++s) ext[source_[s]] = combo[s - 1];
        row.displacements[slot] = std::move(ext);
        row.values[slot] =
            re * k_scale_ + g1_weight_ * tail_g + g2_weight_ * cyc1[a];
      }
    });
    return row;
  }

 private:
  // displacement already in this plan's sorted order (tail recursion path)
  double eval_sorted(const std::vector<int>& d) const {
    std::vector<int> ext(t_);
    for (int i = 0; i < t_; ++i) ext[source_[i]] = d[i];
    return eval(ext);
  }

  std::vector<int> to_sorted(const std::vector<int>& displacement) const {
    if (static_cast<int>(displacement.size()) != t_)
      throw std::invalid_argument("displacement rank mismatch");
    std::vector<int> d(t_);
    for (int i = 0; i < t_; ++i) {
      d[i] = displacement[source_[i]];
      if (d[i] < 0 || d[i] >= dims_[i])
        throw std::invalid_argument("torus displacement out of range");
    }
    return d;
  }

  double tail_value(const std::vector<int>& d) const {
    std::vector<int> td(d.begin() + 1, d.end());
    if (t_ == 2) return cycle_green(tail_[0], td[0]);
    return tail_plan_->eval_sorted(td);
  }

  int t_ = 0;
  std::vector<int> dims_;    // descending
  std::vector<int> source_;  // sorted position -> original position
  int m1_ = 0;
  std::vector<int> tail_;
  std::vector<int> term_idx_;  // kernels_.size() x tail_.size()
  std::vector<CycleShiftKernel> kernels_;
  std::unique_ptr<TorusPlan> tail_plan_;
  double k_scale_ = 0.0, g1_weight_ = 0.0, g2_weight_ = 0.0;
  double kernel_bound_ = 0.0;
};

// Green's function of the t-torus at the given displacement (one-shot;
// build a TorusPlan directly when evaluating many entries).
inline double t_torus_green(const TorusSpec& spec, const std::vector<int>& disp) {
  return TorusPlan(spec).eval(disp);
}

// Full graph-indexed tables assembled from the closed forms, for feeding
// the matrix-level checks and the hitting-time formulas.
inline GreenTable cycle_green_table(int m) {
  Matrix g(m, m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) g(x, y) = cycle_green(m, ((y - x) % m + m) % m);
  return GreenTable{std::move(g), full_subset(build_cycle(m)), GreenKind::Pseudo,
                    std::nullopt};
}

inline GreenTable torus_green_table(const TorusSpec& spec) {
  TorusPlan plan(spec);
  int n = static_cast<int>(spec.vertex_count());
  int t = spec.order();
  Matrix g(n, n);
  std::vector<int> disp(t);
  for (int u = 0; u < n; ++u) {
    std::vector<int> cu = index_to_coords(spec.dims, u);
    for (int v = 0; v < n; ++v) {
      std::vector<int> cv = index_to_coords(spec.dims, v);
      for (int s = 0; s < t; ++s)
        disp[s] = ((cv[s] - cu[s]) % spec.dims[s] + spec.dims[s]) % spec.dims[s];
      g(u, v) = plan.eval(disp);
    }
  }
  return GreenTable{std::move(g), full_subset(torus_graph(spec)),
                    GreenKind::Pseudo, std::nullopt};
}

// Three-dimensional m x m x m case written out (the recursion above,
// unrolled once): a double mode sum shifting the first cycle, a single mode
// sum shifting the second, and the three cycle terms, all weighted 3/m^2.
inline double torus3_green(int m, const std::vector<int>& disp) {
  if (disp.size() != 3) throw std::invalid_argument("torus3_green needs 3 coordinates");
  for (int d : disp)
    if (d < 0 || d >= m) throw std::invalid_argument("torus displacement out of range");
  std::vector<double> lam(m);
  for (int j = 0; j < m; ++j) lam[j] = 1.0 - std::cos(2.0 * kPi * j / m);
  std::complex<double> acc{0.0, 0.0};
  double scale = 0.0;
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      if (j == 0 && k == 0) continue;
      double g = cycle_green_alpha(m, lam[j] + lam[k], disp[0]);
      acc += cis(2.0 * kPi * (static_cast<double>(j) * disp[1] +
                              static_cast<double>(k) * disp[2]) / m) * g;
      scale += std::abs(g);
    }
  for (int j = 1; j < m; ++j) {
    double g = cycle_green_alpha(m, lam[j], disp[1]);
    acc += cis(2.0 * kPi * j * disp[2] / m) * g;
    scale += std::abs(g);
  }
  double sums = checked_real(acc, scale);
  double cycles = cycle_green(m, disp[0]) + cycle_green(m, disp[1]) +
                  cycle_green(m, disp[2]);
  return 3.0 / (static_cast<double>(m) * m) * (sums + cycles);
}

// |Fourier mode sum - closed form| for the cycle summation identity.
inline double identity_residual_cycle(int m, int x, int y) {
  int d = ((y - x) % m + m) % m;
  double lhs = t_torus_green_fourier(TorusSpec({m}), {d});
  return std::abs(lhs - cycle_green(m, d));
}

// |double Fourier sum - single-spectrum closed form| for the 2-torus.
inline double identity_residual_torus(int m, int n, int x, int xp, int y, int yp) {
  int da = ((y - x) % m + m) % m;
  int db = ((yp - xp) % n + n) % n;
  double lhs = t_torus_green_fourier(TorusSpec({m, n}), {da, db});
  return std::abs(lhs - torus_green(m, n, da, db));
}

}  // namespace greenfn
