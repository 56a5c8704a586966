#pragma once

// Green's functions of Cartesian products, assembled from one factor's
// shift-generalized Green's function (the provider) and the other factor's
// eigensystem (the spectrum). Four variants: with or without a Dirichlet
// boundary on the provider side, and equal or general factor degrees.
//
// The provider is queried once per spectrum mode k at shift d'/d times the
// mode's eigenvalue. Boundary forms sum every mode (the zero mode, present
// only when the spectrum factor is boundaryless, queries shift 0, which the
// provider's Dirichlet inverse answers). Boundaryless forms skip the zero
// mode and add the two factor pseudo tables, each weighted by the opposite
// factor's vertex count.

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "greenfn/closed_forms.hpp"
#include "greenfn/graph.hpp"
#include "greenfn/matrix.hpp"
#include "greenfn/spectral.hpp"
#include "greenfn/util.hpp"

namespace greenfn {

struct GAlphaProvider {
  std::function<Matrix(double)> table;  // shift alpha -> G_alpha on S x S
  Matrix pseudo;  // pseudo-inverse table; filled only for boundaryless factors
  DirichletSubset subset;

  int degree() const { return subset.host.degree; }
  int size() const { return subset.size(); }
  bool has_boundary() const { return subset.proper(); }
};

// Eigensum-backed provider for an arbitrary regular factor.
inline GAlphaProvider oracle_galpha_provider(const DirichletSubset& s) {
  auto es = std::make_shared<Eigensystem>(
      eigensystem(laplacian(s, LaplacianKind::Normalized)));
  GAlphaProvider p;
  p.subset = s;
  if (!s.proper()) p.pseudo = greens_pseudo(*es).entries;
  p.table = [es](double alpha) { return greens_alpha_oracle(*es, alpha).entries; };
  return p;
}

// Closed-form provider for a cycle factor (boundaryless, so only positive
// shifts are ever queried).
inline GAlphaProvider cycle_galpha_provider(int m) {
  GAlphaProvider p;
  p.subset = full_subset(build_cycle(m));
  p.pseudo = Matrix(m, m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      p.pseudo(x, y) = cycle_green(m, std::abs(x - y) <= m - std::abs(x - y)
                                          ? std::abs(x - y)
                                          : m - std::abs(x - y));
  p.table = [m](double alpha) {
    Matrix g(m, m);
    CycleShiftKernel k = make_shift_kernel(m, alpha);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) g(x, y) = shift_kernel_eval(k, std::abs(x - y));
    return g;
  };
  return p;
}

struct FactorSpectrum {
  Eigensystem es;

  int degree() const { return es.subset.host.degree; }
  int size() const { return es.subset.size(); }
  bool has_boundary() const { return es.subset.proper(); }
};

namespace detail {

inline GreenTable assemble_product(const GAlphaProvider& gp, const FactorSpectrum& fs,
                                   double prefactor, double shift_scale,
                                   bool skip_zero_mode, double gp_pseudo_weight,
                                   double fs_pseudo_weight) {
  int ns = gp.size();
  int np = fs.size();
  int n = ns * np;
  std::vector<std::complex<double>> acc(static_cast<std::size_t>(n) * n,
                                        {0.0, 0.0});
  double scale = 0.0;
  for (int k = skip_zero_mode ? 1 : 0; k < fs.es.size(); ++k) {
    Matrix g = gp.table(shift_scale * fs.es.values[k]);
    const auto& phi = fs.es.vectors[k];
    double phimax = 0.0;
    for (int x = 0; x < np; ++x) phimax = std::max(phimax, std::abs(phi[x]));
    scale += max_abs(g) * phimax * phimax;
    for (int xp = 0; xp < np; ++xp)
      for (int yp = 0; yp < np; ++yp) {
        std::complex<double> w = phi[xp] * std::conj(phi[yp]);
        for (int x = 0; x < ns; ++x) {
          std::complex<double>* row =
              acc.data() + (static_cast<std::size_t>(x) * np + xp) * n + yp;
          for (int y = 0; y < ns; ++y) row[static_cast<std::size_t>(y) * np] += w * g(x, y);
        }
      }
  }
  Matrix fs_pseudo;
  if (fs_pseudo_weight != 0.0) fs_pseudo = greens_pseudo(fs.es).entries;
  Matrix out(n, n);
  for (int x = 0; x < ns; ++x)
    for (int xp = 0; xp < np; ++xp)
      for (int y = 0; y < ns; ++y)
        for (int yp = 0; yp < np; ++yp) {
          out(x * np + xp, y * np + yp) =
              prefactor *
              checked_real(acc[(static_cast<std::size_t>(x) * np + xp) * n +
                               static_cast<std::size_t>(y) * np + yp],
                           prefactor * scale);
        }
  if (gp_pseudo_weight != 0.0)
    for (int x = 0; x < ns; ++x)
      for (int y = 0; y < ns; ++y)
        for (int xp = 0; xp < np; ++xp)
          for (int yp = 0; yp < np; ++yp)
            out(x * np + xp, y * np + yp) += gp_pseudo_weight * gp.pseudo(x, y);
  if (fs_pseudo_weight != 0.0)
    for (int x = 0; x < ns; ++x)
      for (int y = 0; y < ns; ++y)
        for (int xp = 0; xp < np; ++xp)
          for (int yp = 0; yp < np; ++yp)
            out(x * np + xp, y * np + yp) += fs_pseudo_weight * fs_pseudo(xp, yp);
  DirichletSubset sub = product_subset(gp.subset, fs.es.subset);
  GreenKind kind = sub.proper() ? GreenKind::Dirichlet : GreenKind::Pseudo;
  return GreenTable{std::move(out), std::move(sub), kind, std::nullopt};
}

}  // namespace detail

// Equal factor degrees, provider factor has a Dirichlet boundary:
// G = 2 sum_k phi'_k(x') conj(phi'_k(y')) G_{lambda'_k}(x, y).
inline GreenTable product_green_boundary_equal(const GAlphaProvider& gp,
                                               const FactorSpectrum& fs) {
  if (gp.degree() != fs.degree())
    throw std::invalid_argument(
        "factor degrees differ; use the general-degree boundary form");
  if (!gp.has_boundary())
    throw std::invalid_argument(
        "boundary form requires the provider factor to have a boundary");
  return detail::assemble_product(gp, fs, 2.0, 1.0, false, 0.0, 0.0);
}

// General degrees d (provider) and d' (spectrum), provider has a boundary:
// G = ((d+d')/d) sum_k phi'_k(x') conj(phi'_k(y')) G_{d' lambda'_k / d}(x, y).
inline GreenTable product_green_boundary_general(const GAlphaProvider& gp,
                                                 const FactorSpectrum& fs) {
  if (!gp.has_boundary())
    throw std::invalid_argument(
        "boundary form requires the provider factor to have a boundary");
  double d = gp.degree(), dp = fs.degree();
  return detail::assemble_product(gp, fs, (d + dp) / d, dp / d, false, 0.0, 0.0);
}

// Equal degrees, no boundary on either factor: the mode sum skips the zero
// mode and each factor's pseudo table enters weighted by the other factor's
// vertex count.
inline GreenTable product_green_noboundary_equal(const GAlphaProvider& gp,
                                                 const FactorSpectrum& fs) {
  if (gp.degree() != fs.degree())
    throw std::invalid_argument(
        "factor degrees differ; use the general-degree boundaryless form");
  if (gp.has_boundary() || fs.has_boundary())
    throw std::invalid_argument(
        "boundaryless form requires both factors boundaryless");
  return detail::assemble_product(gp, fs, 2.0, 1.0, true, 2.0 / fs.size(),
                                  2.0 / gp.size());
}

// General degrees, no boundary on either factor.
inline GreenTable product_green_noboundary_general(const GAlphaProvider& gp,
                                                   const FactorSpectrum& fs) {
  if (gp.has_boundary() || fs.has_boundary())
    throw std::invalid_argument(
        "boundaryless form requires both factors boundaryless");
  double d = gp.degree(), dp = fs.degree();
  return detail::assemble_product(gp, fs, (d + dp) / d, dp / d, true,
                                  (d + dp) / (d * fs.size()),
                                  (d + dp) / (dp * gp.size()));
}

// Applies a random orthogonal mixing inside every repeated eigenspace.
// The result spans the same spaces, so any assembled product must not move.
inline Eigensystem rotate_degenerate_eigenspaces(Eigensystem es, std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  int n = es.size();
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && es.values[j + 1] - es.values[i] < 1e-9) ++j;
    for (int pass = 0; pass < 2 && j > i; ++pass)
      for (int p = i; p < j; ++p)
        for (int q = p + 1; q <= j; ++q) {
          double a = angle(rng);
          double c = std::cos(a), s = std::sin(a);
          for (std::size_t x = 0; x < es.vectors[p].size(); ++x) {
            std::complex<double> vp = es.vectors[p][x], vq = es.vectors[q][x];
            es.vectors[p][x] = c * vp - s * vq;
            es.vectors[q][x] = s * vp + c * vq;
          }
        }
    i = j + 1;
  }
  return es;
}

}  // namespace greenfn
