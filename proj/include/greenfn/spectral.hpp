#pragma once

// Brute-force spectral route: eigensystems of normalized Dirichlet
// Laplacians and the Green's functions built from them by explicit
// eigenvector sums or dense inversion. This is the oracle the closed
// forms are validated against, so it stays deliberately literal.

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "greenfn/graph.hpp"
#include "greenfn/jacobi.hpp"
#include "greenfn/matrix.hpp"
#include "greenfn/util.hpp"

namespace greenfn {

struct Eigensystem {
  std::vector<double> values;  // ascending, within [0, 2]
  std::vector<std::vector<std::complex<double>>> vectors;  // vectors[j][x]
  bool singular = false;  // true iff the subset is the whole graph (value 0 present)
  DirichletSubset subset;

  int size() const { return static_cast<int>(values.size()); }
};

enum class GreenKind { Pseudo, Dirichlet, Shifted };

struct GreenTable {
  Matrix entries;  // indexed by position within subset.members, symmetric
  DirichletSubset subset;
  GreenKind kind = GreenKind::Pseudo;
  std::optional<double> alpha;
};

struct TransitionMatrix {
  Matrix entries;  // P(x,y) = 1/d for host-neighbors inside S
  DirichletSubset subset;
  bool absorbing = false;  // some probability leaks to deleted vertices
};

inline TransitionMatrix transition_matrix(const DirichletSubset& s) {
  int n = s.size();
  Matrix p(n, n);
  double inv = 1.0 / s.host.degree;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && adjacent(s.host, s.members[i], s.members[j])) p(i, j) = inv;
  return TransitionMatrix{std::move(p), s, s.proper()};
}

inline std::vector<double> stationary(const RegularGraph& g) {
  // pi(x) = d_x / vol; uniform on regular graphs.
  return std::vector<double>(g.size(), 1.0 / g.size());
}

inline Eigensystem eigensystem(const LaplacianMatrix& lap) {
  if (lap.kind != LaplacianKind::Normalized)
    throw std::invalid_argument("eigensystem expects the normalized Laplacian");
  if (!is_symmetric(lap.entries, 1e-12))
    throw std::invalid_argument("eigensystem requires a symmetric matrix");
  SymmetricEigen se = jacobi_eigensystem(lap.entries);
  int n = se.vectors.rows();
  Eigensystem es;
  es.subset = lap.subset;
  es.singular = !lap.subset.proper();
  es.values = std::move(se.values);
  for (double& v : es.values) {
    if (v < 0.0 && v > -1e-12) v = 0.0;
    if (v > 2.0 && v < 2.0 + 1e-12) v = 2.0;
  }
  if (es.singular) es.values[0] = 0.0;  // exact zero mode on the full graph
  es.vectors.resize(n);
  for (int j = 0; j < n; ++j) {
    es.vectors[j].resize(n);
    for (int i = 0; i < n; ++i) es.vectors[j][i] = se.vectors(i, j);
  }
  return es;
}

namespace detail {

// G = sum over selected eigenpairs of weight(lambda_j) phi_j phi_j^*.
template <class Weight>
Matrix eigen_sum(const Eigensystem& es, bool skip_zero_mode, Weight&& weight) {
  int n = es.size();
  std::vector<std::vector<std::complex<double>>> acc(
      n, std::vector<std::complex<double>>(n, {0.0, 0.0}));
  double scale = 0.0;
  for (int j = 0; j < n; ++j) {
    if (skip_zero_mode && j == 0) continue;
    double w = weight(es.values[j]);
    scale += std::abs(w);
    const auto& phi = es.vectors[j];
    for (int x = 0; x < n; ++x) {
      std::complex<double> wx = w * phi[x];
      for (int y = 0; y < n; ++y) acc[x][y] += wx * std::conj(phi[y]);
    }
  }
  Matrix out(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out(x, y) = checked_real(acc[x][y], scale, 1e-12);
  return out;
}

}  // namespace detail

// Moore-Penrose route: G = sum_{lambda_j > 0} (1/lambda_j) phi_j phi_j^*.
inline GreenTable greens_pseudo(const Eigensystem& es) {
  if (!es.singular)
    throw std::invalid_argument(
        "greens_pseudo expects a full-graph eigensystem; use greens_dirichlet");
  Matrix g = detail::eigen_sum(es, true, [](double v) { return 1.0 / v; });
  return GreenTable{std::move(g), es.subset, GreenKind::Pseudo, std::nullopt};
}

// Dirichlet inverse: G_S = (Laplacian_S)^{-1}, any Laplacian kind.
inline GreenTable greens_dirichlet(const LaplacianMatrix& lap) {
  if (!lap.subset.proper())
    throw std::invalid_argument(
        "greens_dirichlet requires a proper subset; full-graph Laplacians are singular");
  Matrix g = inverse(lap.entries);
  return GreenTable{std::move(g), lap.subset, GreenKind::Dirichlet, std::nullopt};
}

// G_alpha = sum over nonzero modes of 1/(lambda_j + alpha) phi_j phi_j^*.
inline GreenTable greens_alpha_oracle(const Eigensystem& es, double alpha) {
  int start = es.singular ? 1 : 0;
  for (int j = start; j < es.size(); ++j)
    if (std::abs(es.values[j] + alpha) < 1e-12)
      throw std::domain_error("alpha hits an eigenvalue pole");
  Matrix g = detail::eigen_sum(es, es.singular,
                               [alpha](double v) { return 1.0 / (v + alpha); });
  return GreenTable{std::move(g), es.subset, GreenKind::Shifted, alpha};
}

// Transient-walk series I + P + P^2 + ... for absorbing chains (Dirichlet
// boundary present). Stops when the increment and its geometric tail
// estimate both fall under tol.
inline GreenTable transient_series(const TransitionMatrix& p, double tol = 1e-12) {
  if (!p.absorbing)
    throw std::domain_error(
        "transient_series diverges without absorption; take a proper subset");
  int n = p.entries.rows();
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  double prev = 1.0;
  for (int step = 0; step < 100000; ++step) {
    term = term * p.entries;
    sum = sum + term;
    double inc = max_abs(term);
    if (inc == 0.0) break;
    double ratio = std::min(inc / prev, 0.999999);
    if (inc < tol && inc * ratio / (1.0 - ratio) < tol) break;
    prev = inc;
    if (step == 99999)
      throw std::runtime_error("transient_series failed to converge");
  }
  return GreenTable{std::move(sum), p.subset, GreenKind::Dirichlet, std::nullopt};
}

// Fundamental matrix Z = (I - P + Pi)^{-1} - Pi, Pi = all rows pi. The
// inverse exists even for periodic walks, where the plain Cesaro series
// does not settle.
inline Matrix fundamental_matrix(const RegularGraph& g) {
  int n = g.size();
  std::vector<double> pi = stationary(g);
  TransitionMatrix p = transition_matrix(full_subset(g));
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = (i == j ? 1.0 : 0.0) - p.entries(i, j) + pi[j];
  Matrix z = inverse(a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) -= pi[j];
  return z;
}

}  // namespace greenfn
