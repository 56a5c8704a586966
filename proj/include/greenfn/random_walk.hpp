#pragma once

// Expected hitting times of the simple random walk. The production path
// reads them off a pseudo-inverse Green's table; the first-step linear
// system is kept as an independent oracle (dense LU, so it refuses to run
// past a few thousand states).

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "greenfn/closed_forms.hpp"
#include "greenfn/graph.hpp"
#include "greenfn/matrix.hpp"
#include "greenfn/spectral.hpp"

namespace greenfn {

// Q(x, y) = vol ( G(y,y)/d_y - G(x,y)/sqrt(d_x d_y) ); on a regular graph
// this collapses to n (G(y,y) - G(x,y)).
inline double hitting_time(const RegularGraph& g, const GreenTable& green,
                           int x, int y) {
  if (green.kind != GreenKind::Pseudo)
    throw std::invalid_argument(
        "hitting times need the pseudo-inverse table of the whole graph");
  if (green.subset.proper() || green.subset.host.size() != g.size() ||
      green.subset.host.degree != g.degree)
    throw std::invalid_argument("Green's table does not match the graph");
  if (x < 0 || x >= g.size() || y < 0 || y >= g.size())
    throw std::out_of_range("vertex out of range");
  double vol = static_cast<double>(g.volume());
  double d = g.degree;
  return vol * (green.entries(y, y) / d - green.entries(x, y) / d);
}

// First-step oracle: h(y) = 0 and (I - P) h = 1 on the other vertices.
inline std::vector<double> hitting_oracle(const RegularGraph& g, int y) {
  int n = g.size();
  if (n > 3000)
    throw std::invalid_argument(
        "first-step oracle refuses graphs larger than 3000 vertices");
  if (y < 0 || y >= n) throw std::out_of_range("vertex out of range");
  std::vector<int> idx(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (v != y) idx[v] = m++;
  Matrix a = Matrix::identity(m);
  double inv = 1.0 / g.degree;
  for (int u = 0; u < n; ++u) {
    if (u == y) continue;
    for (int w : g.adj[u])
      if (w != y) a(idx[u], idx[w]) -= inv;
  }
  LuFactor f = lu_factor(std::move(a));
  std::vector<double> h = lu_solve(f, std::vector<double>(m, 1.0));
  std::vector<double> out(n, 0.0);
  for (int v = 0; v < n; ++v)
    if (v != y) out[v] = h[idx[v]];
  return out;
}

struct HittingTable {
  std::vector<int> dims;
  std::vector<int> source;
  Matrix q;  // q(x, y) = expected steps from source to (x, y)
  double max_value = 0.0;
};

// Hitting times from a fixed source to every vertex of a 2-torus, through
// the closed-form Green's function: Q = MN (G(0,0) - G(dx,dy)).
inline HittingTable hitting_grid(const TorusSpec& spec,
                                 const std::vector<int>& source) {
  if (spec.order() != 2)
    throw std::invalid_argument("hitting grids are two-dimensional");
  if (source.size() != 2 || source[0] < 0 || source[0] >= spec.dims[0] ||
      source[1] < 0 || source[1] >= spec.dims[1])
    throw std::invalid_argument("source out of range");
  int m = spec.dims[0], n = spec.dims[1];
  double count = static_cast<double>(m) * n;
  double origin = torus_green(m, n, 0, 0);
  HittingTable t;
  t.dims = spec.dims;
  t.source = source;
  t.q = Matrix(m, n);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y) {
      int dx = ((x - source[0]) % m + m) % m;
      int dy = ((y - source[1]) % n + n) % n;
      double q = count * (origin - torus_green(m, n, dx, dy));
      t.q(x, y) = q;
      t.max_value = std::max(t.max_value, q);
    }
  return t;
}

}  // namespace greenfn
