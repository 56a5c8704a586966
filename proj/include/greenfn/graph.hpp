#pragma once

// Regular graphs at desk scale: cycles, Cartesian products of regular
// graphs, Dirichlet vertex subsets, and the three Laplacian variants
// built from them. Everything is validated eagerly at construction.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenfn/matrix.hpp"

namespace greenfn {

struct RegularGraph {
  int degree = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  // Present when the graph is a cycle or a product of cycles; index order is
  // row-major with the first factor slowest.
  std::optional<std::vector<int>> coordinate_shape;

  int size() const { return static_cast<int>(adj.size()); }
  long long volume() const {
    return static_cast<long long>(degree) * size();
  }
};

inline bool adjacent(const RegularGraph& g, int u, int v) {
  const auto& row = g.adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

namespace detail {

inline bool connected_within(const std::vector<std::vector<int>>& adj,
                             const std::vector<int>& members) {
  if (members.empty()) return false;
  int n = static_cast<int>(adj.size());
  std::vector<char> in_set(n, 0), seen(n, 0);
  for (int v : members) in_set[v] = 1;
  std::vector<int> stack{members[0]};
  seen[members[0]] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : adj[u])
      if (in_set[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return reached == static_cast<int>(members.size());
}

inline void validate_regular(const RegularGraph& g) {
  int n = g.size();
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  if (g.degree < 1) throw std::invalid_argument("graph degree must be positive");
  for (int u = 0; u < n; ++u) {
    const auto& row = g.adj[u];
    if (static_cast<int>(row.size()) != g.degree)
      throw std::invalid_argument("vertex " + std::to_string(u) +
                                  " does not have the uniform degree");
    for (std::size_t i = 0; i < row.size(); ++i) {
      int v = row[i];
      if (v < 0 || v >= n) throw std::invalid_argument("neighbor index out of range");
      if (v == u) throw std::invalid_argument("self-loops are not allowed");
      if (i > 0 && row[i - 1] >= v)
        throw std::invalid_argument("neighbor lists must be strictly sorted");
      if (!adjacent(g, v, u))
        throw std::invalid_argument("adjacency is not symmetric");
    }
  }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  if (!connected_within(g.adj, all))
    throw std::invalid_argument("graph must be connected");
}

}  // namespace detail

// Cycle C_m on vertices 0..m-1; m = 3 degenerates to the triangle K_3.
inline RegularGraph build_cycle(int m) {
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  RegularGraph g;
  g.degree = 2;
  g.adj.resize(m);
  for (int i = 0; i < m; ++i) {
    int a = (i + 1) % m, b = (i + m - 1) % m;
    g.adj[i] = {std::min(a, b), std::max(a, b)};
  }
  g.coordinate_shape = std::vector<int>{m};
  detail::validate_regular(g);
  return g;
}

// Cartesian product: (u,u') ~ (v,v') iff (u=v and u'~v') or (u~v and u'=v').
// Vertex (u,u') maps to index u*|H| + u', first factor slowest.
inline RegularGraph cartesian_product(const RegularGraph& g, const RegularGraph& h) {
  RegularGraph p;
  p.degree = g.degree + h.degree;
  int nh = h.size();
  p.adj.resize(static_cast<std::size_t>(g.size()) * nh);
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < nh; ++v) {
      auto& row = p.adj[static_cast<std::size_t>(u) * nh + v];
      row.reserve(p.degree);
      for (int w : g.adj[u]) row.push_back(w * nh + v);
      for (int w : h.adj[v]) row.push_back(u * nh + w);
      std::sort(row.begin(), row.end());
    }
  if (g.coordinate_shape && h.coordinate_shape) {
    std::vector<int> shape = *g.coordinate_shape;
    shape.insert(shape.end(), h.coordinate_shape->begin(), h.coordinate_shape->end());
    p.coordinate_shape = std::move(shape);
  }
  detail::validate_regular(p);
  return p;
}

// An induced vertex subset S with the host graph kept alongside: degrees in
// all Laplacians below stay the host degrees even when S is proper.
struct DirichletSubset {
  RegularGraph host;
  std::vector<int> members;  // strictly increasing host indices

  int size() const { return static_cast<int>(members.size()); }
  bool proper() const { return size() < host.size(); }
};

inline DirichletSubset full_subset(RegularGraph g) {
  DirichletSubset s;
  s.members.resize(g.size());
  for (int i = 0; i < g.size(); ++i) s.members[i] = i;
  s.host = std::move(g);
  return s;
}

inline DirichletSubset dirichlet_subset(RegularGraph g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (members.empty()) throw std::invalid_argument("subset must be nonempty");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= g.size())
      throw std::invalid_argument("subset member out of range");
    if (i > 0 && members[i] == members[i - 1])
      throw std::invalid_argument("subset members must be distinct");
  }
  if (!detail::connected_within(g.adj, members))
    throw std::invalid_argument("subset must induce a connected subgraph");
  return DirichletSubset{std::move(g), std::move(members)};
}

// S x S' inside the product of the hosts, members in row-major order
// matching cartesian_product's vertex indexing.
inline DirichletSubset product_subset(const DirichletSubset& a, const DirichletSubset& b) {
  RegularGraph host = cartesian_product(a.host, b.host);
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(a.size()) * b.size());
  int nh = b.host.size();
  for (int u : a.members)
    for (int v : b.members) members.push_back(u * nh + v);
  return DirichletSubset{std::move(host), std::move(members)};
}

// Dimensions of a t-torus C_{m1} x ... x C_{mt}; every factor needs >= 3.
struct TorusSpec {
  std::vector<int> dims;

  explicit TorusSpec(std::vector<int> d) : dims(std::move(d)) {
    if (dims.empty()) throw std::invalid_argument("torus needs at least one factor");
    for (int m : dims)
      if (m < 3) throw std::invalid_argument("every torus factor needs at least 3 vertices");
  }

  int order() const { return static_cast<int>(dims.size()); }
  long long vertex_count() const {
    long long n = 1;
    for (int m : dims) n *= m;
    return n;
  }
};

inline RegularGraph torus_graph(const TorusSpec& spec) {
  RegularGraph g = build_cycle(spec.dims[0]);
  for (std::size_t i = 1; i < spec.dims.size(); ++i)
    g = cartesian_product(g, build_cycle(spec.dims[i]));
  return g;
}

enum class LaplacianKind { Combinatorial, Normalized, DiscreteLaplace };

struct LaplacianMatrix {
  LaplacianKind kind;
  Matrix entries;  // indexed by position within subset.members
  DirichletSubset subset;
};

// L = D - A, discrete Laplace = I - D^{-1}A, normalized = D^{-1/2} L D^{-1/2},
// all restricted to the subset rows/columns with host degrees.
inline LaplacianMatrix laplacian(const DirichletSubset& s, LaplacianKind kind) {
  int n = s.size();
  double d = static_cast<double>(s.host.degree);
  Matrix m(n, n);
  double off;
  double diag;
  switch (kind) {
    case LaplacianKind::Combinatorial: off = -1.0; diag = d; break;
    case LaplacianKind::Normalized:
    case LaplacianKind::DiscreteLaplace: off = -1.0 / d; diag = 1.0; break;
  }
  for (int i = 0; i < n; ++i) {
    m(i, i) = diag;
    for (int j = i + 1; j < n; ++j)
      if (adjacent(s.host, s.members[i], s.members[j])) {
        m(i, j) = off;
        m(j, i) = off;
      }
  }
  return LaplacianMatrix{kind, std::move(m), s};
}

// Position of each subset member, -1 for vertices outside S.
inline std::vector<int> member_positions(const DirichletSubset& s) {
  std::vector<int> pos(s.host.size(), -1);
  for (int i = 0; i < s.size(); ++i) pos[s.members[i]] = i;
  return pos;
}

inline long long coords_to_index(const std::vector<int>& shape,
                                 const std::vector<int>& coords) {
  if (shape.size() != coords.size())
    throw std::invalid_argument("coordinate rank mismatch");
  long long idx = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= shape[i])
      throw std::invalid_argument("coordinate out of range");
    idx = idx * shape[i] + coords[i];
  }
  return idx;
}

inline std::vector<int> index_to_coords(const std::vector<int>& shape, long long idx) {
  std::vector<int> coords(shape.size());
  for (int i = static_cast<int>(shape.size()) - 1; i >= 0; --i) {
    coords[i] = static_cast<int>(idx % shape[i]);
    idx /= shape[i];
  }
  return coords;
}

}  // namespace greenfn
