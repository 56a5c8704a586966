#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "greenfn/graph.hpp"

using namespace greenfn;

TEST_CASE("cycle construction") {
  RegularGraph c5 = build_cycle(5);
  REQUIRE(c5.size() == 5);
  REQUIRE(c5.degree == 2);
  REQUIRE(c5.adj[0] == std::vector<int>{1, 4});
  REQUIRE(c5.adj[3] == std::vector<int>{2, 4});
  REQUIRE(c5.volume() == 10);
  REQUIRE(c5.coordinate_shape.value() == std::vector<int>{5});
  REQUIRE_THROWS_AS(build_cycle(2), std::invalid_argument);
}

TEST_CASE("cartesian product wiring") {
  RegularGraph p = cartesian_product(build_cycle(3), build_cycle(4));
  REQUIRE(p.size() == 12);
  REQUIRE(p.degree == 4);
  // vertex (0,0) = 0: cycle moves in each coordinate
  REQUIRE(p.adj[0] == std::vector<int>{1, 3, 4, 8});
  REQUIRE(p.coordinate_shape.value() == std::vector<int>{3, 4});
  REQUIRE(adjacent(p, 0, 4));
  REQUIRE(!adjacent(p, 0, 5));
}

TEST_CASE("torus spec and graph") {
  REQUIRE_THROWS_AS(TorusSpec({3, 2}), std::invalid_argument);
  TorusSpec spec({3, 3});
  REQUIRE(spec.vertex_count() == 9);
  RegularGraph t = torus_graph(spec);
  REQUIRE(t.size() == 9);
  REQUIRE(t.degree == 4);
}

TEST_CASE("dirichlet subsets validate membership") {
  RegularGraph c4 = build_cycle(4);
  DirichletSubset s = dirichlet_subset(c4, {1, 0});
  REQUIRE(s.members == std::vector<int>{0, 1});
  REQUIRE(s.proper());
  REQUIRE(!full_subset(c4).proper());
  REQUIRE_THROWS_AS(dirichlet_subset(c4, {0, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(dirichlet_subset(c4, {0, 4}), std::invalid_argument);
  // opposite corners of the 4-cycle induce no edge
  REQUIRE_THROWS_AS(dirichlet_subset(c4, {0, 2}), std::invalid_argument);
}

TEST_CASE("product subsets keep row-major member order") {
  DirichletSubset s = product_subset(dirichlet_subset(build_cycle(4), {0, 1}),
                                     full_subset(build_cycle(3)));
  REQUIRE(s.members == std::vector<int>{0, 1, 2, 3, 4, 5});
  REQUIRE(s.host.degree == 4);
  REQUIRE(s.proper());
}

TEST_CASE("laplacian variants") {
  DirichletSubset full3 = full_subset(build_cycle(3));
  LaplacianMatrix comb = laplacian(full3, LaplacianKind::Combinatorial);
  REQUIRE(comb.entries(0, 0) == 2.0);
  REQUIRE(comb.entries(0, 1) == -1.0);
  LaplacianMatrix norm = laplacian(full3, LaplacianKind::Normalized);
  REQUIRE(norm.entries(0, 0) == 1.0);
  REQUIRE(norm.entries(0, 1) == -0.5);
  // restriction keeps host degrees: same off-diagonal weight on a subset
  LaplacianMatrix sub = laplacian(dirichlet_subset(build_cycle(4), {0, 1}),
                                  LaplacianKind::Normalized);
  REQUIRE(sub.entries.rows() == 2);
  REQUIRE(sub.entries(0, 1) == -0.5);
}

TEST_CASE("coordinate round trips") {
  std::vector<int> shape = {3, 4, 5};
  REQUIRE(coords_to_index(shape, {0, 0, 0}) == 0);
  REQUIRE(coords_to_index(shape, {1, 2, 3}) == 1 * 20 + 2 * 5 + 3);
  REQUIRE(index_to_coords(shape, 33) == std::vector<int>{1, 2, 3});
  for (long long i = 0; i < 60; ++i)
    REQUIRE(coords_to_index(shape, index_to_coords(shape, i)) == i);
  REQUIRE_THROWS_AS(coords_to_index(shape, {0, 4, 0}), std::invalid_argument);
}

TEST_CASE("member positions") {
  DirichletSubset s = dirichlet_subset(build_cycle(5), {1, 2, 3});
  std::vector<int> pos = member_positions(s);
  REQUIRE(pos == std::vector<int>{-1, 0, 1, 2, -1});
}
