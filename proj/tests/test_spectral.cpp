#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "greenfn/graph.hpp"
#include "greenfn/spectral.hpp"

using namespace greenfn;

namespace {
Eigensystem cycle_es(int m) {
  return eigensystem(
      laplacian(full_subset(build_cycle(m)), LaplacianKind::Normalized));
}
}  // namespace

TEST_CASE("normalized cycle spectra") {
  Eigensystem c4 = cycle_es(4);
  REQUIRE(c4.singular);
  REQUIRE(c4.values[0] == 0.0);
  REQUIRE(std::abs(c4.values[1] - 1.0) < 1e-12);
  REQUIRE(std::abs(c4.values[2] - 1.0) < 1e-12);
  REQUIRE(std::abs(c4.values[3] - 2.0) < 1e-12);

  Eigensystem c3 = cycle_es(3);
  REQUIRE(std::abs(c3.values[1] - 1.5) < 1e-12);
  REQUIRE(std::abs(c3.values[2] - 1.5) < 1e-12);
}

TEST_CASE("pseudo-inverse tables of small cycles") {
  GreenTable g3 = greens_pseudo(cycle_es(3));
  REQUIRE(std::abs(g3.entries(0, 0) - 4.0 / 9.0) < 1e-13);
  REQUIRE(std::abs(g3.entries(0, 1) + 2.0 / 9.0) < 1e-13);
  REQUIRE(g3.kind == GreenKind::Pseudo);

  GreenTable g4 = greens_pseudo(cycle_es(4));
  REQUIRE(std::abs(g4.entries(0, 0) - 0.625) < 1e-13);
  REQUIRE(std::abs(g4.entries(0, 1) + 0.125) < 1e-13);
  REQUIRE(std::abs(g4.entries(0, 2) + 0.375) < 1e-13);
  REQUIRE(std::abs(g4.entries(0, 3) + 0.125) < 1e-13);
}

TEST_CASE("pseudo-inverse requires a boundaryless factor") {
  Eigensystem es = eigensystem(laplacian(
      dirichlet_subset(build_cycle(4), {0, 1}), LaplacianKind::Normalized));
  REQUIRE(!es.singular);
  REQUIRE_THROWS_AS(greens_pseudo(es), std::invalid_argument);
}

TEST_CASE("dirichlet inverse of two adjacent vertices in C_4") {
  GreenTable g = greens_dirichlet(laplacian(
      dirichlet_subset(build_cycle(4), {0, 1}), LaplacianKind::Normalized));
  REQUIRE(std::abs(g.entries(0, 0) - 4.0 / 3.0) < 1e-13);
  REQUIRE(std::abs(g.entries(0, 1) - 2.0 / 3.0) < 1e-13);
  REQUIRE(g.kind == GreenKind::Dirichlet);
}

TEST_CASE("shifted tables from the eigenmode sum") {
  GreenTable a1 = greens_alpha_oracle(cycle_es(4), 1.0);
  REQUIRE(std::abs(a1.entries(0, 0) - 1.0 / 3.0) < 1e-13);
  REQUIRE(std::abs(a1.entries(0, 1) + 1.0 / 12.0) < 1e-13);
  REQUIRE(std::abs(a1.entries(0, 2) + 1.0 / 6.0) < 1e-13);

  GreenTable a15 = greens_alpha_oracle(cycle_es(3), 1.5);
  REQUIRE(std::abs(a15.entries(0, 0) - 2.0 / 9.0) < 1e-13);
  REQUIRE(std::abs(a15.entries(0, 1) + 1.0 / 9.0) < 1e-13);
}

TEST_CASE("shifted table refuses a pole") {
  Eigensystem es = eigensystem(laplacian(
      dirichlet_subset(build_cycle(4), {0, 1}), LaplacianKind::Normalized));
  // Dirichlet eigenvalues are 1/2 and 3/2
  REQUIRE_THROWS_AS(greens_alpha_oracle(es, -0.5), std::domain_error);
}

TEST_CASE("killed-walk series matches the Dirichlet inverse") {
  DirichletSubset s = dirichlet_subset(build_cycle(4), {0, 1});
  GreenTable series = transient_series(transition_matrix(s));
  REQUIRE(std::abs(series.entries(0, 0) - 4.0 / 3.0) < 1e-10);
  REQUIRE(std::abs(series.entries(0, 1) - 2.0 / 3.0) < 1e-10);
}

TEST_CASE("killed-walk series needs absorption") {
  TransitionMatrix p = transition_matrix(full_subset(build_cycle(4)));
  REQUIRE(!p.absorbing);
  REQUIRE_THROWS_AS(transient_series(p), std::domain_error);
}

TEST_CASE("fundamental matrix of the triangle") {
  Matrix z = fundamental_matrix(build_cycle(3));
  REQUIRE(std::abs(z(0, 0) - 4.0 / 9.0) < 1e-13);
  REQUIRE(std::abs(z(0, 1) + 2.0 / 9.0) < 1e-13);
  // rows kill constants
  for (int i = 0; i < 3; ++i)
    REQUIRE(std::abs(z(i, 0) + z(i, 1) + z(i, 2)) < 1e-13);
}

TEST_CASE("stationary distribution is uniform on regular graphs") {
  std::vector<double> pi = stationary(build_cycle(6));
  for (double p : pi) REQUIRE(std::abs(p - 1.0 / 6.0) < 1e-15);
}
