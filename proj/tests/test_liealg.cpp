/// Structure-constant algebra tests: dimensions, Jacobi integrity, ideals,
/// quotients and invariant counts.

#include "hamrep/liealg.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hamrep;

namespace {
int so_dim(int n) { return n * (n - 1) / 2; }
}  // namespace

TEST_CASE("builtin family dimensions") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(builtin_algebra(Family::WeylHeisenberg, n).dim == 2 * n + 1);
    CHECK(builtin_algebra(Family::Hamilton, n).dim == so_dim(n) + 2 * n + 1);
    CHECK(builtin_algebra(Family::InhomHamilton, n).dim ==
          so_dim(n) + 4 * n + 3);
    CHECK(builtin_algebra(Family::QuantumHamilton, n).dim ==
          so_dim(n) + 4 * n + 6);
    CHECK(builtin_algebra(Family::Galilei, n).dim == so_dim(n) + 2 * n + 2);
    CHECK(builtin_algebra(Family::GalileiConjugate, n).dim ==
          so_dim(n) + 2 * n + 2);
    CHECK(builtin_algebra(Family::Euclidean, n).dim == so_dim(n) + n);
  }
}

TEST_CASE("labels and lookup") {
  const LieAlgebraSpec alg = builtin_algebra(Family::QuantumHamilton, 3);
  CHECK(alg.index_of("J_12") == 0);
  CHECK(alg.find("G_1").has_value());
  CHECK(!alg.find("G_4").has_value());
  CHECK_THROWS_AS(alg.index_of("Z_9"), Error);
}

TEST_CASE("Jacobi identity holds exactly for every builtin family") {
  const Family fams[] = {Family::WeylHeisenberg, Family::Hamilton,
                         Family::InhomHamilton, Family::QuantumHamilton,
                         Family::Galilei,       Family::GalileiConjugate,
                         Family::Euclidean};
  for (Family f : fams)
    for (int n = 1; n <= 4; ++n) {
      const JacobiReport r = jacobi_check(builtin_algebra(f, n));
      INFO(family_name(f) << " n=" << n);
      CHECK(r.pass);
      CHECK(r.violations.empty());
    }
}

TEST_CASE("a perturbed bracket is caught by jacobi_check") {
  LieAlgebraSpec alg = builtin_algebra(Family::Hamilton, 2);
  // Doubling a single pairing bracket breaks the rotation Jacobi triples.
  alg.add_bracket(alg.index_of("G_1"), alg.index_of("F_1"),
                  alg.index_of("R"), Rat(1));
  CHECK_FALSE(jacobi_check(alg).pass);
}

TEST_CASE("ideals and quotients") {
  const LieAlgebraSpec wh = builtin_algebra(Family::WeylHeisenberg, 2);
  CHECK(is_ideal(SubspaceSpec(wh, {"R"})));
  CHECK_FALSE(is_ideal(SubspaceSpec(wh, {"G_1"})));
  CHECK_THROWS_AS(quotient(SubspaceSpec(wh, {"G_1"})), NotAnIdeal);

  // Quotienting the Hamilton group by its Weyl-Heisenberg ideal leaves the
  // rotation algebra.
  const LieAlgebraSpec ha = builtin_algebra(Family::Hamilton, 3);
  const SubspaceSpec heis(ha, {"G_1", "G_2", "G_3", "F_1", "F_2", "F_3", "R"});
  REQUIRE(is_ideal(heis));
  const LieAlgebraSpec q = quotient(heis);
  CHECK(q.dim == 3);
  CHECK(q.basis == std::vector<std::string>{"J_12", "J_13", "J_23"});
  CHECK(jacobi_check(q).pass);
  // so(3): [J_12, J_13] = -J_23.
  CHECK(q.c[q.index_of("J_12")][q.index_of("J_13")][q.index_of("J_23")] ==
        Rat(-1));
}

TEST_CASE("invariant counts at generic rank") {
  struct Row {
    Family f;
    int expect[4];
  };
  const Row rows[] = {
      {Family::WeylHeisenberg, {1, 1, 1, 1}},
      {Family::Hamilton, {1, 2, 2, 3}},
      {Family::Galilei, {2, 3, 3, 4}},
      {Family::QuantumHamilton, {4, 5, 5, 6}},
  };
  for (const Row& r : rows)
    for (int n = 1; n <= 4; ++n) {
      INFO(family_name(r.f) << " n=" << n);
      CHECK(invariant_count(builtin_algebra(r.f, n), 8, 42 + n) ==
            r.expect[n - 1]);
    }
}

TEST_CASE("rational_rank") {
  std::vector<std::vector<Rat>> id3 = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(rational_rank(id3) == 3);
  std::vector<std::vector<Rat>> sing = {
      {1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rational_rank(sing) == 2);
}
