/// Group-layer tests: closed-form product against the defining matrix
/// realization, factorization, cocycle, and the SU(2) double cover.

#include "hamrep/groups.hpp"
#include "hamrep/liealg.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <random>

using namespace hamrep;

namespace {
GroupParams zero_central(GroupParams g) {
  g.iota = g.s = g.u = 0;
  return g;
}
}  // namespace

TEST_CASE("identity and inverse") {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 3}) {
    const GroupParams e = GroupParams::identity(n);
    const GroupParams g = random_element(n, rng);
    const double tol = 1e-12;
    CHECK((to_matrix(product(g, e)) - to_matrix(g)).cwiseAbs().maxCoeff() <
          tol);
    CHECK((to_matrix(product(e, g)) - to_matrix(g)).cwiseAbs().maxCoeff() <
          tol);
    CHECK((to_matrix(product(g, inverse(g))) -
           Eigen::MatrixXd::Identity(2 * n + 6, 2 * n + 6))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("closed-form product matches the matrix realization") {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 3}) {
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
      const GroupParams a = random_element(n, rng);
      const GroupParams b = random_element(n, rng);
      worst = std::max(worst, (to_matrix(product(a, b)) -
                               to_matrix(a) * to_matrix(b))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    INFO("n=" << n);
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("product is associative") {
  std::mt19937_64 rng(13);
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    const GroupParams a = random_element(3, rng);
    const GroupParams b = random_element(3, rng);
    const GroupParams c = random_element(3, rng);
    worst = std::max(worst, (to_matrix(product(product(a, b), c)) -
                             to_matrix(product(a, product(b, c))))
                                .cwiseAbs()
                                .maxCoeff());
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("matrix generators reproduce the structure constants exactly") {
  for (int n : {1, 2}) {
    const LieAlgebraSpec alg = builtin_algebra(Family::QuantumHamilton, n);
    const auto gen = matrix_log_generators(n);
    REQUIRE(int(gen.size()) == alg.dim);
    for (int a = 0; a < alg.dim; ++a)
      for (int b = 0; b < alg.dim; ++b) {
        Eigen::MatrixXd lhs = gen[a] * gen[b] - gen[b] * gen[a];
        for (int k = 0; k < alg.dim; ++k)
          if (alg.c[a][b][k] != 0) lhs -= alg.c[a][b][k].get_d() * gen[k];
        INFO(alg.basis[a] << "," << alg.basis[b]);
        CHECK(lhs.cwiseAbs().maxCoeff() == 0.0);
      }
  }
}

TEST_CASE("factorization recomposes the element") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const GroupParams g = random_element(3, rng);
    const Factorization f = factorize(g);
    const GroupParams recomposed =
        product(product(product(f.upsilon_h, f.a2), f.upsilon_k), f.rot);
    CHECK((to_matrix(recomposed) - to_matrix(g)).cwiseAbs().maxCoeff() <=
          1e-9);
  }
}

TEST_CASE("cocycle matches the central part of the section product") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 20; ++t) {
    const GroupParams a = zero_central(random_element(3, rng));
    const GroupParams b = zero_central(random_element(3, rng));
    const GroupParams ab = product(a, b);
    const auto w = cocycle(a, b);
    CHECK(std::abs(w[0] - ab.iota) <= 1e-12);
    CHECK(std::abs(w[1] - ab.s) <= 1e-12);
    CHECK(std::abs(w[2] - ab.u) <= 1e-12);
  }
}

TEST_CASE("2-cocycle identity") {
  std::mt19937_64 rng(23);
  double worst = 0;
  for (int t = 0; t < 200; ++t) {
    const GroupParams a = zero_central(random_element(3, rng));
    const GroupParams b = zero_central(random_element(3, rng));
    const GroupParams c = zero_central(random_element(3, rng));
    const auto w_ab = cocycle(a, b);
    const auto w_bc = cocycle(b, c);
    const auto w_ab_c = cocycle(zero_central(product(a, b)), c);
    const auto w_a_bc = cocycle(a, zero_central(product(b, c)));
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst,
                       std::abs(w_ab[i] + w_ab_c[i] - w_bc[i] - w_a_bc[i]));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("su2_project is a 2:1 homomorphism onto SO(3)") {
  std::mt19937_64 rng(29);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const Eigen::Matrix2cd a = random_su2(rng), b = random_su2(rng);
    const Eigen::Matrix3d Ra = su2_project(a);
    CHECK((Ra * Ra.transpose() - Eigen::Matrix3d::Identity())
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    CHECK(Ra.determinant() == Catch::Approx(1.0).margin(1e-12));
    CHECK((su2_project(-a) - Ra).cwiseAbs().maxCoeff() <= 1e-14);
    worst = std::max(worst, (su2_project(a * b) - Ra * su2_project(b))
                                .cwiseAbs()
                                .maxCoeff());
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("wigner_d dimensions, homomorphism and center action") {
  std::mt19937_64 rng(31);
  for (int two_j : {0, 1, 2, 3, 6}) {
    const Eigen::Matrix2cd a = random_su2(rng), b = random_su2(rng);
    const Eigen::MatrixXcd da = wigner_d(two_j, a);
    REQUIRE(da.rows() == two_j + 1);
    CHECK((da * da.adjoint() -
           Eigen::MatrixXcd::Identity(two_j + 1, two_j + 1))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    CHECK((wigner_d(two_j, a * b) - da * wigner_d(two_j, b))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    const double sgn = (two_j % 2 == 0) ? 1.0 : -1.0;
    CHECK((wigner_d(two_j, -Eigen::Matrix2cd::Identity()) -
           sgn * Eigen::MatrixXcd::Identity(two_j + 1, two_j + 1))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
}

TEST_CASE("cover element projects consistently") {
  std::mt19937_64 rng(37);
  CoverParams g;
  g.Rbar = random_su2(rng);
  g.v << 0.1, -0.2, 0.3;
  g.r = 0.5;
  const GroupParams p = g.project();
  CHECK((p.R - su2_project(g.Rbar)).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(p.v(2) == 0.3);
  CHECK(p.r == 0.5);
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(41);
  const GroupParams g = random_element(3, rng);
  const GroupParams back = group_from_json(group_to_json(g));
  CHECK((to_matrix(back) - to_matrix(g)).cwiseAbs().maxCoeff() <= 1e-15);
}
