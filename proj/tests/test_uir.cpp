/// Representation-layer tests: SU(2) conventions, realized-generator bracket
/// tables, homomorphism property, unitarity, double cover, the Galilei
/// embedding, conjugation invariance, Casimir eigenvalues and degenerate
/// label rejection.

#include "hamrep/uir.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

using namespace hamrep;
using C = std::complex<double>;
static const C kI{0.0, 1.0};

namespace {

RepLabels generic_labels() {
  RepLabels lb;
  lb.lambda = 0.7;
  lb.mu = 1.3;
  lb.alpha = -0.4;
  lb.kappa = 2.1;
  lb.hbar = 0.9;
  lb.two_j = 0;
  return lb;
}

CoverParams random_cover(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> un(-1, 1);
  CoverParams g;
  g.Rbar = random_su2(rng);
  for (int i = 0; i < 3; ++i) {
    g.v(i) = un(rng);
    g.f(i) = un(rng);
    g.q(i) = un(rng);
    g.p(i) = un(rng);
  }
  g.r = un(rng);
  g.t = un(rng);
  g.eps = un(rng);
  g.iota = un(rng);
  g.s = un(rng);
  g.u = un(rng);
  return g;
}

}  // namespace

TEST_CASE("su2_rotation_generator matches the SO(3) one-parameter subgroup") {
  for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}}) {
    const double th = 0.37;
    const Eigen::Matrix2cd g = su2_rotation_generator(i, j);
    const Eigen::Matrix3d R = su2_project(Eigen::Matrix2cd((th * g).exp()));
    Eigen::Matrix3d E = Eigen::Matrix3d::Zero();
    E(i - 1, j - 1) = 1;
    E(j - 1, i - 1) = -1;
    CHECK((R - Eigen::Matrix3d((th * E).exp())).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("su2_lift inverts su2_project up to the center") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Matrix2cd rb = random_su2(rng);
    const Eigen::Matrix3d R = su2_project(rb);
    const Eigen::Matrix2cd lift = su2_lift(R);
    CHECK((su2_project(lift) - R).cwiseAbs().maxCoeff() <= 1e-9);
    const double d1 = (lift - rb).cwiseAbs().maxCoeff();
    const double d2 = (lift + rb).cwiseAbs().maxCoeff();
    CHECK(std::min(d1, d2) <= 1e-9);
  }
}

TEST_CASE("wigner_d_derivative matches finite differences") {
  double worst = 0;
  for (int two_j : {1, 2, 3, 4})
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}}) {
      const Eigen::Matrix2cd g = su2_rotation_generator(i, j);
      const double h = 1e-5;
      const Eigen::MatrixXcd fd =
          (wigner_d(two_j, (h * g).exp()) - wigner_d(two_j, (-h * g).exp())) /
          (2 * h);
      worst = std::max(
          worst, (fd - wigner_d_derivative(two_j, g)).cwiseAbs().maxCoeff());
    }
  CHECK(worst <= 1e-7);
}

TEST_CASE("realized generators satisfy the bracket tables in all bases") {
  const LieAlgebraSpec alg = builtin_algebra(Family::QuantumHamilton, 3);
  for (auto tb : {TimeBasis::MomentumTime, TimeBasis::PositionTime})
    for (auto ib : {InternalBasis::ForceDiag, InternalBasis::VelocityDiag}) {
      RepLabels lb = generic_labels();
      lb.time_basis = tb;
      lb.internal_basis = ib;
      const AlgebraRep ar = algebra_rep(lb, 3);
      double worst_base = 0, worst_internal = 0;
      for (int a = 0; a < alg.dim; ++a)
        for (int b = 0; b < alg.dim; ++b) {
          DiffOp rhs = DiffOp::zero(3);
          DiffOp rhs_in = DiffOp::zero(3);
          for (int k = 0; k < alg.dim; ++k)
            if (alg.c[a][b][k] != 0) {
              const C w = -kI * C(alg.c[a][b][k].get_d(), 0);
              rhs = diff_axpy(rhs, w, ar.base.at(alg.basis[k]));
              rhs_in = diff_axpy(rhs_in, w, ar.internal_gen.at(alg.basis[k]));
            }
          worst_base = std::max(
              worst_base,
              diffop_distance(diff_commutator(ar.base.at(alg.basis[a]),
                                              ar.base.at(alg.basis[b])),
                              rhs));
          worst_internal = std::max(
              worst_internal,
              diffop_distance(
                  diff_commutator(ar.internal_gen.at(alg.basis[a]),
                                  ar.internal_gen.at(alg.basis[b])),
                  rhs_in));
        }
      INFO("time_basis=" << int(tb) << " internal_basis=" << int(ib));
      CHECK(worst_base <= 1e-12);
      CHECK(worst_internal <= 1e-12);
    }
}

TEST_CASE("spin matrices satisfy the rotation bracket table") {
  const LieAlgebraSpec alg = builtin_algebra(Family::QuantumHamilton, 3);
  RepLabels lb = generic_labels();
  lb.two_j = 2;
  const AlgebraRep ar = algebra_rep(lb, 3);
  const std::vector<std::string> js = {"J_12", "J_13", "J_23"};
  double worst = 0;
  for (const auto& la : js)
    for (const auto& lc : js) {
      const int a = alg.index_of(la), b = alg.index_of(lc);
      Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(3, 3);
      for (int k = 0; k < alg.dim; ++k)
        if (alg.c[a][b][k] != 0) {
          auto it = ar.spin.find(alg.basis[k]);
          if (it != ar.spin.end())
            rhs += -kI * C(alg.c[a][b][k].get_d(), 0) * it->second;
        }
      const Eigen::MatrixXcd lhs =
          ar.spin.at(la) * ar.spin.at(lc) - ar.spin.at(lc) * ar.spin.at(la);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  CHECK(worst <= 1e-12);
}

TEST_CASE("homomorphism property for every builder") {
  RepLabels lb = generic_labels();
  lb.two_j = 1;
  for (Family fam : {Family::WeylHeisenberg, Family::Hamilton,
                     Family::Galilei, Family::QuantumHamilton}) {
    const HomReport r = verify_homomorphism(fam, lb, 60, 11);
    INFO(r.family << " max_dev=" << r.max_dev);
    CHECK(r.pass);
    CHECK(r.max_dev <= 1e-9);
  }
  // Non-printed diagonal-basis combinations are property-tested too.
  for (auto tb : {TimeBasis::MomentumTime, TimeBasis::PositionTime})
    for (auto ib : {InternalBasis::ForceDiag, InternalBasis::VelocityDiag}) {
      RepLabels lb2 = generic_labels();
      lb2.two_j = 2;
      lb2.time_basis = tb;
      lb2.internal_basis = ib;
      const HomReport r =
          verify_homomorphism(Family::QuantumHamilton, lb2, 40, 12);
      INFO("tb=" << int(tb) << " ib=" << int(ib) << " dev=" << r.max_dev);
      CHECK(r.pass);
    }
}

TEST_CASE("representation values are structurally unitary") {
  std::mt19937_64 rng(19);
  RepLabels lb = generic_labels();
  lb.two_j = 3;
  for (int t = 0; t < 20; ++t) {
    const RepValue v = qha_rep(lb, random_cover(rng));
    CHECK_NOTHROW(assert_unitary_structure(v));
    CHECK(is_space_only(v.internal));
  }
}

TEST_CASE("double cover acts by (-1)^{2j} on the spin factor only") {
  std::mt19937_64 rng(23);
  for (int two_j : {0, 1, 2, 3}) {
    RepLabels lb = generic_labels();
    lb.two_j = two_j;
    const CoverParams g = random_cover(rng);
    CoverParams gneg = g;
    gneg.Rbar = -g.Rbar;
    const RepValue a = qha_rep(lb, g);
    const RepValue b = qha_rep(lb, gneg);
    const double sgn = (two_j % 2 == 0) ? 1.0 : -1.0;
    CHECK((b.dj - sgn * a.dj).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(quadphase_distance(a.internal, b.internal) <= 1e-12);
    CHECK(quadphase_distance(a.base, b.base) <= 1e-12);
  }
}

TEST_CASE("half-integer spin requires the cover overload") {
  RepLabels lb;  // two_j = 1
  GroupParams g(3);
  CHECK_THROWS_AS(hamilton_rep(lb, g), Error);
  CHECK_THROWS_AS(qha_rep(lb, g), Error);
  lb.two_j = 2;
  CHECK_NOTHROW(hamilton_rep(lb, g));
  CHECK_NOTHROW(qha_rep(lb, g));
}

TEST_CASE("degenerate labels name the carrying quotient") {
  const WHElement e(3);
  const GroupParams g(3);
  RepLabels lb;
  lb.two_j = 0;
  lb.lambda = 0;
  CHECK_THROWS_AS(wh_rep(lb, e), Error);
  CHECK_THROWS_AS(qha_rep(lb, g), Error);
  lb = RepLabels{};
  lb.two_j = 0;
  lb.kappa = 0;
  CHECK_THROWS_AS(hamilton_rep(lb, g), Error);
  CHECK_THROWS_AS(qha_rep(lb, g), Error);
  lb = RepLabels{};
  lb.two_j = 0;
  lb.mu = 0;
  CHECK_THROWS_AS(galilei_rep(lb, g), Error);
  CHECK_THROWS_AS(qha_rep(lb, g), Error);
}

TEST_CASE("Galilei representation embeds in the quantum Hamilton one") {
  // On the shared parameters (R, q, v, s) at t = eps = 0 and hbar = 1, the
  // quantum Hamilton base factor reproduces the Galilei one after the
  // boost/phase reflection (v, s) -> (-v, -s); the extra quantum Hamilton
  // phase coefficients live in the complementary sector and are excluded.
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> un(-1, 1);
  RepLabels lb;
  lb.two_j = 0;
  lb.lambda = 1.0;
  lb.mu = 1.7;
  lb.hbar = 1.0;
  for (int t = 0; t < 25; ++t) {
    CoverParams ga;
    ga.Rbar = random_su2(rng);
    for (int i = 0; i < 3; ++i) {
      ga.q(i) = un(rng);
      ga.v(i) = un(rng);
    }
    ga.s = un(rng);
    CoverParams qh = ga;
    qh.v = -ga.v;
    qh.s = -ga.s;
    const RepValue a = galilei_rep(lb, ga);
    const RepValue b = qha_rep(lb, qh);
    CHECK((a.base.rot - b.base.rot).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((a.base.shift_a - b.base.shift_a).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(std::abs(a.base.tau - b.base.tau) <= 1e-12);
    const double dc0 = std::remainder(
        a.base.phase.c0 + a.internal.phase.c0 - b.base.phase.c0 -
            b.internal.phase.c0,
        2 * M_PI);
    CHECK(std::abs(dc0) <= 1e-10);
    CHECK((a.base.phase.c1 - b.base.phase.c1).cwiseAbs().maxCoeff() <=
          1e-10);
  }
}

TEST_CASE("conjugation keeps generators in the catalog span") {
  std::mt19937_64 rng(31);
  RepLabels lb = generic_labels();
  const AlgebraRep ar = algebra_rep(lb, 3);
  const LieAlgebraSpec alg = builtin_algebra(Family::QuantumHamilton, 3);

  // Flatten a DiffOp into its coefficient vector (dx_rot vanishes for the
  // whole catalog and for conjugates of rotation-free generators).
  auto flatten = [](const DiffOp& d) {
    Eigen::VectorXcd v(2 * 3 + 4 + 2 * 3 + 1 + 1);
    int k = 0;
    v(k++) = d.mult.c0;
    for (int i = 0; i < 3; ++i) v(k++) = d.mult.c1(i);
    v(k++) = d.mult.c2;
    v(k++) = d.mult.c3;
    for (int i = 0; i < 3; ++i) v(k++) = d.mult.c4(i);
    v(k++) = d.mult.cxx;
    for (int i = 0; i < 3; ++i) v(k++) = d.dx_const(i);
    for (int i = 0; i < 3; ++i) v(k++) = d.dx_linear_t(i);
    v(k++) = d.dt;
    return v;
  };

  // Catalog matrix: all base generators plus the identity multiplier.
  std::vector<Eigen::VectorXcd> cols;
  for (const auto& label : alg.basis) cols.push_back(flatten(ar.base.at(label)));
  {
    DiffOp one = DiffOp::zero(3);
    one.mult.c0 = 1.0;
    cols.push_back(flatten(one));
  }
  Eigen::MatrixXcd A(cols[0].size(), cols.size());
  for (size_t i = 0; i < cols.size(); ++i) A.col(i) = cols[i];

  std::mt19937_64 grng(37);
  for (int t = 0; t < 10; ++t) {
    const RepValue U = qha_rep(lb, random_cover(grng));
    for (const char* label : {"P_1", "P_2", "Q_3", "T", "E"}) {
      const DiffOp conj = conjugate_diffop(U.base, ar.base.at(label));
      const Eigen::VectorXcd y = flatten(conj);
      const Eigen::VectorXcd x = A.colPivHouseholderQr().solve(y);
      CHECK((A * x - y).cwiseAbs().maxCoeff() <= 1e-9);
    }
    // The Heisenberg pairing is conjugation invariant.
    const DiffOp p1 = conjugate_diffop(U.base, ar.base.at("P_1"));
    const DiffOp q1 = conjugate_diffop(U.base, ar.base.at("Q_1"));
    CHECK(diffop_distance(diff_commutator(p1, q1),
                          diff_commutator(ar.base.at("P_1"),
                                          ar.base.at("Q_1"))) <= 1e-9);
  }
}

TEST_CASE("conjugation agrees with operator conjugation after exponentiation") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> un(-1, 1);
  RepLabels lb = generic_labels();
  const AlgebraRep ar = algebra_rep(lb, 3);
  double worst = 0;
  for (int t = 0; t < 10; ++t) {
    const RepValue U = qha_rep(lb, random_cover(rng));
    for (const char* label : {"Q_1", "P_2", "T", "E", "G_3", "F_1", "R"}) {
      const DiffOp d =
          diff_axpy(DiffOp::zero(3), C(un(rng), 0), ar.base.at(label));
      const QuadPhaseOperator lhs = exponentiate(conjugate_diffop(U.base, d));
      const QuadPhaseOperator rhs =
          compose(compose(U.base, exponentiate(d)), invert(U.base));
      worst = std::max(worst, quadphase_distance(lhs, rhs));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("Casimir eigenvalues match their closed forms") {
  RepLabels lb = generic_labels();
  lb.two_j = 3;
  lb.galilei_eps = 0.6;
  const double jj = 0.5 * lb.two_j * (0.5 * lb.two_j + 1);

  CHECK(casimir_eigenvalue(Family::WeylHeisenberg, lb, 1) ==
        Catch::Approx(lb.lambda).margin(1e-9));
  CHECK(casimir_eigenvalue(Family::Hamilton, lb, 1) ==
        Catch::Approx(lb.kappa).margin(1e-9));
  CHECK(casimir_eigenvalue(Family::Hamilton, lb, 2) ==
        Catch::Approx(lb.kappa * lb.kappa * jj).margin(1e-9));
  CHECK(casimir_eigenvalue(Family::Galilei, lb, 1) ==
        Catch::Approx(lb.mu).margin(1e-9));
  CHECK(casimir_eigenvalue(Family::Galilei, lb, 2) ==
        Catch::Approx(2 * lb.mu * lb.galilei_eps).margin(1e-9));
  CHECK(casimir_eigenvalue(Family::Galilei, lb, 3) ==
        Catch::Approx(lb.mu * lb.mu * jj).margin(1e-9));
  CHECK(casimir_eigenvalue(Family::QuantumHamilton, lb, 1) ==
        Catch::Approx(lb.lambda).margin(1e-9));
  CHECK(casimir_eigenvalue(Family::QuantumHamilton, lb, 2) ==
        Catch::Approx(lb.mu).margin(1e-9));
  CHECK(casimir_eigenvalue(Family::QuantumHamilton, lb, 3) ==
        Catch::Approx(lb.alpha).margin(1e-9));
  CHECK(casimir_eigenvalue(Family::QuantumHamilton, lb, 4) ==
        Catch::Approx(lb.kappa * lb.lambda - lb.mu * lb.alpha).margin(1e-9));
  // The quartic spin invariant is scalar with coefficient (lambda*kappa)^2.
  CHECK(casimir_eigenvalue(Family::QuantumHamilton, lb, 5) ==
        Catch::Approx(lb.lambda * lb.kappa * lb.lambda * lb.kappa * jj)
            .margin(1e-9));
}
