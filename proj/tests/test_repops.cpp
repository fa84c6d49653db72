/// Operator-layer tests: quadratic-phase composition and inversion,
/// first-order operator commutators (Heisenberg relations), exponentiation
/// against the flow oracle, sampling and JSON round trips.

#include "hamrep/repops.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <random>

using namespace hamrep;
using C = std::complex<double>;
static const C kI{0.0, 1.0};

namespace {

QuadPhaseOperator random_op(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> un(-1.5, 1.5);
  QuadPhaseOperator u(n);
  if (n == 3) {
    std::normal_distribution<double> nd;
    Eigen::Vector4d qv;
    for (int i = 0; i < 4; ++i) qv(i) = nd(rng);
    qv.normalize();
    const double w = qv(0), x = qv(1), y = qv(2), z = qv(3);
    u.rot << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
        2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
        2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  }
  for (int i = 0; i < n; ++i) {
    u.shift_a(i) = un(rng);
    u.shift_b(i) = un(rng);
    u.phase.c1(i) = un(rng);
    u.phase.c4(i) = un(rng);
  }
  u.tau = un(rng);
  u.phase.c0 = un(rng);
  u.phase.c2 = un(rng);
  u.phase.c3 = un(rng);
  return u;
}

}  // namespace

TEST_CASE("compose with identity and two-sided inverse") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const QuadPhaseOperator u = random_op(3, rng);
    const QuadPhaseOperator e = QuadPhaseOperator::identity(3);
    CHECK(quadphase_distance(compose(u, e), u) <= 1e-12);
    CHECK(quadphase_distance(compose(e, u), u) <= 1e-12);
    CHECK(quadphase_distance(compose(u, invert(u)), e) <= 1e-10);
    CHECK(quadphase_distance(compose(invert(u), u), e) <= 1e-10);
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const QuadPhaseOperator a = random_op(3, rng);
    const QuadPhaseOperator b = random_op(3, rng);
    const QuadPhaseOperator c = random_op(3, rng);
    CHECK(quadphase_distance(compose(compose(a, b), c),
                             compose(a, compose(b, c))) <= 1e-10);
  }
}

TEST_CASE("pure phase inverts to the negated phase") {
  QuadPhaseOperator u(2);
  u.phase.c0 = 1.25;
  const QuadPhaseOperator v = invert(u);
  CHECK(v.phase.c0 == Catch::Approx(-1.25).margin(1e-15));
  CHECK(is_space_only(v));
}

TEST_CASE("substitution operator") {
  Eigen::Matrix3d R =
      Eigen::AngleAxisd(0.7, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  const QuadPhaseOperator u = substitution_operator(R);
  CHECK((u.rot - R).cwiseAbs().maxCoeff() == 0.0);
  CHECK(u.phase.c0 == 0.0);
  CHECK_THROWS_AS(substitution_operator(2.0 * R).validate(), Error);
}

TEST_CASE("Heisenberg relations hold exactly in coefficient arithmetic") {
  // Realized momentum/position and time/energy pairs at lambda = hbar = 1:
  // multiplication by the diagonal coordinate against -i d/dcoordinate.
  const int n = 3;
  const double lambda = 1.0, hbar = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      DiffOp p = DiffOp::zero(n);
      p.mult.c1(i) = 1.0;  // multiplication by the i-th coordinate
      DiffOp q = DiffOp::zero(n);
      q.dx_const(j) = -kI * lambda * hbar;
      const DiffOp comm = diff_commutator(p, q);
      const C expect = (i == j) ? kI * hbar * lambda : C(0);
      CHECK(comm.mult.c0 == expect);
      CHECK(comm.mult.c1.cwiseAbs().maxCoeff() == 0.0);
      CHECK(comm.dx_const.cwiseAbs().maxCoeff() == 0.0);
      CHECK(comm.dt == C(0));
    }
  DiffOp tt = DiffOp::zero(n);
  tt.mult.c2 = lambda;  // multiplication by t
  DiffOp ee = DiffOp::zero(n);
  ee.dt = -kI * hbar;
  const DiffOp comm = diff_commutator(tt, ee);
  CHECK(comm.mult.c0 == kI * hbar * lambda);
  CHECK(comm.mult.c2 == C(0));
  CHECK(comm.dt == C(0));
}

TEST_CASE("commutator antisymmetry and bilinearity") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> un(-1, 1);
  auto rand_d = [&](int n) {
    DiffOp d = DiffOp::zero(n);
    d.mult.c0 = C(un(rng), un(rng));
    for (int i = 0; i < n; ++i) {
      d.mult.c1(i) = C(un(rng), un(rng));
      d.dx_const(i) = C(un(rng), un(rng));
      d.dx_linear_t(i) = C(un(rng), un(rng));
    }
    d.mult.c2 = C(un(rng), un(rng));
    d.dt = C(un(rng), un(rng));
    return d;
  };
  for (int t = 0; t < 20; ++t) {
    const DiffOp a = rand_d(2), b = rand_d(2);
    const DiffOp ab = diff_commutator(a, b);
    const DiffOp ba = diff_commutator(b, a);
    CHECK(diffop_distance(diff_axpy(ab, C(1), ba), DiffOp::zero(2)) <=
          1e-13);
  }
}

TEST_CASE("exponentiate: pure phase and translation") {
  // e^{i c0} is the constant phase.
  DiffOp d = DiffOp::zero(2);
  d.mult.c0 = 0.8;
  QuadPhaseOperator u = exponentiate(d);
  CHECK(u.phase.c0 == Catch::Approx(0.8).margin(1e-12));
  CHECK(is_space_only(u));

  // exp(i (i w d/dx)) = exp(-w d/dx) evaluates at the argument shifted
  // by -w: psi(x - w) = psi(x + shift_a) with shift_a = -w.
  DiffOp s = DiffOp::zero(2);
  s.dx_const(0) = C(0.0, 0.6);
  QuadPhaseOperator v = exponentiate(s);
  CHECK(v.shift_a(0) == Catch::Approx(-0.6).margin(1e-12));
  CHECK(std::abs(v.phase.c0) <= 1e-12);
}

TEST_CASE("exponentiate halves compose to the whole") {
  // For a single vector field the time-0.5 and time-1 flows compose, giving
  // a closed-form oracle for the mixed time-dependent shapes.
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> un(-0.8, 0.8);
  for (int t = 0; t < 25; ++t) {
    DiffOp d = DiffOp::zero(2);
    d.mult.c0 = un(rng);
    d.mult.c2 = un(rng);
    d.mult.c3 = un(rng);
    d.dt = C(0, 1) * un(rng);
    for (int i = 0; i < 2; ++i) {
      d.mult.c1(i) = un(rng);
      d.mult.c4(i) = un(rng);
      d.dx_const(i) = C(0, 1) * un(rng);
      d.dx_linear_t(i) = C(0, 1) * un(rng);
    }
    const DiffOp half = diff_axpy(DiffOp::zero(2), C(0.5), d);
    const QuadPhaseOperator whole = exponentiate(d);
    const QuadPhaseOperator two_halves =
        compose(exponentiate(half), exponentiate(half));
    CHECK(quadphase_distance(whole, two_halves) <= 1e-10);
  }
}

TEST_CASE("exponentiate rejects rotational flows") {
  DiffOp d = DiffOp::zero(2);
  d.dx_rot(0, 1) = C(0, 1);
  d.dx_rot(1, 0) = C(0, -1);
  CHECK_THROWS_AS(exponentiate(d), UnsupportedGeneratorShape);
}

TEST_CASE("apply_to_samples semantics") {
  auto gauss = [](const Eigen::VectorXd& x, double) {
    return C(std::exp(-0.5 * x.squaredNorm()), 0.0);
  };
  std::vector<std::pair<Eigen::VectorXd, double>> grid;
  for (double x = -1; x <= 1; x += 0.5) {
    Eigen::VectorXd v(1);
    v(0) = x;
    grid.emplace_back(v, 0.25);
  }
  // Identity reproduces the source.
  const auto id_vals =
      apply_to_samples(QuadPhaseOperator::identity(1), gauss, grid);
  for (size_t i = 0; i < grid.size(); ++i)
    CHECK(std::abs(id_vals[i] - gauss(grid[i].first, grid[i].second)) <=
          1e-15);
  // A pure phase multiplies by a constant unit modulus factor.
  QuadPhaseOperator ph(1);
  ph.phase.c0 = 0.9;
  const auto ph_vals = apply_to_samples(ph, gauss, grid);
  for (size_t i = 0; i < grid.size(); ++i)
    CHECK(std::abs(ph_vals[i] - std::exp(kI * 0.9) * id_vals[i]) <= 1e-15);
  // A translation shifts the Gaussian.
  QuadPhaseOperator tr(1);
  tr.shift_a(0) = 0.5;
  const auto tr_vals = apply_to_samples(tr, gauss, grid);
  for (size_t i = 0; i < grid.size(); ++i) {
    Eigen::VectorXd shifted = grid[i].first;
    shifted(0) += 0.5;
    CHECK(std::abs(tr_vals[i] - gauss(shifted, grid[i].second)) <= 1e-15);
  }
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(21);
  const QuadPhaseOperator u = random_op(3, rng);
  const QuadPhaseOperator back = quadphase_from_json(quadphase_to_json(u));
  CHECK(quadphase_distance(u, back) == 0.0);
}
