/// @file  repops.cpp
/// @brief Quadratic-phase operator algebra: composition, inversion,
///        differential-operator commutators, and exact exponentiation.

#include "hamrep/repops.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace hamrep {

QuadPhaseOperator::QuadPhaseOperator(int n_) : n(n_), phase(n_) {
  if (n < 1) throw Error("QuadPhaseOperator: n must be >= 1");
  rot = Eigen::MatrixXd::Identity(n, n);
  shift_a = Eigen::VectorXd::Zero(n);
  shift_b = Eigen::VectorXd::Zero(n);
}

void QuadPhaseOperator::validate() const {
  const double dev =
      (rot.transpose() * rot - Eigen::MatrixXd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  if (dev > 1e-12) throw Error("QuadPhaseOperator: rot not orthogonal");
}

bool is_space_only(const QuadPhaseOperator& u, double tol) {
  return std::abs(u.tau) <= tol && u.shift_b.cwiseAbs().maxCoeff() <= tol &&
         std::abs(u.phase.c2) <= tol && std::abs(u.phase.c3) <= tol &&
         u.phase.c4.cwiseAbs().maxCoeff() <= tol &&
         std::abs(u.phase.cxx) <= tol;
}

QuadPhaseOperator substitution_operator(const Eigen::MatrixXd& rot) {
  QuadPhaseOperator u(static_cast<int>(rot.rows()));
  u.rot = rot;
  u.validate();
  return u;
}

namespace {

/// Pullback of P through the substitution x -> rot^{-1} x + a + b t,
/// t -> t + tau (the argument map of a QuadPhaseOperator with those fields).
PhasePoly pull_phase(const PhasePoly& p, const Eigen::MatrixXd& rot,
                     const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                     double tau) {
  PhasePoly out(static_cast<int>(a.size()));
  out.c0 = p.c0 + p.c1.dot(a) + p.c2 * tau + p.c3 * tau * tau +
           tau * p.c4.dot(a) + p.cxx * a.squaredNorm();
  out.c1 = rot * p.c1 + tau * (rot * p.c4) + 2.0 * p.cxx * (rot * a);
  out.c2 = p.c2 + 2.0 * p.c3 * tau + p.c4.dot(a) + tau * p.c4.dot(b) +
           p.c1.dot(b) + 2.0 * p.cxx * a.dot(b);
  out.c3 = p.c3 + p.c4.dot(b) + p.cxx * b.squaredNorm();
  out.c4 = rot * p.c4 + 2.0 * p.cxx * (rot * b);
  out.cxx = p.cxx;
  return out;
}

PhasePoly phase_add(const PhasePoly& x, const PhasePoly& y) {
  PhasePoly out = x;
  out.c0 += y.c0;
  out.c1 += y.c1;
  out.c2 += y.c2;
  out.c3 += y.c3;
  out.c4 += y.c4;
  out.cxx += y.cxx;
  return out;
}

PhasePoly phase_neg(const PhasePoly& x) {
  PhasePoly out = x;
  out.c0 = -out.c0;
  out.c1 = -out.c1;
  out.c2 = -out.c2;
  out.c3 = -out.c3;
  out.c4 = -out.c4;
  out.cxx = -out.cxx;
  return out;
}

}  // namespace

QuadPhaseOperator compose(const QuadPhaseOperator& u1,
                          const QuadPhaseOperator& u2) {
  if (u1.n != u2.n) throw Error("compose: dimension mismatch");
  QuadPhaseOperator out(u1.n);
  const Eigen::MatrixXd rot2inv = u2.rot.transpose();
  out.rot = u1.rot * u2.rot;
  out.shift_a = rot2inv * u1.shift_a + u2.shift_a + u2.shift_b * u1.tau;
  out.shift_b = rot2inv * u1.shift_b + u2.shift_b;
  out.tau = u1.tau + u2.tau;
  out.phase = phase_add(
      u1.phase, pull_phase(u2.phase, u1.rot, u1.shift_a, u1.shift_b, u1.tau));
  return out;
}

QuadPhaseOperator invert(const QuadPhaseOperator& u) {
  QuadPhaseOperator out(u.n);
  out.rot = u.rot.transpose();
  out.tau = -u.tau;
  out.shift_b = -(u.rot * u.shift_b);
  out.shift_a = -(u.rot * u.shift_a) + u.tau * (u.rot * u.shift_b);
  // P_inv = -P composed with the inverse argument map (which is exactly the
  // argument map of `out`).
  out.phase =
      phase_neg(pull_phase(u.phase, out.rot, out.shift_a, out.shift_b, out.tau));
  return out;
}

double quadphase_distance(const QuadPhaseOperator& a,
                          const QuadPhaseOperator& b) {
  if (a.n != b.n) throw Error("quadphase_distance: dimension mismatch");
  double d = (a.rot - b.rot).cwiseAbs().maxCoeff();
  d = std::max(d, (a.shift_a - b.shift_a).cwiseAbs().maxCoeff());
  d = std::max(d, (a.shift_b - b.shift_b).cwiseAbs().maxCoeff());
  d = std::max(d, std::abs(a.tau - b.tau));
  // The constant phase is physical modulo 2*pi.
  const double two_pi = 2.0 * M_PI;
  double dc0 = std::remainder(a.phase.c0 - b.phase.c0, two_pi);
  d = std::max(d, std::abs(dc0));
  d = std::max(d, (a.phase.c1 - b.phase.c1).cwiseAbs().maxCoeff());
  d = std::max(d, std::abs(a.phase.c2 - b.phase.c2));
  d = std::max(d, std::abs(a.phase.c3 - b.phase.c3));
  d = std::max(d, (a.phase.c4 - b.phase.c4).cwiseAbs().maxCoeff());
  d = std::max(d, std::abs(a.phase.cxx - b.phase.cxx));
  return d;
}

std::vector<std::complex<double>> apply_to_samples(
    const QuadPhaseOperator& u,
    const std::function<std::complex<double>(const Eigen::VectorXd&, double)>&
        f,
    const std::vector<std::pair<Eigen::VectorXd, double>>& grid) {
  if (grid.empty()) throw Error("apply_to_samples: empty grid");
  const Eigen::MatrixXd rinv = u.rot.transpose();
  std::vector<std::complex<double>> out;
  out.reserve(grid.size());
  for (const auto& [x, t] : grid) {
    const Eigen::VectorXd arg = rinv * x + u.shift_a + u.shift_b * t;
    out.push_back(std::exp(std::complex<double>(0.0, u.phase.eval(x, t))) *
                  f(arg, t + u.tau));
  }
  return out;
}

DiffOp::DiffOp(int n_) : n(n_), mult(n_) {
  if (n < 1) throw Error("DiffOp: n must be >= 1");
  dx_const = Eigen::VectorXcd::Zero(n);
  dx_linear_t = Eigen::VectorXcd::Zero(n);
  dx_rot = Eigen::MatrixXcd::Zero(n, n);
}

DiffOp diff_axpy(const DiffOp& a, std::complex<double> s, const DiffOp& b) {
  if (a.n != b.n) throw Error("diff_axpy: dimension mismatch");
  DiffOp out = a;
  out.mult.c0 += s * b.mult.c0;
  out.mult.c1 += s * b.mult.c1;
  out.mult.c2 += s * b.mult.c2;
  out.mult.c3 += s * b.mult.c3;
  out.mult.c4 += s * b.mult.c4;
  out.mult.cxx += s * b.mult.cxx;
  out.dx_const += s * b.dx_const;
  out.dx_linear_t += s * b.dx_linear_t;
  out.dx_rot += s * b.dx_rot;
  out.dt += s * b.dt;
  return out;
}

namespace {

/// Non-conjugating dot product for complex vectors.
std::complex<double> cdot(const Eigen::VectorXcd& a,
                          const Eigen::VectorXcd& b) {
  return (a.transpose() * b)(0);
}

/// Derivation action of the vector-field part of d on the multiplier A:
/// (dx_const + dx_linear_t t + dx_rot x).dA/dx + dt dA/dt.
CPhasePoly derive_mult(const DiffOp& d, const CPhasePoly& a) {
  CPhasePoly out(d.n);
  out.c0 = cdot(d.dx_const, a.c1) + d.dt * a.c2;
  out.c1 = d.dx_rot.transpose() * a.c1 + 2.0 * a.cxx * d.dx_const +
           d.dt * a.c4;
  out.c2 = cdot(d.dx_const, a.c4) + cdot(d.dx_linear_t, a.c1) +
           2.0 * d.dt * a.c3;
  out.c3 = cdot(d.dx_linear_t, a.c4);
  out.c4 = d.dx_rot.transpose() * a.c4 + 2.0 * a.cxx * d.dx_linear_t;
  // (dx_rot x).(2 cxx x) = cxx x^T (dx_rot + dx_rot^T) x leaves the family
  // unless the symmetric part vanishes (it always does: x-linear flows are
  // rotations, |x|^2 multipliers only arise with trivial dx_rot).
  if (a.cxx != 0.0) {
    const Eigen::MatrixXcd sym = d.dx_rot + d.dx_rot.transpose();
    if (sym.cwiseAbs().maxCoeff() > 1e-12)
      throw Error("diff_commutator: |x|^2 multiplier against non-rotational "
                  "x-linear flow leaves the coefficient family");
  }
  return out;
}

CPhasePoly cphase_sub(const CPhasePoly& x, const CPhasePoly& y) {
  CPhasePoly out = x;
  out.c0 -= y.c0;
  out.c1 -= y.c1;
  out.c2 -= y.c2;
  out.c3 -= y.c3;
  out.c4 -= y.c4;
  out.cxx -= y.cxx;
  return out;
}

}  // namespace

DiffOp diff_commutator(const DiffOp& d1, const DiffOp& d2) {
  if (d1.n != d2.n) throw Error("diff_commutator: dimension mismatch");
  DiffOp out(d1.n);
  out.mult = cphase_sub(derive_mult(d1, d2.mult), derive_mult(d2, d1.mult));
  out.dx_const = d2.dx_rot * d1.dx_const - d1.dx_rot * d2.dx_const +
                 d1.dt * d2.dx_linear_t - d2.dt * d1.dx_linear_t;
  out.dx_linear_t = d2.dx_rot * d1.dx_linear_t - d1.dx_rot * d2.dx_linear_t;
  out.dx_rot = d2.dx_rot * d1.dx_rot - d1.dx_rot * d2.dx_rot;
  out.dt = 0;
  return out;
}

double diffop_distance(const DiffOp& a, const DiffOp& b) {
  if (a.n != b.n) throw Error("diffop_distance: dimension mismatch");
  double d = std::abs(a.mult.c0 - b.mult.c0);
  d = std::max(d, (a.mult.c1 - b.mult.c1).cwiseAbs().maxCoeff());
  d = std::max(d, std::abs(a.mult.c2 - b.mult.c2));
  d = std::max(d, std::abs(a.mult.c3 - b.mult.c3));
  d = std::max(d, (a.mult.c4 - b.mult.c4).cwiseAbs().maxCoeff());
  d = std::max(d, std::abs(a.mult.cxx - b.mult.cxx));
  d = std::max(d, (a.dx_const - b.dx_const).cwiseAbs().maxCoeff());
  d = std::max(d, (a.dx_linear_t - b.dx_linear_t).cwiseAbs().maxCoeff());
  d = std::max(d, (a.dx_rot - b.dx_rot).cwiseAbs().maxCoeff());
  d = std::max(d, std::abs(a.dt - b.dt));
  return d;
}

namespace {

Eigen::VectorXd real_or_throw(const Eigen::VectorXcd& v, const char* what) {
  if (v.imag().cwiseAbs().maxCoeff() > 1e-12)
    throw Error(std::string("exponentiate: non-real ") + what);
  return v.real();
}

double real_or_throw(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > 1e-12)
    throw Error(std::string("exponentiate: non-real ") + what);
  return z.real();
}

}  // namespace

QuadPhaseOperator exponentiate(const DiffOp& d) {
  const int n = d.n;
  if (d.dx_rot.cwiseAbs().maxCoeff() > 1e-14)
    throw UnsupportedGeneratorShape(
        "exponentiate: x-linear (rotation) flows are applied as substitution "
        "operators, not exponentials");
  // The flow of i * (vector-field part): d chi/ds = w0 + w1 t(s),
  // dt/ds = wt, all real for unitary generators.
  const Eigen::VectorXd w0 =
      real_or_throw(std::complex<double>(0, 1) * d.dx_const, "x-flow");
  const Eigen::VectorXd w1 =
      real_or_throw(std::complex<double>(0, 1) * d.dx_linear_t, "x-flow");
  const double wt = real_or_throw(std::complex<double>(0, 1) * d.dt, "t-flow");

  QuadPhaseOperator u(n);
  u.shift_b = w1;
  u.shift_a = w0 + 0.5 * wt * w1;
  u.tau = wt;

  // Real multiplier A, integrated exactly along the flow:
  // Phi(x,t) = int_0^1 A(x + sigma w0 + (t sigma + wt sigma^2/2) w1,
  //                      t + wt sigma) d sigma.
  PhasePoly a(n);
  a.c0 = real_or_throw(d.mult.c0, "multiplier");
  a.c1 = real_or_throw(d.mult.c1, "multiplier");
  a.c2 = real_or_throw(d.mult.c2, "multiplier");
  a.c3 = real_or_throw(d.mult.c3, "multiplier");
  a.c4 = real_or_throw(d.mult.c4, "multiplier");
  a.cxx = real_or_throw(d.mult.cxx, "multiplier");

  // 8-point Gauss-Legendre on [0,1]: exact for the (degree <= 4 in sigma)
  // coefficient integrands.
  static const double gl_x[8] = {
      0.01985507175123188, 0.10166676129318664, 0.2372337950418355,
      0.4082826787521751,  0.5917173212478249,  0.7627662049581645,
      0.8983332387068134,  0.9801449282487682};
  static const double gl_w[8] = {
      0.05061426814518813, 0.11119051722668723, 0.15685332293894364,
      0.18134189168918097, 0.18134189168918097, 0.15685332293894364,
      0.11119051722668723, 0.05061426814518813};
  PhasePoly total(n);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  for (int k = 0; k < 8; ++k) {
    const double s = gl_x[k];
    // Substitution x -> x + a(s) + b(s) t, t -> t + tau(s) matches the
    // pull_phase map with rot = I.
    const Eigen::VectorXd as = s * w0 + 0.5 * wt * s * s * w1;
    const Eigen::VectorXd bs = s * w1;
    const PhasePoly at = pull_phase(a, id, as, bs, s * wt);
    PhasePoly contrib = at;
    contrib.c0 *= gl_w[k];
    contrib.c1 *= gl_w[k];
    contrib.c2 *= gl_w[k];
    contrib.c3 *= gl_w[k];
    contrib.c4 *= gl_w[k];
    contrib.cxx *= gl_w[k];
    total = phase_add(total, contrib);
  }
  u.phase = total;
  return u;
}

nlohmann::json quadphase_to_json(const QuadPhaseOperator& u) {
  nlohmann::json j;
  j["n"] = u.n;
  std::vector<double> rrow;
  for (int i = 0; i < u.n; ++i)
    for (int k = 0; k < u.n; ++k) rrow.push_back(u.rot(i, k));
  j["rot"] = rrow;
  auto vec = [](const Eigen::VectorXd& x) {
    return std::vector<double>(x.data(), x.data() + x.size());
  };
  j["shift_a"] = vec(u.shift_a);
  j["shift_b"] = vec(u.shift_b);
  j["tau"] = u.tau;
  j["phase"] = {{"c0", u.phase.c0}, {"c1", vec(u.phase.c1)},
                {"c2", u.phase.c2}, {"c3", u.phase.c3},
                {"c4", vec(u.phase.c4)}, {"cxx", u.phase.cxx}};
  return j;
}

QuadPhaseOperator quadphase_from_json(const nlohmann::json& j) {
  QuadPhaseOperator u(j.at("n").get<int>());
  const auto rrow = j.at("rot").get<std::vector<double>>();
  if (static_cast<int>(rrow.size()) != u.n * u.n)
    throw Error("quadphase_from_json: rot has wrong size");
  for (int i = 0; i < u.n; ++i)
    for (int k = 0; k < u.n; ++k) u.rot(i, k) = rrow[i * u.n + k];
  auto vec = [&](const nlohmann::json& src, Eigen::VectorXd& out) {
    const auto x = src.get<std::vector<double>>();
    if (static_cast<int>(x.size()) != u.n)
      throw Error("quadphase_from_json: bad vector size");
    for (int i = 0; i < u.n; ++i) out(i) = x[i];
  };
  vec(j.at("shift_a"), u.shift_a);
  vec(j.at("shift_b"), u.shift_b);
  u.tau = j.at("tau");
  const auto& ph = j.at("phase");
  u.phase.c0 = ph.at("c0");
  vec(ph.at("c1"), u.phase.c1);
  u.phase.c2 = ph.at("c2");
  u.phase.c3 = ph.at("c3");
  vec(ph.at("c4"), u.phase.c4);
  u.phase.cxx = ph.at("cxx");
  u.validate();
  return u;
}

}  // namespace hamrep
