#ifndef HAMREP_REPOPS_HPP
#define HAMREP_REPOPS_HPP

/// @file  repops.hpp
/// @brief Exact operator algebra for representation values: quadratic-phase
///        multipliers composed with affine substitutions on functions over
///        R^n x R, plus first-order differential operators and their
///        exponentials.  Operators are carried symbolically as coefficient
///        records; grids appear only in apply_to_samples.

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "hamrep/rational.hpp"

#include <nlohmann/json_fwd.hpp>

namespace hamrep {

/// Real phase polynomial
///   P(x, t) = c0 + c1.x + c2 t + c3 t^2 + (c4.x) t + cxx |x|^2.
/// The |x|^2 coefficient exists only for the Galilei dispersion term; it is
/// zero in every other builder and the family stays closed either way.
struct PhasePoly {
  double c0 = 0;
  Eigen::VectorXd c1;
  double c2 = 0, c3 = 0;
  Eigen::VectorXd c4;
  double cxx = 0;

  PhasePoly() = default;
  explicit PhasePoly(int n)
      : c1(Eigen::VectorXd::Zero(n)), c4(Eigen::VectorXd::Zero(n)) {}

  double eval(const Eigen::VectorXd& x, double t) const {
    return c0 + c1.dot(x) + c2 * t + c3 * t * t + c4.dot(x) * t +
           cxx * x.squaredNorm();
  }
};

/// Complex phase polynomial with the same shape (DiffOp multipliers pick up
/// factors of i under commutators).
struct CPhasePoly {
  using C = std::complex<double>;
  C c0 = 0;
  Eigen::VectorXcd c1;
  C c2 = 0, c3 = 0;
  Eigen::VectorXcd c4;
  C cxx = 0;

  CPhasePoly() = default;
  explicit CPhasePoly(int n)
      : c1(Eigen::VectorXcd::Zero(n)), c4(Eigen::VectorXcd::Zero(n)) {}
};

/// (U psi)(x, t) = e^{i P(x,t)} psi(rot^{-1} x + shift_a + shift_b t,
///                                 t + tau).
struct QuadPhaseOperator {
  int n = 0;
  Eigen::MatrixXd rot;
  Eigen::VectorXd shift_a, shift_b;
  double tau = 0;
  PhasePoly phase;

  QuadPhaseOperator() = default;
  explicit QuadPhaseOperator(int n_);
  static QuadPhaseOperator identity(int n_) { return QuadPhaseOperator(n_); }

  /// Throws Error unless rot is orthogonal to 1e-12.
  void validate() const;
};

/// An operator acting on functions of x only: tau, shift_b, c2, c3, c4 (and
/// cxx) all zero.  The zeroed fields stay zero under composition.
using SpaceOnlyOperator = QuadPhaseOperator;

/// True iff the time-acting fields vanish to `tol`.
bool is_space_only(const QuadPhaseOperator& u, double tol = 1e-12);

/// Pure substitution psi -> psi(rot^{-1} x).
QuadPhaseOperator substitution_operator(const Eigen::MatrixXd& rot);

/// (u1 o u2) psi = u1(u2 psi); exact in the coefficient family.
QuadPhaseOperator compose(const QuadPhaseOperator& u1,
                          const QuadPhaseOperator& u2);

/// Two-sided inverse: compose(u, invert(u)) = identity exactly.
QuadPhaseOperator invert(const QuadPhaseOperator& u);

/// Max absolute coefficient deviation between two operators (c0 compared
/// modulo 2*pi).
double quadphase_distance(const QuadPhaseOperator& a,
                          const QuadPhaseOperator& b);

/// Pointwise evaluation e^{iP(x,t)} f(rot^{-1}x + shift_a + shift_b t,
/// t + tau) on a caller-supplied analytic sample source.
std::vector<std::complex<double>> apply_to_samples(
    const QuadPhaseOperator& u,
    const std::function<std::complex<double>(const Eigen::VectorXd&, double)>&
        f,
    const std::vector<std::pair<Eigen::VectorXd, double>>& grid);

/// First-order differential operator
///   D = A(x,t) + (dx_const + dx_linear_t t + dx_rot x) . d/dx + dt d/dt
/// with A a complex phase polynomial.  The family is closed under
/// commutators (the only obstruction, |x|^2 multipliers against symmetric
/// x-linear flows, never occurs for the represented algebras and is checked).
struct DiffOp {
  int n = 0;
  CPhasePoly mult;
  Eigen::VectorXcd dx_const, dx_linear_t;
  Eigen::MatrixXcd dx_rot;
  std::complex<double> dt = 0;

  DiffOp() = default;
  explicit DiffOp(int n_);
  static DiffOp zero(int n_) { return DiffOp(n_); }
};

/// a + s*b (coefficient-wise).
DiffOp diff_axpy(const DiffOp& a, std::complex<double> s, const DiffOp& b);

/// d1 d2 - d2 d1, computed symbolically within the family.
/// Throws Error on the (unreachable for cataloged generators) closure
/// violation.
DiffOp diff_commutator(const DiffOp& d1, const DiffOp& d2);

/// Max absolute coefficient deviation.
double diffop_distance(const DiffOp& a, const DiffOp& b);

/// e^{iD}: time-1 flow of the affine argument ODE (solved in closed form)
/// with the phase as the exact path integral of the multiplier along the
/// flow (Gauss-Legendre, exact for the polynomial integrands that occur).
/// dx_rot must vanish (rotations enter representations as substitution
/// operators, not exponentials): throws UnsupportedGeneratorShape otherwise,
/// and Error if the flow or phase would be non-real.
QuadPhaseOperator exponentiate(const DiffOp& d);

/// JSON round-trip of the coefficient record (golden tests).
nlohmann::json quadphase_to_json(const QuadPhaseOperator& u);
QuadPhaseOperator quadphase_from_json(const nlohmann::json& j);

}  // namespace hamrep

#endif  // HAMREP_REPOPS_HPP
