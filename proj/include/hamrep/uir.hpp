#ifndef HAMREP_UIR_HPP
#define HAMREP_UIR_HPP

/// @file  uir.hpp
/// @brief Builders for the nondegenerate projective unitary irreducible
///        representations of the Weyl-Heisenberg, Hamilton, Galilei and
///        quantum Hamilton groups, with homomorphism verification,
///        Heisenberg-relation checks and Casimir-eigenvalue evaluation.
///
/// Conventions.  Every builder is the exponential of the derived
/// representation: for a one-parameter subgroup exp(theta X) the operator is
/// exp(i theta X_op) where X_op ("the realized generator") is fixed by the
/// bracket table [X_op, Y_op] = -i c^k_{XY} Z_op(k) together with the central
/// characters I -> lambda, M -> mu, A -> alpha and the internal Hamilton
/// sector character R -> kappa.  Closed-form coordinate conventions that a
/// naive reading would suggest differ from this construction in a few signs;
/// verify_homomorphism reports record the adjudications in notes[].

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "hamrep/groups.hpp"
#include "hamrep/liealg.hpp"
#include "hamrep/polydiff.hpp"
#include "hamrep/rational.hpp"
#include "hamrep/repops.hpp"

#include <nlohmann/json_fwd.hpp>

namespace hamrep {

/// Which coordinate is diagonal on the (base, time) factor.
enum class TimeBasis { MomentumTime, PositionTime };
/// Which coordinate is diagonal on the internal Hamilton-sector factor.
enum class InternalBasis { ForceDiag, VelocityDiag };

/// Representation labels (lambda, mu, alpha, kappa, j) plus hbar and the
/// diagonal-basis choice.  galilei_eps is the extra energy label of the
/// Galilei representation (default 0, the value used when comparing with the
/// quantum Hamilton embedding).
struct RepLabels {
  double lambda = 1.0;  ///< eigenvalue of I (physical value 1)
  double mu = 1.0;      ///< mass, eigenvalue of M
  double alpha = 1.0;   ///< eigenvalue of A
  double kappa = 1.0;   ///< eigenvalue of R in the internal Hamilton sector
  int two_j = 1;        ///< 2j, nonnegative integer
  double hbar = 1.0;
  TimeBasis time_basis = TimeBasis::MomentumTime;
  InternalBasis internal_basis = InternalBasis::ForceDiag;
  double galilei_eps = 0.0;

  void validate() const;  ///< throws Error on hbar <= 0 or two_j < 0
};

/// A representation value: D^j spin factor, internal Hamilton-sector factor
/// (space-only), and base factor on (p~ or q~, t~) space.  Canonical form
/// keeps internal.phase.c0 = 0 with the constant consolidated into base.
struct RepValue {
  Eigen::MatrixXcd dj;
  SpaceOnlyOperator internal;
  QuadPhaseOperator base;
};

/// Moves internal.phase.c0 into base.phase.c0.
void canonicalize(RepValue& v);

/// Factor-wise composition (dj matrix product, operator compositions),
/// returned in canonical form.
RepValue rep_compose(const RepValue& a, const RepValue& b);

/// Max deviation across the three factors (constant phases mod 2*pi).
double rep_distance(const RepValue& a, const RepValue& b);

/// Structural unitarity: orthogonal substitutions, real phases, unitary dj.
/// Throws Error on violation.
void assert_unitary_structure(const RepValue& v, double tol = 1e-9);

/// An element (a, b, iota) of the Weyl-Heisenberg group H(n) with product
/// (a',b',i')(a,b,i) = (a'+a, b'+b, i'+i+(a'.b-b'.a)/2).
struct WHElement {
  Eigen::VectorXd a, b;
  double iota = 0;

  WHElement() = default;
  explicit WHElement(int n)
      : a(Eigen::VectorXd::Zero(n)), b(Eigen::VectorXd::Zero(n)) {}
};

WHElement wh_product(const WHElement& x, const WHElement& y);

/// psi'(x) = e^{i lambda (iota + x.a - a.b/2)} psi(x - b).
/// Throws Error at lambda = 0 (degenerate: quotient by the center {R} -- an
/// abelian algebra A(2n) -- carries those characters instead).
QuadPhaseOperator wh_rep(const RepLabels& labels, const WHElement& g);

/// Hamilton group representation from (R, v, f, r); base factor trivial.
/// Integer two_j works from a GroupParams rotation; half-integer spin needs
/// the CoverParams overload.  Throws Error at kappa = 0 (degenerate:
/// quotient by {R} -- the Euclidean-type algebra SO(n) x A(2n)).
RepValue hamilton_rep(const RepLabels& labels, const GroupParams& g);
RepValue hamilton_rep(const RepLabels& labels, const CoverParams& g);

/// Galilei representation from (R, t, v, q, s) on momentum space, with the
/// free-particle dispersion carried in the |p~|^2 phase coefficient.
/// Throws Error at mu = 0 (degenerate: quotient by {M}).
RepValue galilei_rep(const RepLabels& labels, const GroupParams& g);
RepValue galilei_rep(const RepLabels& labels, const CoverParams& g);

/// Quantum Hamilton representation of a full group element.  Throws Error on
/// lambda = 0, kappa = 0 or mu = 0 (degenerate; the error names the quotient
/// family that carries those characters).
RepValue qha_rep(const RepLabels& labels, const GroupParams& g);
RepValue qha_rep(const RepLabels& labels, const CoverParams& g);

/// Realized-generator catalog for the quantum Hamilton algebra at space
/// dimension n: base-sector first-order operators (on n space variables plus
/// time), internal-sector operators (n variables), and spin matrices
/// (nonzero only for J_{i<j} at n = 3).
struct AlgebraRep {
  int n = 0;
  std::map<std::string, DiffOp> base;
  std::map<std::string, DiffOp> internal_gen;
  std::map<std::string, Eigen::MatrixXcd> spin;
};
AlgebraRep algebra_rep(const RepLabels& labels, int n);

/// Closed-form Casimir eigenvalue for the cataloged (family, k) pairs at
/// n = 3 (any n for the Weyl-Heisenberg family), verified by substituting
/// the realized generators into the enveloping-algebra polynomial; throws
/// ScalarityViolation if the image fails to collapse to a scalar within
/// 1e-9, Error for unknown (family, k).
double casimir_eigenvalue(Family family, const RepLabels& labels, int k);

/// Report of a seeded homomorphism verification run.
struct HomReport {
  std::string family;
  RepLabels labels;
  int trials = 0;
  unsigned seed = 0;
  double max_dev = 0;
  bool pass = false;
  std::vector<std::string> notes;
};

/// Compares rep(g1) o rep(g2) with rep(product(g1, g2)) in canonical form
/// over seeded random pairs; pass iff max deviation <= 1e-9.
HomReport verify_homomorphism(Family family, const RepLabels& labels,
                              int trials, unsigned seed);

nlohmann::json hom_report_to_json(const HomReport& r);

/// SU(2) lift of a special-orthogonal 3x3 matrix (one of the two preimages).
Eigen::Matrix2cd su2_lift(const Eigen::Matrix3d& R);

/// The su(2) element X with su2_project(exp(theta X)) = exp(theta (E_ij -
/// E_ji)) for 1 <= i < j <= 3 (1-based axis labels).
Eigen::Matrix2cd su2_rotation_generator(int i, int j);

/// Derived spin matrix: d/dtheta wigner_d(2j, exp(theta g)) at theta = 0.
Eigen::MatrixXcd wigner_d_derivative(int two_j, const Eigen::Matrix2cd& g);

/// U d U^{-1} for a first-order operator with no x-linear flow part
/// (d.dx_rot must vanish); exact in the coefficient families.
DiffOp conjugate_diffop(const QuadPhaseOperator& u, const DiffOp& d);

}  // namespace hamrep

#endif  // HAMREP_UIR_HPP
