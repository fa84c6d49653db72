#ifndef HAMREP_GROUPS_HPP
#define HAMREP_GROUPS_HPP

/// @file  groups.hpp
/// @brief Parameterized QHa(n) group elements: closed-form product/inverse,
///        the defining matrix realization (the oracle), factorization,
///        2-cocycle extraction, and the SU(2) cover with D^j matrices.

#include <Eigen/Dense>
#include <array>
#include <random>
#include <vector>

#include "hamrep/rational.hpp"

#include <nlohmann/json_fwd.hpp>

namespace hamrep {

/// An element Gamma(R, v, f, r, q, t, p, eps, iota, s, u) of QHa(n).
/// v: velocity, f: force, r: power, q: position, t: time, p: momentum,
/// eps: energy, iota/s/u: the three central parameters.
struct GroupParams {
  int n = 0;
  Eigen::MatrixXd R;  ///< n x n special orthogonal
  Eigen::VectorXd v, f, q, p;
  double r = 0, t = 0, eps = 0, iota = 0, s = 0, u = 0;

  GroupParams() = default;
  explicit GroupParams(int n_);

  static GroupParams identity(int n_) { return GroupParams(n_); }

  /// Throws Error unless R is special orthogonal to 1e-12.
  void validate() const;
};

/// Same element but with the rotation factor given on the SU(2) cover
/// (n = 3 only).
struct CoverParams {
  Eigen::Matrix2cd Rbar = Eigen::Matrix2cd::Identity();
  Eigen::Vector3d v = Eigen::Vector3d::Zero(), f = Eigen::Vector3d::Zero(),
                  q = Eigen::Vector3d::Zero(), p = Eigen::Vector3d::Zero();
  double r = 0, t = 0, eps = 0, iota = 0, s = 0, u = 0;

  /// Projects to GroupParams via su2_project.
  GroupParams project() const;
};

/// (2n+6)-dimensional defining matrix.
using RealizationMatrix = Eigen::MatrixXd;

/// Closed-form group product a*b (a acts first from the left).
GroupParams product(const GroupParams& a, const GroupParams& b);

/// Closed-form inverse.
GroupParams inverse(const GroupParams& a);

/// The (2n+6)x(2n+6) defining matrix realization; satisfies
/// to_matrix(product(a,b)) = to_matrix(a) * to_matrix(b).
RealizationMatrix to_matrix(const GroupParams& a);

/// Algebra generators as (2n+6)^2 matrices, one per liealg QHa(n) basis
/// element in canonical order; entries are small integers, so commutators
/// reproduce the structure constants exactly.
std::vector<Eigen::MatrixXd> matrix_log_generators(int n);

/// Factorization Gamma = UpsilonH(q,t,p,eps,iota) * A2(s,u) *
/// UpsilonK(v,f,r) * Rot(R).
struct Factorization {
  GroupParams upsilon_h, a2, upsilon_k, rot;
};
Factorization factorize(const GroupParams& a);

/// The central triple (iota, s, u) of product(x1, x2) for central-zeroed
/// inputs: the 2-cocycle of the extension.
std::array<double, 3> cocycle(const GroupParams& x1, const GroupParams& x2);

/// SO(3) image of an SU(2) element via Pauli conjugation.
Eigen::Matrix3d su2_project(const Eigen::Matrix2cd& rbar);

/// D^j matrix (dimension 2j+1) from the 2j-fold symmetric power of the
/// defining representation; two_j = 2j must be a nonnegative integer.
Eigen::MatrixXcd wigner_d(int two_j, const Eigen::Matrix2cd& rbar);

/// Seeded random elements: rotation from a normalized quaternion (n=3) or
/// random planar angles, translation-like parameters uniform in [-2, 2].
Eigen::MatrixXd random_rotation(int n, std::mt19937_64& rng);
Eigen::Matrix2cd random_su2(std::mt19937_64& rng);
GroupParams random_element(int n, std::mt19937_64& rng);

/// JSON round-trip: {n, R row-major, v, f, r, q, t, p, eps, iota, s, u}.
nlohmann::json group_to_json(const GroupParams& a);
GroupParams group_from_json(const nlohmann::json& j);

}  // namespace hamrep

#endif  // HAMREP_GROUPS_HPP
