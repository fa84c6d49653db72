/// @file  uir.cpp
/// @brief Unitary irreducible representation builders, homomorphism
///        verification and Casimir-eigenvalue evaluation.

#include "hamrep/uir.hpp"

#include "hamrep/enveloping.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>

namespace hamrep {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};

double binom(int n, int k) {
  double out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

DiffOp dop(int n) { return DiffOp::zero(n); }

}  // namespace

// ---------------------------------------------------------------------------
// Labels and representation values
// ---------------------------------------------------------------------------

void RepLabels::validate() const {
  if (hbar <= 0) throw Error("RepLabels: hbar must be positive");
  if (two_j < 0) throw Error("RepLabels: 2j must be a nonnegative integer");
}

void canonicalize(RepValue& v) {
  v.base.phase.c0 += v.internal.phase.c0;
  v.internal.phase.c0 = 0;
}

RepValue rep_compose(const RepValue& a, const RepValue& b) {
  RepValue out;
  out.dj = a.dj * b.dj;
  out.internal = compose(a.internal, b.internal);
  out.base = compose(a.base, b.base);
  canonicalize(out);
  return out;
}

double rep_distance(const RepValue& a, const RepValue& b) {
  double d = (a.dj - b.dj).cwiseAbs().maxCoeff();
  d = std::max(d, quadphase_distance(a.internal, b.internal));
  d = std::max(d, quadphase_distance(a.base, b.base));
  return d;
}

void assert_unitary_structure(const RepValue& v, double tol) {
  const auto check_rot = [&](const QuadPhaseOperator& u, const char* what) {
    const double dev =
        (u.rot.transpose() * u.rot -
         Eigen::MatrixXd::Identity(u.n, u.n)).cwiseAbs().maxCoeff();
    if (dev > tol)
      throw Error(std::string("unitarity: non-orthogonal substitution in ") +
                  what);
  };
  check_rot(v.internal, "internal factor");
  check_rot(v.base, "base factor");
  if (!is_space_only(v.internal, tol))
    throw Error("unitarity: internal factor acts on time");
  const Eigen::MatrixXcd g = v.dj.adjoint() * v.dj;
  const double dev =
      (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
  if (dev > tol) throw Error("unitarity: D^j factor is not unitary");
}

// ---------------------------------------------------------------------------
// SU(2) utilities
// ---------------------------------------------------------------------------

Eigen::Matrix2cd su2_lift(const Eigen::Matrix3d& R) {
  // Quaternion extraction (branch on the largest diagonal combination),
  // then the same quaternion -> SU(2) packing as the random generator.  The
  // Pauli-conjugation projection maps that packing to the transpose of the
  // standard quaternion rotation matrix, hence the transposed input here.
  const Eigen::Matrix3d Rt = R.transpose();
  double w, x, y, z;
  const double tr = Rt.trace();
  if (tr > 0) {
    const double s = std::sqrt(tr + 1.0) * 2.0;
    w = 0.25 * s;
    x = (Rt(2, 1) - Rt(1, 2)) / s;
    y = (Rt(0, 2) - Rt(2, 0)) / s;
    z = (Rt(1, 0) - Rt(0, 1)) / s;
  } else if (Rt(0, 0) > Rt(1, 1) && Rt(0, 0) > Rt(2, 2)) {
    const double s = std::sqrt(1.0 + Rt(0, 0) - Rt(1, 1) - Rt(2, 2)) * 2.0;
    w = (Rt(2, 1) - Rt(1, 2)) / s;
    x = 0.25 * s;
    y = (Rt(0, 1) + Rt(1, 0)) / s;
    z = (Rt(0, 2) + Rt(2, 0)) / s;
  } else if (Rt(1, 1) > Rt(2, 2)) {
    const double s = std::sqrt(1.0 + Rt(1, 1) - Rt(0, 0) - Rt(2, 2)) * 2.0;
    w = (Rt(0, 2) - Rt(2, 0)) / s;
    x = (Rt(0, 1) + Rt(1, 0)) / s;
    y = 0.25 * s;
    z = (Rt(1, 2) + Rt(2, 1)) / s;
  } else {
    const double s = std::sqrt(1.0 + Rt(2, 2) - Rt(0, 0) - Rt(1, 1)) * 2.0;
    w = (Rt(1, 0) - Rt(0, 1)) / s;
    x = (Rt(0, 2) + Rt(2, 0)) / s;
    y = (Rt(1, 2) + Rt(2, 1)) / s;
    z = 0.25 * s;
  }
  const double norm = std::sqrt(w * w + x * x + y * y + z * z);
  w /= norm; x /= norm; y /= norm; z /= norm;
  Eigen::Matrix2cd rbar;
  rbar << C(w, z), C(y, x), C(-y, x), C(w, -z);
  const double dev = (su2_project(rbar) - R).cwiseAbs().maxCoeff();
  if (dev > 1e-8) throw Error("su2_lift: projection round-trip failed");
  return rbar;
}

Eigen::Matrix2cd su2_rotation_generator(int i, int j) {
  Eigen::Matrix2cd sigma1, sigma2, sigma3;
  sigma1 << C(0), C(1), C(1), C(0);
  sigma2 << C(0), C(0, -1), C(0, 1), C(0);
  sigma3 << C(1), C(0), C(0), C(-1);
  // su2_project(exp(theta g_ij)) = exp(theta (E_ij - E_ji)) (1-based).
  if (i == 1 && j == 2) return 0.5 * kI * sigma3;
  if (i == 2 && j == 3) return 0.5 * kI * sigma1;
  if (i == 1 && j == 3) return -0.5 * kI * sigma2;
  throw Error("su2_rotation_generator: need 1 <= i < j <= 3");
}

Eigen::MatrixXcd wigner_d_derivative(int two_j, const Eigen::Matrix2cd& g) {
  if (two_j < 0) throw Error("wigner_d_derivative: 2j must be >= 0");
  const int m = two_j;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  // Derived action on the monomial basis b_k = sqrt(C(m,k)) x^{m-k} y^k with
  // first-order substitution x -> x + theta (g00 x + g10 y),
  // y -> y + theta (g01 x + g11 y) (matching the wigner_d convention).
  for (int k = 0; k <= m; ++k) {
    out(k, k) += double(m - k) * g(0, 0) + double(k) * g(1, 1);
    if (k + 1 <= m)
      out(k + 1, k) +=
          double(m - k) * g(1, 0) * std::sqrt(binom(m, k) / binom(m, k + 1));
    if (k - 1 >= 0)
      out(k - 1, k) +=
          double(k) * g(0, 1) * std::sqrt(binom(m, k) / binom(m, k - 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Realized-generator catalogs
//
// X_op below satisfies [X_op, Y_op] = -i c^k Z_op(k) with central characters
// I -> lambda, M -> mu, A -> alpha; U(exp(theta X)) = exp(i theta X_op).
// ---------------------------------------------------------------------------

namespace {

struct BaseCatalog {
  DiffOp P(int i) const { return p_[i]; }
  DiffOp Q(int i) const { return q_[i]; }
  DiffOp G(int i) const { return g_[i]; }
  DiffOp F(int i) const { return f_[i]; }
  DiffOp T, E, R, I, M, A;
  std::vector<DiffOp> p_, q_, g_, f_;
};

/// Base-sector generators on n space variables plus time.
BaseCatalog base_catalog(const RepLabels& lb, int n) {
  const double h = lb.hbar, la = lb.lambda, mu = lb.mu, al = lb.alpha;
  BaseCatalog c{.T = dop(n), .E = dop(n), .R = dop(n),
                .I = dop(n), .M = dop(n), .A = dop(n)};
  c.T.mult.c2 = 1.0 / h;
  c.E.dt = kI * la * h;
  c.R.mult.c3 = 1.0 / (la * h * h);
  c.R.mult.c0 = mu * al / la;
  c.I.mult.c0 = la;
  c.M.mult.c0 = mu;
  c.A.mult.c0 = al;
  for (int i = 0; i < n; ++i) {
    DiffOp P = dop(n), Q = dop(n), G = dop(n), F = dop(n);
    if (lb.time_basis == TimeBasis::MomentumTime) {
      // Diagonal momentum: P multiplies by p~_i / hbar.
      P.mult.c1(i) = 1.0 / h;
      Q.dx_const(i) = kI * la * h;
      G.mult.c4(i) = 1.0 / (la * h * h);
      G.dx_const(i) = -kI * mu * h;
      F.dx_linear_t(i) = kI;
      F.mult.c1(i) = al / (la * h);
    } else {
      // Diagonal position: Q multiplies by -q~_i / hbar.
      Q.mult.c1(i) = -1.0 / h;
      P.dx_const(i) = kI * la * h;
      G.dx_linear_t(i) = kI;
      G.mult.c1(i) = mu / (la * h);
      F.dx_const(i) = kI * al * h;
      F.mult.c4(i) = -1.0 / (la * h * h);
    }
    c.p_.push_back(P);
    c.q_.push_back(Q);
    c.g_.push_back(G);
    c.f_.push_back(F);
  }
  return c;
}

struct InternalCatalog {
  std::vector<DiffOp> g_, f_;
  DiffOp R;
};

/// Internal Hamilton-sector generators on n space variables.  `r_sign` picks
/// the orientation of the central character of R: +1 gives R -> +kappa (the
/// standalone Hamilton convention, matching the printed closed form up to
/// the r/2 weight), -1 gives R -> -kappa (the orientation pinned inside the
/// quantum Hamilton representation by the T^2 - IR eigenvalue).
InternalCatalog internal_catalog(const RepLabels& lb, int n, int r_sign) {
  const double k = lb.kappa;
  InternalCatalog c{.R = dop(n)};
  c.R.mult.c0 = r_sign * k;
  for (int i = 0; i < n; ++i) {
    DiffOp G = dop(n), F = dop(n);
    if (lb.internal_basis == InternalBasis::ForceDiag) {
      G.mult.c1(i) = k;
      F.dx_const(i) = kI * double(r_sign);
    } else {
      F.mult.c1(i) = k;
      G.dx_const(i) = -kI * double(r_sign);
    }
    c.g_.push_back(G);
    c.f_.push_back(F);
  }
  return c;
}

DiffOp rotation_generator_diffop(int n, int i, int j) {
  DiffOp out = dop(n);
  out.dx_rot(i - 1, j - 1) = kI;
  out.dx_rot(j - 1, i - 1) = -kI;
  return out;
}

Eigen::MatrixXcd spin_matrix(int two_j, int i, int j) {
  // -i * derived D^j: satisfies the same -i c^k bracket convention as the
  // orbital parts.
  return -kI * wigner_d_derivative(two_j, su2_rotation_generator(i, j));
}

// -------------------------------------------------------------------------
// Exponential factor builders
// -------------------------------------------------------------------------

DiffOp axpy_scaled(const DiffOp& base, double s, const DiffOp& extra) {
  return diff_axpy(base, C(s, 0.0), extra);
}

/// exp(i (sum_i v_i G_i + f_i F_i + (r/2) R)) over a catalog slice.
QuadPhaseOperator k_sector_factor(const std::vector<DiffOp>& G,
                                  const std::vector<DiffOp>& F,
                                  const DiffOp& R, const Eigen::VectorXd& v,
                                  const Eigen::VectorXd& f, double r) {
  DiffOp d = dop(G[0].n);
  for (size_t i = 0; i < G.size(); ++i) {
    d = axpy_scaled(d, v(int(i)), G[i]);
    d = axpy_scaled(d, f(int(i)), F[i]);
  }
  d = axpy_scaled(d, 0.5 * r, R);
  return exponentiate(d);
}

/// Substitution by the rotation R on a base/internal factor.
QuadPhaseOperator rotation_factor(const Eigen::MatrixXd& R) {
  return substitution_operator(R);
}

void require_half_integer_source(const RepLabels& lb, int n) {
  if (lb.two_j > 0 && n != 3)
    throw Error("spin j > 0 requires space dimension 3");
}

Eigen::MatrixXcd dj_of(const RepLabels& lb, const Eigen::MatrixXd& R) {
  if (lb.two_j == 0) return Eigen::MatrixXcd::Identity(1, 1);
  if (lb.two_j % 2 != 0)
    throw Error("half-integer spin needs the SU(2) cover element "
                "(CoverParams); an SO(3) rotation determines D^j only up to "
                "sign");
  return wigner_d(lb.two_j, su2_lift(R));
}

void require_zero(double x, const char* what) {
  if (std::abs(x) > 1e-12)
    throw Error(std::string("unexpected nonzero parameter: ") + what);
}

void require_zero(const Eigen::VectorXd& x, const char* what) {
  if (x.size() > 0 && x.cwiseAbs().maxCoeff() > 1e-12)
    throw Error(std::string("unexpected nonzero parameter: ") + what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Weyl-Heisenberg representation
// ---------------------------------------------------------------------------

WHElement wh_product(const WHElement& x, const WHElement& y) {
  if (x.a.size() != y.a.size()) throw Error("wh_product: dimension mismatch");
  WHElement out(int(x.a.size()));
  out.a = x.a + y.a;
  out.b = x.b + y.b;
  out.iota = x.iota + y.iota + 0.5 * (x.a.dot(y.b) - x.b.dot(y.a));
  return out;
}

QuadPhaseOperator wh_rep(const RepLabels& labels, const WHElement& g) {
  labels.validate();
  if (labels.lambda == 0.0)
    throw Error("wh_rep: lambda = 0 is degenerate; those characters factor "
                "through the quotient by the center {R}, the abelian algebra "
                "A(2n)");
  const int n = int(g.a.size());
  QuadPhaseOperator u(n);
  u.phase.c0 = labels.lambda * (g.iota - 0.5 * g.a.dot(g.b));
  u.phase.c1 = labels.lambda * g.a;
  u.shift_a = -g.b;
  return u;
}

// ---------------------------------------------------------------------------
// Hamilton representation
// ---------------------------------------------------------------------------

namespace {

RepValue hamilton_rep_impl(const RepLabels& lb, const Eigen::MatrixXcd& dj,
                           const Eigen::MatrixXd& R, const Eigen::VectorXd& v,
                           const Eigen::VectorXd& f, double r) {
  lb.validate();
  if (lb.kappa == 0.0)
    throw Error("hamilton_rep: kappa = 0 is degenerate; those characters "
                "factor through the quotient by {R}, the Euclidean-type "
                "algebra so(n) (+) A(2n)");
  const int n = int(v.size());
  require_half_integer_source(lb, n);
  const InternalCatalog ic = internal_catalog(lb, n, +1);
  RepValue out;
  out.dj = dj;
  out.internal = compose(k_sector_factor(ic.g_, ic.f_, ic.R, v, f, r),
                         rotation_factor(R));
  out.base = QuadPhaseOperator::identity(n);
  canonicalize(out);
  return out;
}

}  // namespace

RepValue hamilton_rep(const RepLabels& labels, const GroupParams& g) {
  g.validate();
  require_zero(g.q, "q"); require_zero(g.p, "p");
  require_zero(g.t, "t"); require_zero(g.eps, "eps");
  require_zero(g.iota, "iota"); require_zero(g.s, "s");
  require_zero(g.u, "u");
  return hamilton_rep_impl(labels, dj_of(labels, g.R), g.R, g.v, g.f, g.r);
}

RepValue hamilton_rep(const RepLabels& labels, const CoverParams& g) {
  require_zero(g.q, "q"); require_zero(g.p, "p");
  require_zero(g.t, "t"); require_zero(g.eps, "eps");
  require_zero(g.iota, "iota"); require_zero(g.s, "s");
  require_zero(g.u, "u");
  const Eigen::MatrixXcd dj =
      labels.two_j == 0 ? Eigen::MatrixXcd::Identity(1, 1)
                        : wigner_d(labels.two_j, g.Rbar);
  return hamilton_rep_impl(labels, dj, su2_project(g.Rbar), g.v, g.f, g.r);
}

// ---------------------------------------------------------------------------
// Galilei representation
// ---------------------------------------------------------------------------

namespace {

RepValue galilei_rep_impl(const RepLabels& lb, const Eigen::MatrixXcd& dj,
                          const Eigen::MatrixXd& R, const Eigen::VectorXd& v,
                          const Eigen::VectorXd& q, double t, double s) {
  lb.validate();
  if (lb.mu == 0.0)
    throw Error("galilei_rep: mu = 0 is degenerate; those characters factor "
                "through the quotient by {M}");
  const int n = int(v.size());
  require_half_integer_source(lb, n);
  const double h = lb.hbar, mu = lb.mu;

  // Factor order Upsilon_H(q, t) * A(s) * Upsilon_K(v) * Rot(R), matching
  // the group parameterization exactly.  Realized generators:
  //   P -> p~/hbar, G -> i mu d/dp~, M -> -mu/hbar,
  //   E -> -(eps + |p~|^2 / 2 mu)/hbar  (free-particle dispersion).
  QuadPhaseOperator un(n);  // exp(i(q.P + t E)): multipliers only
  un.phase.c1 = q / h;
  un.phase.c0 = -t * lb.galilei_eps / h;
  un.phase.cxx = -t / (2.0 * mu * h);

  QuadPhaseOperator ua(n);  // exp(i s M)
  ua.phase.c0 = -mu * s / h;

  QuadPhaseOperator uk(n);  // exp(i v.G): pure momentum shift
  uk.shift_a = -mu * v;

  RepValue out;
  out.dj = dj;
  out.internal = QuadPhaseOperator::identity(n);
  out.base = compose(compose(compose(un, ua), uk), rotation_factor(R));
  canonicalize(out);
  return out;
}

}  // namespace

RepValue galilei_rep(const RepLabels& labels, const GroupParams& g) {
  g.validate();
  require_zero(g.f, "f"); require_zero(g.p, "p");
  require_zero(g.r, "r"); require_zero(g.eps, "eps");
  require_zero(g.iota, "iota"); require_zero(g.u, "u");
  return galilei_rep_impl(labels, dj_of(labels, g.R), g.R, g.v, g.q, g.t,
                          g.s);
}

RepValue galilei_rep(const RepLabels& labels, const CoverParams& g) {
  require_zero(g.f, "f"); require_zero(g.p, "p");
  require_zero(g.r, "r"); require_zero(g.eps, "eps");
  require_zero(g.iota, "iota"); require_zero(g.u, "u");
  const Eigen::MatrixXcd dj =
      labels.two_j == 0 ? Eigen::MatrixXcd::Identity(1, 1)
                        : wigner_d(labels.two_j, g.Rbar);
  return galilei_rep_impl(labels, dj, su2_project(g.Rbar), g.v, g.q, g.t,
                          g.s);
}

// ---------------------------------------------------------------------------
// Quantum Hamilton representation
// ---------------------------------------------------------------------------

namespace {

void qha_check_labels(const RepLabels& lb) {
  lb.validate();
  if (lb.lambda == 0.0)
    throw Error("qha_rep: lambda = 0 is degenerate; those characters factor "
                "through the quotient by {I} (an extended inhomogeneous "
                "Hamilton algebra)");
  if (lb.mu == 0.0)
    throw Error("qha_rep: mu = 0 is degenerate; those characters factor "
                "through the quotient by {M}");
  if (lb.kappa == 0.0)
    throw Error("qha_rep: kappa = 0 is degenerate in the internal Hamilton "
                "sector; quotient by {R} before representing");
}

RepValue qha_rep_impl(const RepLabels& lb, const Eigen::MatrixXcd& dj,
                      const GroupParams& g) {
  qha_check_labels(lb);
  const int n = g.n;
  require_half_integer_source(lb, n);

  const BaseCatalog bc = base_catalog(lb, n);
  const InternalCatalog ic = internal_catalog(lb, n, -1);

  // N-sector: exp(i(q.P + t E + p.Q + eps T + iota I)) in first-kind
  // coordinates (the matrix exponential of the corresponding generator
  // combination reproduces exactly these parameters).
  DiffOp dn = dop(n);
  for (int i = 0; i < n; ++i) {
    dn = axpy_scaled(dn, g.q(i), bc.P(i));
    dn = axpy_scaled(dn, g.p(i), bc.Q(i));
  }
  dn = axpy_scaled(dn, g.t, bc.E);
  dn = axpy_scaled(dn, g.eps, bc.T);
  dn = axpy_scaled(dn, g.iota, bc.I);
  QuadPhaseOperator un = exponentiate(dn);

  // A(2)-sector central phase.
  QuadPhaseOperator ua(n);
  ua.phase.c0 = lb.mu * g.s + lb.alpha * g.u;

  const QuadPhaseOperator uk =
      k_sector_factor(bc.g_, bc.f_, bc.R, g.v, g.f, g.r);

  RepValue out;
  out.dj = dj;
  out.internal = compose(k_sector_factor(ic.g_, ic.f_, ic.R, g.v, g.f, g.r),
                         rotation_factor(g.R));
  out.base = compose(compose(compose(un, ua), uk), rotation_factor(g.R));
  canonicalize(out);
  return out;
}

}  // namespace

RepValue qha_rep(const RepLabels& labels, const GroupParams& g) {
  g.validate();
  return qha_rep_impl(labels, dj_of(labels, g.R), g);
}

RepValue qha_rep(const RepLabels& labels, const CoverParams& g) {
  const Eigen::MatrixXcd dj =
      labels.two_j == 0 ? Eigen::MatrixXcd::Identity(1, 1)
                        : wigner_d(labels.two_j, g.Rbar);
  return qha_rep_impl(labels, dj, g.project());
}

// ---------------------------------------------------------------------------
// Algebra-level catalog
// ---------------------------------------------------------------------------

AlgebraRep algebra_rep(const RepLabels& labels, int n) {
  labels.validate();
  qha_check_labels(labels);
  AlgebraRep out;
  out.n = n;
  const BaseCatalog bc = base_catalog(labels, n);
  const InternalCatalog ic = internal_catalog(labels, n, -1);
  const LieAlgebraSpec alg = builtin_algebra(Family::QuantumHamilton, n);
  for (const std::string& lab : alg.basis) {
    DiffOp b = dop(n), g = dop(n);
    if (lab[0] == 'J') {
      const int i = lab[2] - '0', j = lab[3] - '0';
      b = rotation_generator_diffop(n, i, j);
      g = rotation_generator_diffop(n, i, j);
      if (labels.two_j > 0 && n == 3)
        out.spin[lab] = spin_matrix(labels.two_j, i, j);
    } else if (lab[0] == 'G') {
      const int i = lab[2] - '1';
      b = bc.G(i);
      g = ic.g_[i];
    } else if (lab[0] == 'F') {
      const int i = lab[2] - '1';
      b = bc.F(i);
      g = ic.f_[i];
    } else if (lab[0] == 'Q') {
      b = bc.Q(lab[2] - '1');
    } else if (lab[0] == 'P') {
      b = bc.P(lab[2] - '1');
    } else if (lab == "R") {
      b = bc.R;
      g = ic.R;
    } else if (lab == "T") {
      b = bc.T;
    } else if (lab == "E") {
      b = bc.E;
    } else if (lab == "M") {
      b = bc.M;
    } else if (lab == "A") {
      b = bc.A;
    } else if (lab == "I") {
      b = bc.I;
    }
    out.base[lab] = b;
    out.internal_gen[lab] = g;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Casimir eigenvalues
// ---------------------------------------------------------------------------

namespace {

/// Generator images as matrix-valued polynomial differential operators for
/// the Casimir substitution; one entry per basis label of the family.
std::map<std::string, PolyDiffOp> casimir_catalog(Family family,
                                                  const RepLabels& lb,
                                                  int n) {
  const int dj = lb.two_j + 1;
  const double h = lb.hbar, la = lb.lambda, mu = lb.mu, al = lb.alpha,
               ka = lb.kappa;
  std::map<std::string, PolyDiffOp> out;
  const LieAlgebraSpec alg = builtin_algebra(family, n);

  // Variable layout per family (all catalogs use the momentum-time /
  // force-diagonal realization; eigenvalues are basis-independent).
  //   WH / Hamilton: n internal variables.
  //   Galilei (conjugate): n momentum (position) variables.
  //   QuantumHamilton: n internal + n momentum + 1 time.
  int nv = n;
  if (family == Family::QuantumHamilton) nv = 2 * n + 1;

  auto coord = [&](int v) { return pd_coord(nv, dj, v); };
  auto deriv = [&](int v) { return pd_deriv(nv, dj, v); };
  auto cnst = [&](C c) { return pd_const(nv, dj, c); };
  auto sum = [&](const PolyDiffOp& a, C s, const PolyDiffOp& b) {
    return pd_axpy(a, s, b);
  };
  auto orbital = [&](int off, int i, int j) {
    // i (x_j d_i - x_i d_j), 1-based axis labels, variable block offset.
    PolyDiffOp t = pd_multiply(coord(off + j - 1), deriv(off + i - 1));
    t = sum(t, C(-1, 0), pd_multiply(coord(off + i - 1), deriv(off + j - 1)));
    return pd_axpy(pd_zero(nv, dj), kI, t);
  };

  for (const std::string& lab : alg.basis) {
    PolyDiffOp op = pd_zero(nv, dj);
    if (lab[0] == 'J') {
      const int i = lab[2] - '0', j = lab[3] - '0';
      switch (family) {
        case Family::WeylHeisenberg:
          break;
        case Family::Hamilton:
          op = orbital(0, i, j);
          break;
        case Family::Galilei:
        case Family::GalileiConjugate:
          op = orbital(0, i, j);
          break;
        case Family::QuantumHamilton:
          op = sum(orbital(0, i, j), C(1, 0), orbital(n, i, j));
          break;
        default:
          throw Error("casimir_catalog: unsupported family");
      }
      if (lb.two_j > 0)
        op = sum(op, C(1, 0), pd_matrix(nv, spin_matrix(lb.two_j, i, j)));
    } else if (lab[0] == 'G') {
      const int i = lab[2] - '1';
      if (family == Family::WeylHeisenberg) {
        op = pd_axpy(op, C(la, 0), coord(i));
      } else if (family == Family::Hamilton) {
        op = pd_axpy(op, C(ka, 0), coord(i));
      } else if (family == Family::Galilei) {
        op = pd_axpy(op, -kI * mu, deriv(i));
      } else {  // QuantumHamilton: internal + base parts
        op = pd_axpy(op, C(ka, 0), coord(i));
        op = sum(op, C(1.0 / (la * h * h), 0),
                 pd_multiply(coord(2 * n), coord(n + i)));
        op = pd_axpy(op, -kI * mu * h, deriv(n + i));
      }
    } else if (lab[0] == 'F') {
      const int i = lab[2] - '1';
      if (family == Family::WeylHeisenberg) {
        op = pd_axpy(op, kI, deriv(i));
      } else if (family == Family::Hamilton) {
        op = pd_axpy(op, kI, deriv(i));
      } else if (family == Family::GalileiConjugate) {
        op = pd_axpy(op, -kI * al, deriv(i));
      } else {  // QuantumHamilton
        op = pd_axpy(op, -kI, deriv(i));
        op = sum(op, kI, pd_multiply(coord(2 * n), deriv(n + i)));
        op = pd_axpy(op, C(al / (la * h), 0), coord(n + i));
      }
    } else if (lab[0] == 'Q') {
      const int i = lab[2] - '1';
      if (family == Family::GalileiConjugate)
        op = pd_axpy(op, C(1, 0), coord(i));
      else  // QuantumHamilton
        op = pd_axpy(op, kI * la * h, deriv(n + i));
    } else if (lab[0] == 'P') {
      const int i = lab[2] - '1';
      if (family == Family::Galilei)
        op = pd_axpy(op, C(1, 0), coord(i));
      else  // QuantumHamilton
        op = pd_axpy(op, C(1.0 / h, 0), coord(n + i));
    } else if (lab == "R") {
      if (family == Family::WeylHeisenberg) {
        op = cnst(C(la, 0));
      } else if (family == Family::Hamilton) {
        op = cnst(C(ka, 0));
      } else {  // QuantumHamilton
        op = cnst(C(-ka + mu * al / la, 0));
        op = sum(op, C(1.0 / (la * h * h), 0),
                 pd_multiply(coord(2 * n), coord(2 * n)));
      }
    } else if (lab == "T") {
      op = pd_axpy(op, C(1.0 / h, 0), coord(2 * n));
    } else if (lab == "E") {
      if (family == Family::Galilei) {
        op = cnst(C(lb.galilei_eps, 0));
        op = sum(op, C(1.0 / (2.0 * mu), 0),
                 pd_multiply(coord(0), coord(0)));
        for (int i = 1; i < n; ++i)
          op = sum(op, C(1.0 / (2.0 * mu), 0),
                   pd_multiply(coord(i), coord(i)));
      } else if (family == Family::GalileiConjugate) {
        op = cnst(C(lb.galilei_eps, 0));
        for (int i = 0; i < n; ++i)
          op = sum(op, C(1.0 / (2.0 * al), 0),
                   pd_multiply(coord(i), coord(i)));
      } else {  // QuantumHamilton
        op = pd_axpy(op, kI * la * h, deriv(2 * n));
      }
    } else if (lab == "M") {
      op = cnst(C(mu, 0));
    } else if (lab == "A") {
      op = cnst(C(al, 0));
    } else if (lab == "I") {
      op = cnst(C(la, 0));
    }
    out[lab] = op;
  }
  return out;
}

}  // namespace

double casimir_eigenvalue(Family family, const RepLabels& labels, int k) {
  labels.validate();
  const int n = 3;
  const double jj = 0.25 * labels.two_j * (labels.two_j + 2);  // j(j+1)
  const double la = labels.lambda, mu = labels.mu, al = labels.alpha,
               ka = labels.kappa, eps = labels.galilei_eps;

  // Closed forms (the degree-4 quantum Hamilton invariant is stated for the
  // centrality-repaired element; see casimir_notes()).
  double closed = 0;
  switch (family) {
    case Family::WeylHeisenberg:
      closed = la;
      break;
    case Family::Hamilton:
      closed = (k == 1) ? ka : ka * ka * jj;
      break;
    case Family::Galilei:
      closed = (k == 1) ? mu : (k == 2) ? 2.0 * mu * eps : mu * mu * jj;
      break;
    case Family::GalileiConjugate:
      closed = (k == 1) ? al : (k == 2) ? 2.0 * al * eps : al * al * jj;
      break;
    case Family::QuantumHamilton:
      closed = (k == 1)   ? la
               : (k == 2) ? mu
               : (k == 3) ? al
               : (k == 4) ? ka * la - mu * al
                          : la * ka * la * ka * jj;
      break;
    default:
      throw Error("casimir_eigenvalue: unsupported family");
  }

  const EnvElement cas = casimir_element(family, n, k);
  const auto gens = casimir_catalog(family, labels, n);
  const LieAlgebraSpec alg = builtin_algebra(family, n);

  int nv = (family == Family::QuantumHamilton) ? 2 * n + 1 : n;
  const int dj = labels.two_j + 1;
  PolyDiffOp total = pd_zero(nv, dj);
  int dmax = 0;
  for (const auto& [expo, coef] : cas.terms) {
    int deg = 0;
    PolyDiffOp prod = pd_const(nv, dj, 1.0);
    for (int a = 0; a < alg.dim; ++a) {
      const auto& g = gens.at(alg.basis[a]);
      for (int rep = 0; rep < expo[a]; ++rep) prod = pd_multiply(prod, g);
      deg += expo[a];
    }
    dmax = std::max(dmax, deg);
    // The substitution X -> i X_op is the enveloping-algebra homomorphism.
    C w = coef.get_d();
    for (int d = 0; d < deg; ++d) w *= kI;
    total = pd_axpy(total, w, prod);
  }
  // Undo the top-degree power of i (cataloged invariants are homogeneous in
  // the defining presentation; PBW reordering only lowers degree).
  C unscale(1, 0);
  for (int d = 0; d < dmax; ++d) unscale *= -kI;
  total = pd_axpy(pd_zero(nv, dj), unscale, total);

  const ScalarTest st = pd_scalar_part(total);
  const double scale = std::max(1.0, std::abs(st.value));
  if (st.deviation > 1e-9 * scale || std::abs(st.value.imag()) > 1e-9 * scale)
    throw ScalarityViolation(
        "casimir_eigenvalue: represented invariant is not scalar (family " +
        family_name(family) + ", k=" + std::to_string(k) + ", deviation " +
        std::to_string(st.deviation) + ")");
  if (std::abs(st.value.real() - closed) > 1e-9 * scale)
    throw ScalarityViolation(
        "casimir_eigenvalue: scalar value " + std::to_string(st.value.real()) +
        " does not match the closed form " + std::to_string(closed) +
        " (family " + family_name(family) + ", k=" + std::to_string(k) + ")");
  return closed;
}

// ---------------------------------------------------------------------------
// Homomorphism verification
// ---------------------------------------------------------------------------

namespace {

CoverParams cover_product(const CoverParams& a, const CoverParams& b) {
  const GroupParams gp = product(a.project(), b.project());
  CoverParams out;
  out.Rbar = a.Rbar * b.Rbar;
  out.v = gp.v; out.f = gp.f; out.q = gp.q; out.p = gp.p;
  out.r = gp.r; out.t = gp.t; out.eps = gp.eps; out.iota = gp.iota;
  out.s = gp.s; out.u = gp.u;
  return out;
}

double uni(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
}

Eigen::Vector3d uni3(std::mt19937_64& rng) {
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) v(i) = uni(rng);
  return v;
}

}  // namespace

HomReport verify_homomorphism(Family family, const RepLabels& labels,
                              int trials, unsigned seed) {
  if (trials < 1) throw Error("verify_homomorphism: trials must be >= 1");
  labels.validate();
  HomReport rep;
  rep.family = family_name(family);
  rep.labels = labels;
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);

  auto track = [&](double d) { rep.max_dev = std::max(rep.max_dev, d); };

  for (int trial = 0; trial < trials; ++trial) {
    switch (family) {
      case Family::WeylHeisenberg: {
        WHElement g1(3), g2(3);
        for (int i = 0; i < 3; ++i) {
          g1.a(i) = uni(rng); g1.b(i) = uni(rng);
          g2.a(i) = uni(rng); g2.b(i) = uni(rng);
        }
        g1.iota = uni(rng);
        g2.iota = uni(rng);
        track(quadphase_distance(
            compose(wh_rep(labels, g1), wh_rep(labels, g2)),
            wh_rep(labels, wh_product(g1, g2))));
        break;
      }
      case Family::Hamilton: {
        CoverParams g1, g2;
        g1.Rbar = random_su2(rng); g2.Rbar = random_su2(rng);
        g1.v = uni3(rng); g1.f = uni3(rng); g1.r = uni(rng);
        g2.v = uni3(rng); g2.f = uni3(rng); g2.r = uni(rng);
        track(rep_distance(
            rep_compose(hamilton_rep(labels, g1), hamilton_rep(labels, g2)),
            hamilton_rep(labels, cover_product(g1, g2))));
        break;
      }
      case Family::Galilei: {
        CoverParams g1, g2;
        g1.Rbar = random_su2(rng); g2.Rbar = random_su2(rng);
        g1.v = uni3(rng); g1.q = uni3(rng); g1.t = uni(rng);
        g1.s = uni(rng);
        g2.v = uni3(rng); g2.q = uni3(rng); g2.t = uni(rng);
        g2.s = uni(rng);
        track(rep_distance(
            rep_compose(galilei_rep(labels, g1), galilei_rep(labels, g2)),
            galilei_rep(labels, cover_product(g1, g2))));
        break;
      }
      case Family::QuantumHamilton: {
        CoverParams g1, g2;
        g1.Rbar = random_su2(rng); g2.Rbar = random_su2(rng);
        g1.v = uni3(rng); g1.f = uni3(rng); g1.q = uni3(rng);
        g1.p = uni3(rng);
        g1.r = uni(rng); g1.t = uni(rng); g1.eps = uni(rng);
        g1.iota = uni(rng); g1.s = uni(rng); g1.u = uni(rng);
        g2.v = uni3(rng); g2.f = uni3(rng); g2.q = uni3(rng);
        g2.p = uni3(rng);
        g2.r = uni(rng); g2.t = uni(rng); g2.eps = uni(rng);
        g2.iota = uni(rng); g2.s = uni(rng); g2.u = uni(rng);
        track(rep_distance(
            rep_compose(qha_rep(labels, g1), qha_rep(labels, g2)),
            qha_rep(labels, cover_product(g1, g2))));
        break;
      }
      default:
        throw Error("verify_homomorphism: unsupported family");
    }
  }
  rep.pass = rep.max_dev <= 1e-9;

  switch (family) {
    case Family::WeylHeisenberg:
      rep.notes.push_back(
          "closed form used verbatim: psi'(x) = "
          "e^{i lambda(iota + x.a - a.b/2)} psi(x - b)");
      break;
    case Family::Hamilton:
      rep.notes.push_back(
          "the power coordinate enters the exponential with weight r/2 (the "
          "closed-form phase prints r); force-diagonal phase "
          "kappa(v.f~ - v.f/2 + r/2) with shift f~ - f");
      break;
    case Family::Galilei:
      rep.notes.push_back(
          "time and central phases carry e^{-i(t/hbar)(eps + |p~|^2/2mu)} "
          "and e^{-i mu s/hbar}; the printed +t, +s signs belong to "
          "reparameterized coordinates, the group-product oracle fixes the "
          "minus signs");
      break;
    case Family::QuantumHamilton:
      rep.notes.push_back(
          "base factor exp-constructed in first-kind coordinates; "
          "energy pairs as +eps*t~/hbar, and in the momentum-time basis the "
          "argument shift is p~ + mu*hbar*v - f*t~ - lambda*hbar*p (boost "
          "and force signs fixed by the product oracle, opposite to the "
          "naive reading)");
      rep.notes.push_back(
          "internal Hamilton factor uses the R -> -kappa orientation pinned "
          "by the T^2 - IR eigenvalue kappa*lambda - mu*alpha");
      break;
    default:
      break;
  }
  return rep;
}

nlohmann::json hom_report_to_json(const HomReport& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["labels"] = {
      {"lambda", r.labels.lambda}, {"mu", r.labels.mu},
      {"alpha", r.labels.alpha},   {"kappa", r.labels.kappa},
      {"two_j", r.labels.two_j},   {"hbar", r.labels.hbar},
      {"time_basis", r.labels.time_basis == TimeBasis::MomentumTime
                         ? "momentum_time" : "position_time"},
      {"internal_basis", r.labels.internal_basis == InternalBasis::ForceDiag
                             ? "force_diag" : "velocity_diag"},
  };
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["max_dev"] = r.max_dev;
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  return j;
}

// ---------------------------------------------------------------------------
// Symbolic conjugation
// ---------------------------------------------------------------------------

namespace {

CPhasePoly to_cphase(const PhasePoly& p) {
  CPhasePoly out(int(p.c1.size()));
  out.c0 = p.c0;
  out.c1 = p.c1.cast<C>();
  out.c2 = p.c2;
  out.c3 = p.c3;
  out.c4 = p.c4.cast<C>();
  out.cxx = p.cxx;
  return out;
}

/// Complex pullback through x -> rot^{-1} x + a + b t, t -> t + tau.
CPhasePoly cpull(const CPhasePoly& p, const Eigen::MatrixXd& rot_real,
                 const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                 double tau) {
  CPhasePoly out(int(a.size()));
  const Eigen::MatrixXcd rot = rot_real.cast<C>();
  const Eigen::VectorXcd ac = a.cast<C>(), bc = b.cast<C>();
  auto cdot = [](const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    return (x.transpose() * y)(0);
  };
  out.c0 = p.c0 + cdot(p.c1, ac) + p.c2 * tau + p.c3 * tau * tau +
           tau * cdot(p.c4, ac) + p.cxx * cdot(ac, ac);
  out.c1 = rot * p.c1 + tau * (rot * p.c4) + 2.0 * p.cxx * (rot * ac);
  out.c2 = p.c2 + 2.0 * p.c3 * tau + cdot(p.c4, ac) + tau * cdot(p.c4, bc) +
           cdot(p.c1, bc) + 2.0 * p.cxx * cdot(ac, bc);
  out.c3 = p.c3 + cdot(p.c4, bc) + p.cxx * cdot(bc, bc);
  out.c4 = rot * p.c4 + 2.0 * p.cxx * (rot * bc);
  out.cxx = p.cxx;
  return out;
}

/// Derivation action of the affine-in-time flow of d on a multiplier.
CPhasePoly cderive(const DiffOp& d, const CPhasePoly& a) {
  CPhasePoly out(d.n);
  auto cdot = [](const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    return (x.transpose() * y)(0);
  };
  out.c0 = cdot(d.dx_const, a.c1) + d.dt * a.c2;
  out.c1 = 2.0 * a.cxx * d.dx_const + d.dt * a.c4;
  out.c2 = cdot(d.dx_const, a.c4) + cdot(d.dx_linear_t, a.c1) +
           2.0 * d.dt * a.c3;
  out.c3 = cdot(d.dx_linear_t, a.c4);
  out.c4 = 2.0 * a.cxx * d.dx_linear_t;
  return out;
}

}  // namespace

DiffOp conjugate_diffop(const QuadPhaseOperator& u, const DiffOp& d) {
  if (u.n != d.n) throw Error("conjugate_diffop: dimension mismatch");
  if (d.dx_rot.cwiseAbs().maxCoeff() > 0)
    throw UnsupportedGeneratorShape(
        "conjugate_diffop: x-linear flow parts are not supported");
  DiffOp out(d.n);
  const Eigen::MatrixXcd rotc = u.rot.cast<C>();
  // Pushforward of the vector-field part through the inverse argument map.
  out.dx_const =
      rotc * (d.dx_const + u.tau * d.dx_linear_t - d.dt * u.shift_b.cast<C>());
  out.dx_linear_t = rotc * d.dx_linear_t;
  out.dt = d.dt;
  // Multiplier: pullback of the original plus the phase-gradient correction.
  CPhasePoly m = cpull(d.mult, u.rot, u.shift_a, u.shift_b, u.tau);
  const CPhasePoly corr = cderive(out, to_cphase(u.phase));
  m.c0 += -kI * corr.c0;
  m.c1 += -kI * corr.c1;
  m.c2 += -kI * corr.c2;
  m.c3 += -kI * corr.c3;
  m.c4 += -kI * corr.c4;
  m.cxx += -kI * corr.cxx;
  out.mult = m;
  return out;
}

}  // namespace hamrep
