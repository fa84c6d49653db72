/// @file  groups.cpp
/// @brief Group law, matrix oracle, cover and sampling utilities.

#include "hamrep/groups.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace hamrep {

GroupParams::GroupParams(int n_) : n(n_) {
  if (n < 1) throw Error("GroupParams: n must be >= 1");
  R = Eigen::MatrixXd::Identity(n, n);
  v = Eigen::VectorXd::Zero(n);
  f = Eigen::VectorXd::Zero(n);
  q = Eigen::VectorXd::Zero(n);
  p = Eigen::VectorXd::Zero(n);
}

void GroupParams::validate() const {
  const double dev =
      (R.transpose() * R - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (dev > 1e-12) throw Error("GroupParams: rotation not orthogonal");
  if (R.determinant() <= 0) throw Error("GroupParams: rotation has det <= 0");
}

GroupParams CoverParams::project() const {
  GroupParams g(3);
  g.R = su2_project(Rbar);
  g.v = v; g.f = f; g.q = q; g.p = p;
  g.r = r; g.t = t; g.eps = eps; g.iota = iota; g.s = s; g.u = u;
  return g;
}

GroupParams product(const GroupParams& a, const GroupParams& b) {
  if (a.n != b.n) throw Error("product: dimension mismatch");
  const int n = a.n;
  GroupParams c(n);
  // In the closed form below, a plays the primed (left) role.
  c.R = a.R * b.R;
  c.v = a.v + a.R * b.v;
  c.f = a.f + a.R * b.f;
  c.t = a.t + b.t;
  c.r = a.r + b.r + a.v.dot(a.R * b.f) - a.f.dot(a.R * b.v);
  c.eps = a.eps + b.eps + a.v.dot(a.R * b.p) - a.f.dot(a.R * b.q) + a.r * b.t;
  c.q = a.q + a.R * b.q + a.v * b.t;
  c.p = a.p + a.R * b.p + a.f * b.t;
  c.s = a.s + b.s + a.v.dot(a.R * b.q) + 0.5 * b.t * a.v.squaredNorm();
  c.u = a.u + b.u + a.f.dot(a.R * b.p) + 0.5 * b.t * a.f.squaredNorm();
  // iota is fixed by the matrix realization (the normative oracle); the
  // epsilon-tilde combination below is the (row7, c4) entry of the matrix.
  const double eps_tilde_a =
      a.eps - a.r * a.t + a.q.dot(a.f) - a.p.dot(a.v);
  c.iota = a.iota + b.iota +
           0.5 * (b.t * eps_tilde_a - a.t * b.eps -
                  (a.p - a.t * a.f).dot(a.R * b.q) +
                  (a.q - a.t * a.v).dot(a.R * b.p));
  return c;
}

GroupParams inverse(const GroupParams& a) {
  const int n = a.n;
  GroupParams b(n);
  const Eigen::MatrixXd Rt = a.R.transpose();
  b.R = Rt;
  b.t = -a.t;
  b.r = -a.r;
  b.iota = -a.iota;
  b.eps = -a.eps + a.v.dot(a.p) - a.f.dot(a.q) + a.r * a.t;
  b.v = -Rt * a.v;
  b.f = -Rt * a.f;
  b.q = -Rt * a.q + a.t * (Rt * a.v);
  b.p = -Rt * a.p + a.t * (Rt * a.f);
  b.s = -a.s + a.v.dot(a.q) - 0.5 * a.t * a.v.squaredNorm();
  b.u = -a.u + a.f.dot(a.p) - 0.5 * a.t * a.f.squaredNorm();
  return b;
}

RealizationMatrix to_matrix(const GroupParams& a) {
  const int n = a.n;
  const int d = 2 * n + 6;
  const int X = 0, Y = n, r3 = 2 * n, r4 = 2 * n + 1, r5 = 2 * n + 2,
            r6 = 2 * n + 3, r7 = 2 * n + 4, r8 = 2 * n + 5;
  const int c3 = r3, c4 = r4, c8 = r8;
  RealizationMatrix m = Eigen::MatrixXd::Zero(d, d);
  m.block(X, X, n, n) = a.R;
  m.block(Y, Y, n, n) = a.R;
  m.block(X, c4, n, 1) = a.f;
  m.block(X, c8, n, 1) = a.p;
  m.block(Y, c4, n, 1) = a.v;
  m.block(Y, c8, n, 1) = a.q;
  m.block(r3, X, 1, n) = (a.R.transpose() * a.v).transpose();
  m.block(r3, Y, 1, n) = -(a.R.transpose() * a.f).transpose();
  m(r3, c3) = 1;
  m(r3, c4) = a.r;
  m(r3, c8) = a.eps;
  m(r4, r4) = 1;
  m(r4, c8) = a.t;
  m.block(r5, Y, 1, n) = (a.R.transpose() * a.v).transpose();
  m(r5, c4) = 0.5 * a.v.squaredNorm();
  m(r5, r5) = 1;
  m(r5, c8) = a.s;
  m.block(r6, X, 1, n) = (a.R.transpose() * a.f).transpose();
  m(r6, c4) = 0.5 * a.f.squaredNorm();
  m(r6, r6) = 1;
  m(r6, c8) = a.u;
  m.block(r7, X, 1, n) = ((a.q - a.t * a.v).transpose() * a.R);
  m.block(r7, Y, 1, n) = -((a.p - a.t * a.f).transpose() * a.R);
  m(r7, c3) = -a.t;
  m(r7, c4) = a.eps - a.r * a.t + a.q.dot(a.f) - a.p.dot(a.v);
  m(r7, r7) = 1;
  m(r7, c8) = 2 * a.iota;
  m(r8, r8) = 1;
  return m;
}

std::vector<Eigen::MatrixXd> matrix_log_generators(int n) {
  if (n < 1) throw Error("matrix_log_generators: n must be >= 1");
  const int d = 2 * n + 6;
  const int X = 0, Y = n, r3 = 2 * n, r4 = 2 * n + 1, r5 = 2 * n + 2,
            r6 = 2 * n + 3, r7 = 2 * n + 4;
  const int c3 = r3, c4 = r4, c8 = 2 * n + 5;
  auto zero = [&] { return Eigen::MatrixXd::Zero(d, d).eval(); };
  std::vector<Eigen::MatrixXd> gens;
  // Canonical basis order: J_{i<j}, G_i, F_i, R, Q_i, P_i, T, E, M, A, I.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto m = zero();
      m(X + i, X + j) = 1; m(X + j, X + i) = -1;
      m(Y + i, Y + j) = 1; m(Y + j, Y + i) = -1;
      gens.push_back(m);
    }
  for (int i = 0; i < n; ++i) {  // G_i
    auto m = zero();
    m(Y + i, c4) = 1; m(r3, X + i) = 1; m(r5, Y + i) = 1;
    gens.push_back(m);
  }
  for (int i = 0; i < n; ++i) {  // F_i
    auto m = zero();
    m(X + i, c4) = 1; m(r3, Y + i) = -1; m(r6, X + i) = 1;
    gens.push_back(m);
  }
  { auto m = zero(); m(r3, c4) = 2; gens.push_back(m); }  // R
  for (int i = 0; i < n; ++i) {  // Q_i
    auto m = zero();
    m(X + i, c8) = 1; m(r7, Y + i) = -1;
    gens.push_back(m);
  }
  for (int i = 0; i < n; ++i) {  // P_i
    auto m = zero();
    m(Y + i, c8) = 1; m(r7, X + i) = 1;
    gens.push_back(m);
  }
  { auto m = zero(); m(r3, c8) = 1; m(r7, c4) = 1; gens.push_back(m); }  // T
  { auto m = zero(); m(r4, c8) = 1; m(r7, c3) = -1; gens.push_back(m); } // E
  { auto m = zero(); m(r5, c8) = 1; gens.push_back(m); }                 // M
  { auto m = zero(); m(r6, c8) = 1; gens.push_back(m); }                 // A
  { auto m = zero(); m(r7, c8) = 2; gens.push_back(m); }                 // I
  return gens;
}

Factorization factorize(const GroupParams& a) {
  const int n = a.n;
  Factorization f;
  f.upsilon_h = GroupParams(n);
  f.upsilon_h.q = a.q; f.upsilon_h.t = a.t; f.upsilon_h.p = a.p;
  f.upsilon_h.eps = a.eps; f.upsilon_h.iota = a.iota;
  f.a2 = GroupParams(n);
  f.a2.s = a.s; f.a2.u = a.u;
  f.upsilon_k = GroupParams(n);
  f.upsilon_k.v = a.v; f.upsilon_k.f = a.f; f.upsilon_k.r = a.r;
  f.rot = GroupParams(n);
  f.rot.R = a.R;
  return f;
}

std::array<double, 3> cocycle(const GroupParams& x1, const GroupParams& x2) {
  if (x1.iota != 0 || x1.s != 0 || x1.u != 0 || x2.iota != 0 || x2.s != 0 ||
      x2.u != 0)
    throw Error("cocycle: inputs must have central components zeroed");
  const GroupParams prod = product(x1, x2);
  return {prod.iota, prod.s, prod.u};
}

Eigen::Matrix3d su2_project(const Eigen::Matrix2cd& rbar) {
  const double udev =
      (rbar.adjoint() * rbar - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (udev > 1e-10 || std::abs(rbar.determinant() - 1.0) > 1e-10)
    throw Error("su2_project: input is not SU(2)");
  using C = std::complex<double>;
  Eigen::Matrix2cd sigma[3];
  sigma[0] << C(0), C(1), C(1), C(0);
  sigma[1] << C(0), C(0, -1), C(0, 1), C(0);
  sigma[2] << C(1), C(0), C(0), C(-1);
  Eigen::Matrix3d out;
  for (int j = 0; j < 3; ++j) {
    const Eigen::Matrix2cd conj = rbar * sigma[j] * rbar.adjoint();
    for (int i = 0; i < 3; ++i)
      out(i, j) = 0.5 * (sigma[i] * conj).trace().real();
  }
  return out;
}

namespace {
double binom(int n, int k) {
  double out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}
}  // namespace

Eigen::MatrixXcd wigner_d(int two_j, const Eigen::Matrix2cd& rbar) {
  if (two_j < 0) throw Error("wigner_d: 2j must be a nonnegative integer");
  const int m = two_j;
  const std::complex<double> a = rbar(0, 0), b = rbar(0, 1), c = rbar(1, 0),
                             d = rbar(1, 1);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  // Basis b_k = sqrt(C(m,k)) x^{m-k} y^k with variables transforming by
  // (x, y) -> (x, y) * rbar; this reproduces rbar itself at m = 1 and is
  // multiplicative by construction.
  for (int k = 0; k <= m; ++k) {
    // (a x + c y)^{m-k} (b x + d y)^k, coefficient of x^{m-kp} y^{kp}.
    for (int r = 0; r <= m - k; ++r)
      for (int s = 0; s <= k; ++s) {
        const int kp = m - r - s;
        const std::complex<double> coef =
            binom(m - k, r) * binom(k, s) * std::pow(a, r) *
            std::pow(c, m - k - r) * std::pow(b, s) * std::pow(d, k - s);
        out(kp, k) += coef * std::sqrt(binom(m, k)) / std::sqrt(binom(m, kp));
      }
  }
  return out;
}

Eigen::MatrixXd random_rotation(int n, std::mt19937_64& rng) {
  if (n == 1) return Eigen::MatrixXd::Identity(1, 1);
  if (n == 3) return su2_project(random_su2(rng));
  // Planar fallback: product of Givens rotations with random angles.
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  Eigen::MatrixXd R = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double th = ang(rng);
      Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
      g(i, i) = std::cos(th); g(j, j) = std::cos(th);
      g(i, j) = -std::sin(th); g(j, i) = std::sin(th);
      R = R * g;
    }
  return R;
}

Eigen::Matrix2cd random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> norm(0.0, 1.0);
  Eigen::Vector4d quat;
  do {
    for (int i = 0; i < 4; ++i) quat(i) = norm(rng);
  } while (quat.norm() < 1e-8);
  quat.normalize();
  const double w = quat(0), x = quat(1), y = quat(2), z = quat(3);
  Eigen::Matrix2cd rbar;
  using C = std::complex<double>;
  rbar << C(w, z), C(y, x), C(-y, x), C(w, -z);
  return rbar;
}

GroupParams random_element(int n, std::mt19937_64& rng) {
  GroupParams g(n);
  g.R = random_rotation(n, rng);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int i = 0; i < n; ++i) {
    g.v(i) = uni(rng); g.f(i) = uni(rng); g.q(i) = uni(rng); g.p(i) = uni(rng);
  }
  g.r = uni(rng); g.t = uni(rng); g.eps = uni(rng);
  g.iota = uni(rng); g.s = uni(rng); g.u = uni(rng);
  return g;
}

nlohmann::json group_to_json(const GroupParams& a) {
  nlohmann::json j;
  j["n"] = a.n;
  std::vector<double> rrow;
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) rrow.push_back(a.R(i, k));
  j["R"] = rrow;
  auto vec = [](const Eigen::VectorXd& x) {
    return std::vector<double>(x.data(), x.data() + x.size());
  };
  j["v"] = vec(a.v); j["f"] = vec(a.f); j["q"] = vec(a.q); j["p"] = vec(a.p);
  j["r"] = a.r; j["t"] = a.t; j["eps"] = a.eps; j["iota"] = a.iota;
  j["s"] = a.s; j["u"] = a.u;
  return j;
}

GroupParams group_from_json(const nlohmann::json& j) {
  GroupParams a(j.at("n").get<int>());
  const auto rrow = j.at("R").get<std::vector<double>>();
  if (static_cast<int>(rrow.size()) != a.n * a.n)
    throw Error("group_from_json: R has wrong size");
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) a.R(i, k) = rrow[i * a.n + k];
  auto vec = [&](const char* key, Eigen::VectorXd& out) {
    const auto x = j.at(key).get<std::vector<double>>();
    if (static_cast<int>(x.size()) != a.n)
      throw Error(std::string("group_from_json: bad vector ") + key);
    for (int i = 0; i < a.n; ++i) out(i) = x[i];
  };
  vec("v", a.v); vec("f", a.f); vec("q", a.q); vec("p", a.p);
  a.r = j.at("r"); a.t = j.at("t"); a.eps = j.at("eps");
  a.iota = j.at("iota"); a.s = j.at("s"); a.u = j.at("u");
  a.validate();
  return a;
}

}  // namespace hamrep
