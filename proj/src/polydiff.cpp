/// @file  polydiff.cpp
/// @brief Leibniz-product algebra of matrix-valued polynomial-coefficient
///        differential operators.

#include "hamrep/polydiff.hpp"

namespace hamrep {

namespace {

bool is_exact_zero(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().maxCoeff() == 0.0;
}

/// Product of per-variable binomial coefficients C(a_i, c_i).
double multi_binom(const std::vector<int>& a, const std::vector<int>& c) {
  double out = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    double b = 1;
    for (int k = 0; k < c[i]; ++k) b = b * (a[i] - k) / (k + 1);
    out *= b;
  }
  return out;
}

}  // namespace

PolyDiffOp::PolyDiffOp(int nvars_, int dim_) : nvars(nvars_), dim(dim_) {
  if (nvars < 1 || dim < 1) throw Error("PolyDiffOp: bad shape");
}

void PolyDiffOp::add_term(const std::vector<int>& deriv,
                          const std::vector<int>& mono,
                          const Eigen::MatrixXcd& coef) {
  if (static_cast<int>(deriv.size()) != nvars ||
      static_cast<int>(mono.size()) != nvars ||
      coef.rows() != dim || coef.cols() != dim)
    throw Error("PolyDiffOp::add_term: shape mismatch");
  auto& poly = terms[deriv];
  auto it = poly.find(mono);
  if (it == poly.end()) {
    if (!is_exact_zero(coef)) poly[mono] = coef;
  } else {
    it->second += coef;
    if (is_exact_zero(it->second)) poly.erase(it);
  }
  if (poly.empty()) terms.erase(deriv);
}

PolyDiffOp pd_zero(int nvars, int dim) { return PolyDiffOp(nvars, dim); }

PolyDiffOp pd_const(int nvars, int dim, std::complex<double> c) {
  return pd_matrix(nvars, c * Eigen::MatrixXcd::Identity(dim, dim));
}

PolyDiffOp pd_matrix(int nvars, const Eigen::MatrixXcd& m) {
  PolyDiffOp out(nvars, static_cast<int>(m.rows()));
  const std::vector<int> zero(nvars, 0);
  out.add_term(zero, zero, m);
  return out;
}

PolyDiffOp pd_coord(int nvars, int dim, int v) {
  if (v < 0 || v >= nvars) throw Error("pd_coord: bad variable index");
  PolyDiffOp out(nvars, dim);
  std::vector<int> zero(nvars, 0), mono(nvars, 0);
  mono[v] = 1;
  out.add_term(zero, mono, Eigen::MatrixXcd::Identity(dim, dim));
  return out;
}

PolyDiffOp pd_deriv(int nvars, int dim, int v) {
  if (v < 0 || v >= nvars) throw Error("pd_deriv: bad variable index");
  PolyDiffOp out(nvars, dim);
  std::vector<int> zero(nvars, 0), deriv(nvars, 0);
  deriv[v] = 1;
  out.add_term(deriv, zero, Eigen::MatrixXcd::Identity(dim, dim));
  return out;
}

PolyDiffOp pd_axpy(const PolyDiffOp& a, std::complex<double> s,
                   const PolyDiffOp& b) {
  if (a.nvars != b.nvars || a.dim != b.dim)
    throw Error("pd_axpy: shape mismatch");
  PolyDiffOp out = a;
  for (const auto& [deriv, poly] : b.terms)
    for (const auto& [mono, coef] : poly) out.add_term(deriv, mono, s * coef);
  return out;
}

PolyDiffOp pd_multiply(const PolyDiffOp& a, const PolyDiffOp& b) {
  if (a.nvars != b.nvars || a.dim != b.dim)
    throw Error("pd_multiply: shape mismatch");
  const int n = a.nvars;
  PolyDiffOp out(n, a.dim);
  // (P d^a)(Q d^b) = sum_{c <= a} C(a,c) P (d^c Q) d^{a-c+b}.
  for (const auto& [da, pa] : a.terms) {
    // Enumerate c <= da componentwise.
    std::vector<int> c(n, 0);
    while (true) {
      const double w = multi_binom(da, c);
      std::vector<int> rest(n);
      for (int i = 0; i < n; ++i) rest[i] = da[i] - c[i];
      for (const auto& [db, pb] : b.terms) {
        std::vector<int> dout(n);
        for (int i = 0; i < n; ++i) dout[i] = rest[i] + db[i];
        for (const auto& [mb, cb] : pb) {
          // d^c applied to the monomial x^mb: falling factorials.
          double fall = 1;
          std::vector<int> mshift(n);
          bool dead = false;
          for (int i = 0; i < n; ++i) {
            if (c[i] > mb[i]) { dead = true; break; }
            for (int k = 0; k < c[i]; ++k) fall *= mb[i] - k;
            mshift[i] = mb[i] - c[i];
          }
          if (dead) continue;
          for (const auto& [ma, ca] : pa) {
            std::vector<int> mout(n);
            for (int i = 0; i < n; ++i) mout[i] = ma[i] + mshift[i];
            out.add_term(dout, mout, (w * fall) * (ca * cb).eval());
          }
        }
      }
      // Next multi-index c <= da.
      int i = 0;
      for (; i < n; ++i) {
        if (c[i] < da[i]) { ++c[i]; break; }
        c[i] = 0;
      }
      if (i == n) break;
    }
  }
  return out;
}

PolyDiffOp pd_commutator(const PolyDiffOp& a, const PolyDiffOp& b) {
  return pd_axpy(pd_multiply(a, b), std::complex<double>(-1.0, 0.0),
                 pd_multiply(b, a));
}

double pd_distance(const PolyDiffOp& a, const PolyDiffOp& b) {
  const PolyDiffOp d = pd_axpy(a, std::complex<double>(-1.0, 0.0), b);
  double out = 0;
  for (const auto& [deriv, poly] : d.terms)
    for (const auto& [mono, coef] : poly)
      out = std::max(out, coef.cwiseAbs().maxCoeff());
  return out;
}

ScalarTest pd_scalar_part(const PolyDiffOp& a) {
  ScalarTest out;
  const std::vector<int> zero(a.nvars, 0);
  for (const auto& [deriv, poly] : a.terms)
    for (const auto& [mono, coef] : poly) {
      if (deriv == zero && mono == zero) {
        const std::complex<double> c = coef.trace() / double(a.dim);
        out.value = c;
        const Eigen::MatrixXcd resid =
            coef - c * Eigen::MatrixXcd::Identity(a.dim, a.dim);
        out.deviation = std::max(out.deviation, resid.cwiseAbs().maxCoeff());
      } else {
        out.deviation = std::max(out.deviation, coef.cwiseAbs().maxCoeff());
      }
    }
  return out;
}

}  // namespace hamrep
