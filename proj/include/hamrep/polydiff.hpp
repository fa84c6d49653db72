#ifndef HAMREP_POLYDIFF_HPP
#define HAMREP_POLYDIFF_HPP

/// @file  polydiff.hpp
/// @brief Matrix-valued polynomial-coefficient differential operators in
///        several variables, with an associative (Leibniz) product.  Used to
///        substitute concrete generator realizations into enveloping-algebra
///        polynomials and check that Casimir images collapse to scalars.

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "hamrep/rational.hpp"

namespace hamrep {

/// An operator sum_a P_a(x) d^a/dx^a acting on C^dim-valued functions of
/// nvars real variables.  Outer key: derivative multi-index a (length nvars);
/// inner key: monomial exponent vector (length nvars); value: dim x dim
/// complex coefficient matrix.  Exact zeros are never stored.
struct PolyDiffOp {
  int nvars = 0;
  int dim = 1;
  std::map<std::vector<int>, std::map<std::vector<int>, Eigen::MatrixXcd>>
      terms;

  PolyDiffOp() = default;
  PolyDiffOp(int nvars_, int dim_);

  /// Adds coef * x^mono * d^deriv, erasing entries that cancel exactly.
  void add_term(const std::vector<int>& deriv, const std::vector<int>& mono,
                const Eigen::MatrixXcd& coef);
};

/// The zero operator.
PolyDiffOp pd_zero(int nvars, int dim);
/// Multiplication by the scalar constant c.
PolyDiffOp pd_const(int nvars, int dim, std::complex<double> c);
/// Multiplication by the constant matrix m (dim = m.rows()).
PolyDiffOp pd_matrix(int nvars, const Eigen::MatrixXcd& m);
/// Multiplication by the coordinate x_v.
PolyDiffOp pd_coord(int nvars, int dim, int v);
/// The derivative d/dx_v.
PolyDiffOp pd_deriv(int nvars, int dim, int v);

/// a + s*b.
PolyDiffOp pd_axpy(const PolyDiffOp& a, std::complex<double> s,
                   const PolyDiffOp& b);

/// Associative operator product a∘b via the Leibniz rule.
PolyDiffOp pd_multiply(const PolyDiffOp& a, const PolyDiffOp& b);

/// a∘b - b∘a.
PolyDiffOp pd_commutator(const PolyDiffOp& a, const PolyDiffOp& b);

/// Max absolute coefficient deviation between two operators.
double pd_distance(const PolyDiffOp& a, const PolyDiffOp& b);

/// Largest coefficient magnitude outside scalar*identity shape plus the
/// extracted scalar: the operator is c*Id iff the returned deviation is ~0.
struct ScalarTest {
  std::complex<double> value{0.0, 0.0};
  double deviation = 0.0;
};
ScalarTest pd_scalar_part(const PolyDiffOp& a);

}  // namespace hamrep

#endif  // HAMREP_POLYDIFF_HPP
