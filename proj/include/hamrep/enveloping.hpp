#ifndef HAMREP_ENVELOPING_HPP
#define HAMREP_ENVELOPING_HPP

/// @file  enveloping.hpp
/// @brief PBW normal-ordering engine over a LieAlgebraSpec and the Casimir
///        polynomial catalog, used to verify centrality exactly.

#include <map>
#include <string>
#include <vector>

#include "hamrep/liealg.hpp"
#include "hamrep/rational.hpp"

namespace hamrep {

/// An element of the universal enveloping algebra: finite sum of PBW-ordered
/// monomials.  Key = exponent vector (one entry per basis generator, in the
/// fixed basis order); value = exact rational coefficient.  Zero coefficients
/// are never stored.
struct EnvElement {
  std::map<std::vector<int>, Rat> terms;

  bool operator==(const EnvElement&) const = default;
  bool is_zero() const { return terms.empty(); }

  /// Adds coef * monomial, erasing the entry if the sum cancels.
  void add_term(const std::vector<int>& expo, const Rat& coef);
};

/// The unit element 1.
EnvElement env_one(const LieAlgebraSpec& alg);
/// The degree-1 element X_label.
EnvElement env_gen(const LieAlgebraSpec& alg, const std::string& label);
/// a + s*b.
EnvElement env_axpy(const EnvElement& a, const Rat& s, const EnvElement& b);
/// s*a.
EnvElement env_scale(const Rat& s, const EnvElement& a);

/// PBW-normal-ordered associative product.  Rewrites X_b X_a ->
/// X_a X_b + [X_b, X_a] whenever b follows a in the basis order; bounded by
/// 10^6 rewrite steps per product (throws Error if exceeded).
EnvElement env_multiply(const LieAlgebraSpec& alg, const EnvElement& a,
                        const EnvElement& b);

/// Centrality report: pass iff [X_a, e] = 0 for every basis generator.
struct CentralityReport {
  bool pass = true;
  std::string violating_generator;  ///< first generator with nonzero residual
  EnvElement residual;              ///< the nonzero commutator found
};

CentralityReport is_central(const LieAlgebraSpec& alg, const EnvElement& e);

/// Cataloged Casimir polynomial C_k for (family, n).  Implemented cases:
/// WeylHeisenberg(n) k=1; Hamilton(3) k=1..2; Galilei(3) and
/// GalileiConjugate(3) k=1..3; QuantumHamilton(3) k=1..5.
/// Throws Error for anything else.
EnvElement casimir_element(Family family, int n, int k);

/// Human-readable notes about sign adjudications made while building the
/// catalog (empty when the printed form was used unchanged).
std::string casimir_notes(Family family);

}  // namespace hamrep

#endif  // HAMREP_ENVELOPING_HPP
