#ifndef HAMREP_LIEALG_HPP
#define HAMREP_LIEALG_HPP

/// @file  liealg.hpp
/// @brief Structure-constant Lie algebras with exact-rational Jacobi checking,
///        ideal/quotient computation and generic-rank invariant counting.

#include <optional>
#include <string>
#include <vector>

#include "hamrep/rational.hpp"

namespace hamrep {

/// Builtin algebra families.  The generator universe is
/// J_{i<j}, G_i, F_i, R, Q_i, P_i, T, E, M, A, I (in this fixed order);
/// each family keeps the subset listed in builtin_algebra().
enum class Family {
  WeylHeisenberg,   ///< {G_i, F_i, R} — the (2n+1)-dim nilpotent group algebra
  Hamilton,         ///< {J, G, F, R}
  InhomHamilton,    ///< {J, G, F, R, Q, P, T, E}
  QuantumHamilton,  ///< full generator set, dim n(n-1)/2 + 4n + 6
  Galilei,          ///< {J, G, P, E, M}
  GalileiConjugate, ///< {J, F, Q, E, A}
  Euclidean         ///< {J, P}
};

/// Human-readable family name (used by reports and error messages).
std::string family_name(Family f);

/// A Lie algebra given by basis labels and rational structure constants:
/// c[a][b][k] is the coefficient of X_k in [X_a, X_b].
struct LieAlgebraSpec {
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<std::vector<Rat>>> c;  ///< dim x dim x dim

  LieAlgebraSpec() = default;
  explicit LieAlgebraSpec(std::vector<std::string> labels);

  /// Index of a basis label; throws Error if absent.
  int index_of(const std::string& label) const;
  /// Index of a basis label, or nullopt.
  std::optional<int> find(const std::string& label) const;

  /// Adds coef*X_k to [X_a, X_b] and -coef*X_k to [X_b, X_a].
  void add_bracket(int a, int b, int k, const Rat& coef);
};

/// Constructs one of the builtin families at space dimension n >= 1.
LieAlgebraSpec builtin_algebra(Family family, int n);

/// Bilinear extension of the structure constants: returns [x, y].
std::vector<Rat> bracket(const LieAlgebraSpec& alg, const std::vector<Rat>& x,
                         const std::vector<Rat>& y);

/// Result of jacobi_check(); violations list (a,b,d,k) with the residual.
struct JacobiReport {
  struct Violation {
    int a, b, d, k;
    Rat residual;
  };
  bool pass = true;
  std::vector<Violation> violations;
};

/// Exact Jacobi-identity check over all basis triples.
JacobiReport jacobi_check(const LieAlgebraSpec& alg);

/// A subspace of a parent algebra, given by basis indices.
struct SubspaceSpec {
  const LieAlgebraSpec* parent = nullptr;
  std::vector<int> members;

  SubspaceSpec(const LieAlgebraSpec& p, std::vector<int> m);
  /// Convenience: members by label.
  SubspaceSpec(const LieAlgebraSpec& p, const std::vector<std::string>& labels);
};

/// True iff [X_a, X_m] lies in span(members) for every basis a, member m.
bool is_ideal(const SubspaceSpec& s);

/// Quotient algebra over the complement basis.  Throws NotAnIdeal.
LieAlgebraSpec quotient(const SubspaceSpec& s);

/// Beltrametti–Blasi invariant count: dim − max over trials of the exact
/// rank of K(x)[a][b] = sum_k c[a][b][k] x_k at random rational points.
int invariant_count(const LieAlgebraSpec& alg, int trials, unsigned seed);

/// Exact rank of a rational matrix (Gaussian elimination over Q).
int rational_rank(std::vector<std::vector<Rat>> m);

}  // namespace hamrep

#endif  // HAMREP_LIEALG_HPP
