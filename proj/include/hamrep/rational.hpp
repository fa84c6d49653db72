#ifndef HAMREP_RATIONAL_HPP
#define HAMREP_RATIONAL_HPP

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <string>

namespace hamrep {

/// Exact rational scalar used for structure constants and PBW coefficients.
using Rat = mpq_class;

/// Base error type for the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by quotient() when the supplied subspace is not an ideal.
struct NotAnIdeal : Error {
  using Error::Error;
};

/// Thrown when a represented Casimir fails to collapse to a scalar.
struct ScalarityViolation : Error {
  using Error::Error;
};

/// Thrown by exponentiate() for generator shapes outside the two
/// supported factorization cases.
struct UnsupportedGeneratorShape : Error {
  using Error::Error;
};

/// Random nonzero rational with numerator and denominator bounded by `bound`.
inline Rat random_rational(std::mt19937_64& rng, long bound = 1000) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  long p = num(rng);
  while (p == 0) p = num(rng);
  Rat q(p, den(rng));
  q.canonicalize();
  return q;
}

}  // namespace hamrep

#endif  // HAMREP_RATIONAL_HPP
