/// Enveloping-algebra tests: PBW normal ordering, centrality of the Casimir
/// catalog, and detection of miscopied invariants.

#include "hamrep/enveloping.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hamrep;

TEST_CASE("PBW product reproduces the bracket") {
  const LieAlgebraSpec wh = builtin_algebra(Family::WeylHeisenberg, 1);
  const EnvElement g = env_gen(wh, "G_1");
  const EnvElement f = env_gen(wh, "F_1");
  // G F - F G = [G, F] = R.
  const EnvElement comm = env_axpy(env_multiply(wh, g, f), Rat(-1),
                                   env_multiply(wh, f, g));
  CHECK(comm == env_gen(wh, "R"));
}

TEST_CASE("normal ordering is idempotent and associative on samples") {
  const LieAlgebraSpec ha = builtin_algebra(Family::Hamilton, 2);
  const EnvElement a = env_gen(ha, "F_1");
  const EnvElement b = env_gen(ha, "G_1");
  const EnvElement c = env_gen(ha, "J_12");
  const EnvElement lhs =
      env_multiply(ha, env_multiply(ha, a, b), c);
  const EnvElement rhs =
      env_multiply(ha, a, env_multiply(ha, b, c));
  CHECK(lhs == rhs);
}

TEST_CASE("scalar helpers") {
  const LieAlgebraSpec wh = builtin_algebra(Family::WeylHeisenberg, 1);
  CHECK(env_scale(Rat(0), env_gen(wh, "R")).is_zero());
  CHECK(env_axpy(env_gen(wh, "R"), Rat(-1), env_gen(wh, "R")).is_zero());
  const EnvElement one = env_one(wh);
  CHECK(env_multiply(wh, one, env_gen(wh, "G_1")) == env_gen(wh, "G_1"));
}

TEST_CASE("every cataloged Casimir is exactly central") {
  struct Entry {
    Family f;
    int n;
    int kmax;
  };
  const Entry entries[] = {
      {Family::WeylHeisenberg, 1, 1}, {Family::WeylHeisenberg, 4, 1},
      {Family::Hamilton, 3, 2},       {Family::Galilei, 3, 3},
      {Family::GalileiConjugate, 3, 3}, {Family::QuantumHamilton, 3, 5},
  };
  for (const Entry& e : entries) {
    const LieAlgebraSpec alg = builtin_algebra(e.f, e.n);
    for (int k = 1; k <= e.kmax; ++k) {
      const CentralityReport r = is_central(alg, casimir_element(e.f, e.n, k));
      INFO(family_name(e.f) << " C" << k << " violates against "
                            << r.violating_generator);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("non-central elements are rejected with a witness") {
  const LieAlgebraSpec wh = builtin_algebra(Family::WeylHeisenberg, 1);
  const CentralityReport r = is_central(wh, env_gen(wh, "G_1"));
  CHECK_FALSE(r.pass);
  CHECK(r.violating_generator == "F_1");
  CHECK_FALSE(r.residual.is_zero());

  // A sign-corrupted quadratic invariant must also fail.
  const LieAlgebraSpec ha = builtin_algebra(Family::Hamilton, 3);
  const EnvElement bad = env_axpy(casimir_element(Family::Hamilton, 3, 2),
                                  Rat(1), env_gen(ha, "G_1"));
  CHECK_FALSE(is_central(ha, bad).pass);
}

TEST_CASE("unknown catalog entries throw") {
  CHECK_THROWS_AS(casimir_element(Family::WeylHeisenberg, 1, 2), Error);
  CHECK_THROWS_AS(casimir_element(Family::QuantumHamilton, 2, 1), Error);
}

TEST_CASE("catalog notes mention the adjudicated quartic repair") {
  CHECK_FALSE(casimir_notes(Family::QuantumHamilton).empty());
}
