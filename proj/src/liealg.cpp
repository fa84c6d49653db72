/// @file  liealg.cpp
/// @brief Builtin algebra construction and exact-arithmetic checks.

#include "hamrep/liealg.hpp"

#include <algorithm>
#include <set>

namespace hamrep {

std::string family_name(Family f) {
  switch (f) {
    case Family::WeylHeisenberg: return "WeylHeisenberg";
    case Family::Hamilton: return "Hamilton";
    case Family::InhomHamilton: return "InhomHamilton";
    case Family::QuantumHamilton: return "QuantumHamilton";
    case Family::Galilei: return "Galilei";
    case Family::GalileiConjugate: return "GalileiConjugate";
    case Family::Euclidean: return "Euclidean";
  }
  throw Error("unknown family");
}

LieAlgebraSpec::LieAlgebraSpec(std::vector<std::string> labels)
    : dim(static_cast<int>(labels.size())), basis(std::move(labels)) {
  c.assign(dim, std::vector<std::vector<Rat>>(dim, std::vector<Rat>(dim, Rat(0))));
}

int LieAlgebraSpec::index_of(const std::string& label) const {
  auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end()) throw Error("unknown generator label: " + label);
  return static_cast<int>(it - basis.begin());
}

std::optional<int> LieAlgebraSpec::find(const std::string& label) const {
  auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end()) return std::nullopt;
  return static_cast<int>(it - basis.begin());
}

void LieAlgebraSpec::add_bracket(int a, int b, int k, const Rat& coef) {
  c[a][b][k] += coef;
  c[b][a][k] -= coef;
}

namespace {

std::string vec_label(const char* stem, int i) {
  return std::string(stem) + "_" + std::to_string(i);
}

std::string j_label(int i, int j) {
  return "J_" + std::to_string(i) + std::to_string(j);
}

/// Generator subset selectors per family (vector stems and scalar labels).
struct FamilyContent {
  bool J = false;
  std::vector<const char*> vectors;  // among G, F, Q, P in canonical order
  std::vector<const char*> scalars;  // among R, T, E, M, A, I in canonical order
};

FamilyContent family_content(Family f) {
  switch (f) {
    case Family::WeylHeisenberg: return {false, {"G", "F"}, {"R"}};
    case Family::Hamilton: return {true, {"G", "F"}, {"R"}};
    case Family::InhomHamilton: return {true, {"G", "F", "Q", "P"}, {"R", "T", "E"}};
    case Family::QuantumHamilton:
      return {true, {"G", "F", "Q", "P"}, {"R", "T", "E", "M", "A", "I"}};
    case Family::Galilei: return {true, {"G", "P"}, {"E", "M"}};
    case Family::GalileiConjugate: return {true, {"F", "Q"}, {"E", "A"}};
    case Family::Euclidean: return {true, {"P"}, {}};
  }
  throw Error("unknown family");
}

}  // namespace

LieAlgebraSpec builtin_algebra(Family family, int n) {
  if (n < 1) throw Error("builtin_algebra: n must be >= 1");
  const FamilyContent fc = family_content(family);

  // Canonical ordering: J_{i<j}, G_i, F_i, R, Q_i, P_i, T, E, M, A, I.
  std::vector<std::string> labels;
  std::set<std::string> present_scalars(fc.scalars.begin(), fc.scalars.end());
  std::set<std::string> present_vectors(fc.vectors.begin(), fc.vectors.end());
  auto has_v = [&](const char* s) { return present_vectors.count(s) > 0; };
  auto has_s = [&](const char* s) { return present_scalars.count(s) > 0; };

  if (fc.J)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) labels.push_back(j_label(i, j));
  if (has_v("G")) for (int i = 1; i <= n; ++i) labels.push_back(vec_label("G", i));
  if (has_v("F")) for (int i = 1; i <= n; ++i) labels.push_back(vec_label("F", i));
  if (has_s("R")) labels.push_back("R");
  if (has_v("Q")) for (int i = 1; i <= n; ++i) labels.push_back(vec_label("Q", i));
  if (has_v("P")) for (int i = 1; i <= n; ++i) labels.push_back(vec_label("P", i));
  if (has_s("T")) labels.push_back("T");
  if (has_s("E")) labels.push_back("E");
  if (has_s("M")) labels.push_back("M");
  if (has_s("A")) labels.push_back("A");
  if (has_s("I")) labels.push_back("I");

  LieAlgebraSpec alg(std::move(labels));

  // Adds coef * J_{ij} (any index order, zero when i == j) to [X_a, X_b].
  auto add_J_target = [&](int a, int b, int i, int j, Rat coef) {
    if (i == j) return;
    if (i > j) { std::swap(i, j); coef = -coef; }
    alg.add_bracket(a, b, alg.index_of(j_label(i, j)), coef);
  };

  // Rotation sector: [J_ij, J_kl] = d_il J_jk + d_jk J_il - d_jl J_ik - d_ik J_jl.
  if (fc.J) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            const int a = alg.index_of(j_label(i, j));
            const int b = alg.index_of(j_label(k, l));
            if (a >= b) continue;  // fill each unordered pair once
            if (i == l) add_J_target(a, b, j, k, Rat(1));
            if (j == k) add_J_target(a, b, i, l, Rat(1));
            if (j == l) add_J_target(a, b, i, k, Rat(-1));
            if (i == k) add_J_target(a, b, j, l, Rat(-1));
          }
    // Vector sector: [J_ij, V_k] = d_jk V_i - d_ik V_j.
    for (const char* stem : {"G", "F", "Q", "P"}) {
      if (!has_v(stem)) continue;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const int a = alg.index_of(j_label(i, j));
          alg.add_bracket(a, alg.index_of(vec_label(stem, j)),
                          alg.index_of(vec_label(stem, i)), Rat(1));
          alg.add_bracket(a, alg.index_of(vec_label(stem, i)),
                          alg.index_of(vec_label(stem, j)), Rat(-1));
        }
    }
  }

  // Paired brackets; each class applies only when all participants exist.
  auto pair_bracket = [&](const char* x, const char* y, const char* target, Rat coef) {
    if (!has_v(x) || !has_v(y) || !has_s(target)) return;
    const int k = alg.index_of(target);
    for (int i = 1; i <= n; ++i)
      alg.add_bracket(alg.index_of(vec_label(x, i)), alg.index_of(vec_label(y, i)), k, coef);
  };
  auto vec_scalar_bracket = [&](const char* x, const char* y, const char* target, Rat coef) {
    if (!has_v(x) || !has_s(y) || !has_v(target)) return;
    const int b = alg.index_of(y);
    for (int i = 1; i <= n; ++i)
      alg.add_bracket(alg.index_of(vec_label(x, i)), b,
                      alg.index_of(vec_label(target, i)), coef);
  };

  pair_bracket("G", "F", "R", Rat(1));   // [G_i, F_k] = d_ik R
  pair_bracket("G", "Q", "T", Rat(1));   // [G_i, Q_k] = d_ik T
  pair_bracket("F", "P", "T", Rat(-1));  // [F_i, P_k] = -d_ik T
  pair_bracket("P", "Q", "I", Rat(1));   // [P_i, Q_k] = d_ik I   (hbar := 1)
  pair_bracket("G", "P", "M", Rat(1));   // [G_i, P_k] = d_ik M
  pair_bracket("F", "Q", "A", Rat(1));   // [F_i, Q_k] = d_ik A
  vec_scalar_bracket("G", "E", "P", Rat(1));  // [G_i, E] = P_i
  vec_scalar_bracket("F", "E", "Q", Rat(1));  // [F_i, E] = Q_i
  if (has_s("R") && has_s("E") && has_s("T"))
    alg.add_bracket(alg.index_of("R"), alg.index_of("E"), alg.index_of("T"), Rat(2));
  if (has_s("E") && has_s("T") && has_s("I"))
    alg.add_bracket(alg.index_of("E"), alg.index_of("T"), alg.index_of("I"), Rat(-1));

  return alg;
}

std::vector<Rat> bracket(const LieAlgebraSpec& alg, const std::vector<Rat>& x,
                         const std::vector<Rat>& y) {
  if (static_cast<int>(x.size()) != alg.dim || static_cast<int>(y.size()) != alg.dim)
    throw Error("bracket: coefficient vector length mismatch");
  std::vector<Rat> out(alg.dim, Rat(0));
  for (int a = 0; a < alg.dim; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < alg.dim; ++b) {
      if (y[b] == 0) continue;
      const Rat xy = x[a] * y[b];
      for (int k = 0; k < alg.dim; ++k)
        if (alg.c[a][b][k] != 0) out[k] += xy * alg.c[a][b][k];
    }
  }
  return out;
}

JacobiReport jacobi_check(const LieAlgebraSpec& alg) {
  JacobiReport rep;
  const int d = alg.dim;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int e = b + 1; e < d; ++e)
        for (int k = 0; k < d; ++k) {
          Rat sum(0);
          for (int m = 0; m < d; ++m) {
            sum += alg.c[a][b][m] * alg.c[m][e][k];
            sum += alg.c[b][e][m] * alg.c[m][a][k];
            sum += alg.c[e][a][m] * alg.c[m][b][k];
          }
          if (sum != 0) {
            rep.pass = false;
            rep.violations.push_back({a, b, e, k, sum});
          }
        }
  return rep;
}

SubspaceSpec::SubspaceSpec(const LieAlgebraSpec& p, std::vector<int> m)
    : parent(&p), members(std::move(m)) {
  std::set<int> seen;
  for (int i : members) {
    if (i < 0 || i >= p.dim) throw Error("SubspaceSpec: index out of range");
    if (!seen.insert(i).second) throw Error("SubspaceSpec: duplicate member");
  }
}

SubspaceSpec::SubspaceSpec(const LieAlgebraSpec& p,
                           const std::vector<std::string>& labels)
    : parent(&p) {
  for (const auto& l : labels) members.push_back(p.index_of(l));
}

bool is_ideal(const SubspaceSpec& s) {
  const LieAlgebraSpec& alg = *s.parent;
  std::vector<bool> in(alg.dim, false);
  for (int m : s.members) in[m] = true;
  for (int a = 0; a < alg.dim; ++a)
    for (int m : s.members)
      for (int k = 0; k < alg.dim; ++k)
        if (!in[k] && alg.c[a][m][k] != 0) return false;
  return true;
}

LieAlgebraSpec quotient(const SubspaceSpec& s) {
  if (!is_ideal(s)) throw NotAnIdeal("quotient: subspace is not an ideal");
  const LieAlgebraSpec& alg = *s.parent;
  std::vector<bool> in(alg.dim, false);
  for (int m : s.members) in[m] = true;

  std::vector<std::string> labels;
  std::vector<int> keep;
  for (int i = 0; i < alg.dim; ++i)
    if (!in[i]) { keep.push_back(i); labels.push_back(alg.basis[i]); }

  LieAlgebraSpec q(std::move(labels));
  for (int a = 0; a < q.dim; ++a)
    for (int b = 0; b < q.dim; ++b)
      for (int k = 0; k < q.dim; ++k)
        q.c[a][b][k] = alg.c[keep[a]][keep[b]][keep[k]];
  return q;
}

int rational_rank(std::vector<std::vector<Rat>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rat factor = m[r][col] / m[rank][col];
      for (int cc = col; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

int invariant_count(const LieAlgebraSpec& alg, int trials, unsigned seed) {
  if (trials < 1) throw Error("invariant_count: trials must be >= 1");
  int max_rank = 0;
  for (int t = 0; t < trials; ++t) {
    std::seed_seq sq{static_cast<unsigned>(seed), static_cast<unsigned>(t)};
    std::mt19937_64 rng(sq);
    std::vector<Rat> x(alg.dim);
    for (auto& xi : x) xi = random_rational(rng);
    std::vector<std::vector<Rat>> K(alg.dim, std::vector<Rat>(alg.dim, Rat(0)));
    for (int a = 0; a < alg.dim; ++a)
      for (int b = 0; b < alg.dim; ++b)
        for (int k = 0; k < alg.dim; ++k)
          if (alg.c[a][b][k] != 0) K[a][b] += alg.c[a][b][k] * x[k];
    max_rank = std::max(max_rank, rational_rank(std::move(K)));
  }
  return alg.dim - max_rank;
}

}  // namespace hamrep
