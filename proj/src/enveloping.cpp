/// @file  enveloping.cpp
/// @brief PBW rewriting and the Casimir catalog.

#include "hamrep/enveloping.hpp"

#include <deque>
#include <utility>

namespace hamrep {

void EnvElement::add_term(const std::vector<int>& expo, const Rat& coef) {
  if (coef == 0) return;
  auto it = terms.find(expo);
  if (it == terms.end()) {
    terms.emplace(expo, coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms.erase(it);
  }
}

EnvElement env_one(const LieAlgebraSpec& alg) {
  EnvElement e;
  e.add_term(std::vector<int>(alg.dim, 0), Rat(1));
  return e;
}

EnvElement env_gen(const LieAlgebraSpec& alg, const std::string& label) {
  EnvElement e;
  std::vector<int> expo(alg.dim, 0);
  expo[alg.index_of(label)] = 1;
  e.add_term(expo, Rat(1));
  return e;
}

EnvElement env_axpy(const EnvElement& a, const Rat& s, const EnvElement& b) {
  EnvElement out = a;
  for (const auto& [expo, coef] : b.terms) out.add_term(expo, s * coef);
  return out;
}

EnvElement env_scale(const Rat& s, const EnvElement& a) {
  EnvElement out;
  for (const auto& [expo, coef] : a.terms) out.add_term(expo, s * coef);
  return out;
}

namespace {

/// Expands an exponent vector into the ordered word of generator indices.
std::vector<int> expo_to_word(const std::vector<int>& expo) {
  std::vector<int> w;
  for (int g = 0; g < static_cast<int>(expo.size()); ++g)
    for (int rep = 0; rep < expo[g]; ++rep) w.push_back(g);
  return w;
}

constexpr long kRewriteBound = 1'000'000;

/// Normal-orders coef * X_{w[0]} ... X_{w[m-1]} into `out`, applying
/// X_b X_a -> X_a X_b + [X_b, X_a] for adjacent out-of-order pairs.
void normal_order_into(const LieAlgebraSpec& alg, std::vector<int> word,
                       Rat coef, EnvElement& out, long& steps) {
  std::deque<std::pair<std::vector<int>, Rat>> work;
  work.emplace_back(std::move(word), std::move(coef));
  while (!work.empty()) {
    if (++steps > kRewriteBound)
      throw Error("env_multiply: rewrite bound exceeded");
    auto [w, cf] = std::move(work.front());
    work.pop_front();
    int pos = -1;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
      if (w[i] > w[i + 1]) { pos = i; break; }
    if (pos < 0) {
      std::vector<int> expo(alg.dim, 0);
      for (int g : w) ++expo[g];
      out.add_term(expo, cf);
      continue;
    }
    const int b = w[pos], a = w[pos + 1];
    // Swapped word.
    std::vector<int> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work.emplace_back(std::move(swapped), cf);
    // Commutator words: pair replaced by each bracket target.
    for (int k = 0; k < alg.dim; ++k) {
      const Rat& ck = alg.c[b][a][k];
      if (ck == 0) continue;
      std::vector<int> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(std::move(shorter), cf * ck);
    }
  }
}

}  // namespace

EnvElement env_multiply(const LieAlgebraSpec& alg, const EnvElement& a,
                        const EnvElement& b) {
  EnvElement out;
  long steps = 0;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> word = expo_to_word(ea);
      const std::vector<int> wb = expo_to_word(eb);
      word.insert(word.end(), wb.begin(), wb.end());
      normal_order_into(alg, std::move(word), ca * cb, out, steps);
    }
  return out;
}

CentralityReport is_central(const LieAlgebraSpec& alg, const EnvElement& e) {
  CentralityReport rep;
  for (int g = 0; g < alg.dim; ++g) {
    EnvElement xg;
    std::vector<int> expo(alg.dim, 0);
    expo[g] = 1;
    xg.add_term(expo, Rat(1));
    EnvElement comm =
        env_axpy(env_multiply(alg, xg, e), Rat(-1), env_multiply(alg, e, xg));
    if (!comm.is_zero()) {
      rep.pass = false;
      rep.violating_generator = alg.basis[g];
      rep.residual = std::move(comm);
      return rep;
    }
  }
  return rep;
}

namespace {

std::string vl(const char* stem, int i) {
  return std::string(stem) + "_" + std::to_string(i);
}
std::string jl(int i, int j) {
  return "J_" + std::to_string(i) + std::to_string(j);
}

using E = EnvElement;

E mono2(const LieAlgebraSpec& alg, const std::string& x, const std::string& y) {
  return env_multiply(alg, env_gen(alg, x), env_gen(alg, y));
}

/// Sum over i<j of B_ij * B_ij for a builder producing B_ij.
template <typename F>
E sum_b_squared(const LieAlgebraSpec& alg, int n, F&& b_of) {
  E total;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const E b = b_of(i, j);
      total = env_axpy(total, Rat(1), env_multiply(alg, b, b));
    }
  return total;
}

}  // namespace

std::string casimir_notes(Family family) {
  if (family == Family::Galilei)
    return "quadratic-invariant B_ij uses M J_ij - G_j P_i + G_i P_j; the "
           "printed pattern's second term pair cancels and fails centrality";
  if (family == Family::GalileiConjugate)
    return "conjugate B_ij = A J_ij - F_j Q_i + F_i Q_j passes centrality as "
           "printed";
  if (family == Family::QuantumHamilton)
    return "quartic-invariant building block B_ij uses the scalar "
           "coefficient T^2 + MA - IR on J_ij (with the matching bilinear "
           "sign pattern); the printed coefficient is not central";
  return "";
}

EnvElement casimir_element(Family family, int n, int k) {
  const LieAlgebraSpec alg = builtin_algebra(family, n);

  if (family == Family::WeylHeisenberg) {
    if (k == 1) return env_gen(alg, "R");  // the central generator
    throw Error("casimir_element: WeylHeisenberg has only k=1");
  }

  if (family == Family::Hamilton && n == 3) {
    if (k == 1) return env_gen(alg, "R");
    if (k == 2) {
      auto b = [&](int i, int j) {
        E out = mono2(alg, "R", jl(i, j));
        out = env_axpy(out, Rat(1), mono2(alg, vl("F", j), vl("G", i)));
        out = env_axpy(out, Rat(-1), mono2(alg, vl("F", i), vl("G", j)));
        return out;
      };
      return sum_b_squared(alg, n, b);
    }
    throw Error("casimir_element: Hamilton(3) has k=1..2");
  }

  if ((family == Family::Galilei || family == Family::GalileiConjugate) && n == 3) {
    const bool conj = family == Family::GalileiConjugate;
    const char* central = conj ? "A" : "M";
    const char* vec1 = conj ? "F" : "G";   // F_j Q_i pattern vs G_j P_i
    const char* vec2 = conj ? "Q" : "P";
    if (k == 1) return env_gen(alg, central);
    if (k == 2) {
      // 2 M E - P^2  (conjugate: 2 A E - Q^2).
      E out = env_scale(Rat(2), mono2(alg, central, "E"));
      for (int i = 1; i <= n; ++i)
        out = env_axpy(out, Rat(-1), mono2(alg, vl(vec2, i), vl(vec2, i)));
      return out;
    }
    if (k == 3) {
      auto b = [&](int i, int j) {
        E out = mono2(alg, central, jl(i, j));
        out = env_axpy(out, Rat(-1), mono2(alg, vl(vec1, j), vl(vec2, i)));
        out = env_axpy(out, Rat(1), mono2(alg, vl(vec1, i), vl(vec2, j)));
        return out;
      };
      return sum_b_squared(alg, n, b);
    }
    throw Error("casimir_element: Galilei(3) has k=1..3");
  }

  if (family == Family::QuantumHamilton && n == 3) {
    if (k == 1) return env_gen(alg, "I");
    if (k == 2) return env_gen(alg, "M");
    if (k == 3) return env_gen(alg, "A");
    if (k == 4)
      return env_axpy(mono2(alg, "T", "T"), Rat(-1), mono2(alg, "I", "R"));
    if (k == 5) {
      // Auxiliary scalar quadratic C = T^2 + M A - I R (left-multiplied onto
      // J_ij).  The AM sign and several D-term signs below were fixed by an
      // exact commutant computation: this B_ij is the unique (up to scale)
      // element of its shape commuting with every non-rotation generator.
      E caux = mono2(alg, "T", "T");
      caux = env_axpy(caux, Rat(1), mono2(alg, "M", "A"));
      caux = env_axpy(caux, Rat(-1), mono2(alg, "I", "R"));
      auto b = [&](int i, int j) {
        E out = env_multiply(alg, caux, env_gen(alg, jl(i, j)));
        auto add2 = [&](const char* coefgen, const E& d) {
          out = env_axpy(out, Rat(1),
                         env_multiply(alg, env_gen(alg, coefgen), d));
        };
        // A (G_i P_j - G_j P_i)
        add2("A", env_axpy(mono2(alg, vl("G", i), vl("P", j)), Rat(-1),
                           mono2(alg, vl("G", j), vl("P", i))));
        // M (F_i Q_j - F_j Q_i)
        add2("M", env_axpy(mono2(alg, vl("F", i), vl("Q", j)), Rat(-1),
                           mono2(alg, vl("F", j), vl("Q", i))));
        // R (P_j Q_i - P_i Q_j)
        add2("R", env_axpy(mono2(alg, vl("P", j), vl("Q", i)), Rat(-1),
                           mono2(alg, vl("P", i), vl("Q", j))));
        // I (F_i G_j - F_j G_i)
        add2("I", env_axpy(mono2(alg, vl("F", i), vl("G", j)), Rat(-1),
                           mono2(alg, vl("F", j), vl("G", i))));
        // T (G_i Q_j - G_j Q_i - F_i P_j + F_j P_i)
        E d56 = env_axpy(mono2(alg, vl("G", i), vl("Q", j)), Rat(-1),
                         mono2(alg, vl("G", j), vl("Q", i)));
        d56 = env_axpy(d56, Rat(-1), mono2(alg, vl("F", i), vl("P", j)));
        d56 = env_axpy(d56, Rat(1), mono2(alg, vl("F", j), vl("P", i)));
        add2("T", d56);
        return out;
      };
      return sum_b_squared(alg, n, b);
    }
    throw Error("casimir_element: QuantumHamilton(3) has k=1..5");
  }

  throw Error("casimir_element: no catalog entry for " + family_name(family) +
              " n=" + std::to_string(n) + " k=" + std::to_string(k));
}

}  // namespace hamrep
