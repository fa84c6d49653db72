/// @file  suites.cpp
/// @brief Implementation of the named verification suites.

#include "hamrep/suites.hpp"

#include "hamrep/enveloping.hpp"
#include "hamrep/groups.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace hamrep {

namespace {

using C = std::complex<double>;

std::string vl(const char* stem, int i) {
  return std::string(stem) + "_" + std::to_string(i);
}
std::string jl(int i, int j) {
  return "J_" + std::to_string(i) + std::to_string(j);
}

void add_check(SuiteResult& out, const std::string& name, bool pass,
               double dev = 0.0, const std::string& detail = "") {
  out.checks.push_back({name, pass, dev, pass ? "" : detail});
  out.pass = out.pass && pass;
}

// ---------------------------------------------------------------------------
// algebra suite: Jacobi integrity + homomorphic-quotient table rows
// ---------------------------------------------------------------------------

/// Expected-target spec builder: same labels as the quotient, brackets added
/// from the named target's definition (not from the parent's constants).
struct Expected {
  LieAlgebraSpec spec;

  explicit Expected(const LieAlgebraSpec& like)
      : spec(std::vector<std::string>(like.basis)) {}

  bool has(const std::string& l) const { return spec.find(l).has_value(); }

  void bracket(const std::string& a, const std::string& b,
               const std::string& k, const Rat& coef) {
    spec.add_bracket(spec.index_of(a), spec.index_of(b), spec.index_of(k),
                     coef);
  }

  /// so(n) block: [J_ij, J_kl] = d_il J_jk + d_jk J_il - d_jl J_ik - d_ik J_jl.
  void so_block(int n) {
    auto addJ = [&](int a, int b, int i, int j, Rat coef) {
      if (i == j) return;
      if (i > j) { std::swap(i, j); coef = -coef; }
      spec.add_bracket(a, b, spec.index_of(jl(i, j)), coef);
    };
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            const int a = spec.index_of(jl(i, j));
            const int b = spec.index_of(jl(k, l));
            if (a >= b) continue;
            if (i == l) addJ(a, b, j, k, Rat(1));
            if (j == k) addJ(a, b, i, l, Rat(1));
            if (j == l) addJ(a, b, i, k, Rat(-1));
            if (i == k) addJ(a, b, j, l, Rat(-1));
          }
  }

  /// Vector rotation action [J_ij, V_j] = V_i, [J_ij, V_i] = -V_j.
  void rot_action(int n, const char* stem) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int a = spec.index_of(jl(i, j));
        spec.add_bracket(a, spec.index_of(vl(stem, j)),
                         spec.index_of(vl(stem, i)), Rat(1));
        spec.add_bracket(a, spec.index_of(vl(stem, i)),
                         spec.index_of(vl(stem, j)), Rat(-1));
      }
  }
};

bool specs_equal(const LieAlgebraSpec& a, const LieAlgebraSpec& b,
                 std::string* why) {
  if (a.basis != b.basis) {
    if (why) *why = "basis label mismatch";
    return false;
  }
  for (int x = 0; x < a.dim; ++x)
    for (int y = 0; y < a.dim; ++y)
      for (int k = 0; k < a.dim; ++k)
        if (a.c[x][y][k] != b.c[x][y][k]) {
          if (why)
            *why = "[" + a.basis[x] + "," + a.basis[y] + "] coefficient of " +
                   a.basis[k];
          return false;
        }
  return true;
}

/// Expands label stems: "G*" -> G_1..G_n, plain labels pass through.
std::vector<std::string> expand(const std::vector<std::string>& stems, int n) {
  std::vector<std::string> out;
  for (const auto& s : stems) {
    if (s.size() == 2 && s[1] == '*')
      for (int i = 1; i <= n; ++i) out.push_back(vl(s.substr(0, 1).c_str(), i));
    else
      out.push_back(s);
  }
  return out;
}

/// Target shapes for the homomorphic-group table rows.
enum class Target {
  Abelian,          // all brackets vanish
  SO,               // J block only (+ optional central scalars)
  SOVec,            // J block + rotation action on listed stems, else zero
  BuiltinFamily,    // quotient equals a builtin family verbatim
  HamiltonSemi,     // Hamilton block + normal part (abelian or H(n+1)-iso)
};

struct QuotRow {
  const char* title;
  Family parent;
  std::vector<std::string> normal;  // stems, "*" suffix = vector
  Target target;
  std::vector<std::string> vec_stems;      // SOVec rotation-acted stems
  Family builtin = Family::Euclidean;      // BuiltinFamily target
  bool normal_is_heis = false;             // HamiltonSemi: {P,Q,T,E,I} pairs
};

/// Builds the expected spec for a row (given the actual quotient's labels)
/// and compares.  HamiltonSemi also re-adds the surviving cross-action
/// brackets dictated by the named semidirect structure.
bool row_matches(const QuotRow& row, int n, const LieAlgebraSpec& q,
                 std::string* why) {
  if (row.target == Target::BuiltinFamily)
    return specs_equal(q, builtin_algebra(row.builtin, n), why);

  Expected e(q);
  const bool hasJ = e.has(jl(1, 2));
  switch (row.target) {
    case Target::Abelian:
      break;
    case Target::SO:
      if (hasJ) e.so_block(n);
      break;
    case Target::SOVec:
      if (hasJ) e.so_block(n);
      for (const auto& s : row.vec_stems) e.rot_action(n, s.c_str());
      break;
    case Target::HamiltonSemi: {
      if (hasJ) e.so_block(n);
      for (const char* s : {"G", "F", "Q", "P"})
        if (e.has(vl(s, 1))) e.rot_action(n, s);
      // Hamilton block.
      for (int i = 1; i <= n; ++i) e.bracket(vl("G", i), vl("F", i), "R", 1);
      // Surviving semidirect action of the Hamilton block on the normal
      // part (each bracket only if both sides survived the quotient).
      auto opt = [&](const std::string& a, const std::string& b,
                     const std::string& k, const Rat& coef) {
        if (e.has(a) && e.has(b) && e.has(k)) e.bracket(a, b, k, coef);
      };
      for (int i = 1; i <= n; ++i) {
        opt(vl("G", i), vl("Q", i), "T", 1);
        opt(vl("F", i), vl("P", i), "T", -1);
        opt(vl("G", i), "E", vl("P", i), 1);
        opt(vl("F", i), "E", vl("Q", i), 1);
        opt(vl("G", i), vl("P", i), "M", 1);
        opt(vl("F", i), vl("Q", i), "A", 1);
      }
      opt("R", "E", "T", 2);
      // Normal-part pairs (H(n+1) shape) when the center I survives.
      if (row.normal_is_heis) {
        for (int i = 1; i <= n; ++i) e.bracket(vl("P", i), vl("Q", i), "I", 1);
        e.bracket("E", "T", "I", -1);
      }
      break;
    }
    default:
      break;
  }
  return specs_equal(q, e.spec, why);
}

std::vector<QuotRow> quotient_rows() {
  using V = std::vector<std::string>;
  std::vector<QuotRow> rows;
  auto add = [&](QuotRow r) { rows.push_back(std::move(r)); };
  // Table of quotients of H(n), Ha(n), Ga(n).
  add({"H/center->A(2n)", Family::WeylHeisenberg, V{"R"}, Target::Abelian, {}});
  add({"Ha/{R}->SOxA(2n)", Family::Hamilton, V{"R"}, Target::SOVec,
       {"G", "F"}});
  add({"Ha/{G,R}->SOxA(n)", Family::Hamilton, V{"G*", "R"}, Target::SOVec,
       {"F"}});
  add({"Ha/{F,R}->SOxA(n)", Family::Hamilton, V{"F*", "R"}, Target::SOVec,
       {"G"}});
  add({"Ha/H(n)->SO", Family::Hamilton, V{"G*", "F*", "R"}, Target::SO, {}});
  add({"Ga/{M}->E(n)xA(n+1)", Family::Galilei, V{"M"}, Target::SOVec,
       {"G", "P"}});  // plus [G_i,E]=P_i, added below via special-case
  add({"Ga/{P,M}->SOxA(1)xA(n)", Family::Galilei, V{"P*", "M"}, Target::SOVec,
       {"G"}});
  add({"Ga/{E,P,M}->E(n)", Family::Galilei, V{"E", "P*", "M"}, Target::SOVec,
       {"G"}});
  add({"Ga/H(n)->SOxA(1)", Family::Galilei, V{"G*", "P*", "M"}, Target::SO,
       {}});
  add({"Ga/{E}+H(n)->SO", Family::Galilei, V{"E", "G*", "P*", "M"}, Target::SO,
       {}});
  // Table of quotients of QHa(n).
  add({"QHa/{A}->HaxH(n+1)xA(1)", Family::QuantumHamilton, V{"A"},
       Target::HamiltonSemi, {}, Family::Euclidean, true});
  add({"QHa/{M}->HaxH(n+1)xA(1)", Family::QuantumHamilton, V{"M"},
       Target::HamiltonSemi, {}, Family::Euclidean, true});
  add({"QHa/{I}->HaxA(2n+4)", Family::QuantumHamilton, V{"I"},
       Target::HamiltonSemi, {}});
  add({"QHa/{A,M}->HaxH(n+1)", Family::QuantumHamilton, V{"A", "M"},
       Target::HamiltonSemi, {}, Family::Euclidean, true});
  add({"QHa/{A,I}->HaxA(2n+3)", Family::QuantumHamilton, V{"A", "I"},
       Target::HamiltonSemi, {}});
  add({"QHa/{M,I}->HaxA(2n+3)", Family::QuantumHamilton, V{"M", "I"},
       Target::HamiltonSemi, {}});
  add({"QHa/{I,A,M}->HaxA(2n+2)", Family::QuantumHamilton, V{"I", "A", "M"},
       Target::HamiltonSemi, {}});
  add({"QHa/{P,T,M,I}->HaxA(n+2)", Family::QuantumHamilton,
       V{"P*", "T", "M", "I"}, Target::HamiltonSemi, {}});
  add({"QHa/{Q,T,A,I}->HaxA(n+2)", Family::QuantumHamilton,
       V{"Q*", "T", "A", "I"}, Target::HamiltonSemi, {}});
  add({"QHa/{P,G,R,T,M,I}->GaConj", Family::QuantumHamilton,
       V{"P*", "G*", "R", "T", "M", "I"}, Target::BuiltinFamily, {},
       Family::GalileiConjugate});
  add({"QHa/{Q,F,R,T,A,I}->Ga", Family::QuantumHamilton,
       V{"Q*", "F*", "R", "T", "A", "I"}, Target::BuiltinFamily, {},
       Family::Galilei});
  add({"QHa/{P,T,M,A,I}->HaxA(n+1)", Family::QuantumHamilton,
       V{"P*", "T", "M", "A", "I"}, Target::HamiltonSemi, {}});
  add({"QHa/{Q,T,A,M,I}->HaxA(n+1)", Family::QuantumHamilton,
       V{"Q*", "T", "A", "M", "I"}, Target::HamiltonSemi, {}});
  add({"QHa/H(n+1)xA(2)->Ha", Family::QuantumHamilton,
       V{"I", "P*", "Q*", "E", "T", "A", "M"}, Target::BuiltinFamily, {},
       Family::Hamilton});
  add({"QHa/{..,R}->SOxA(2n)", Family::QuantumHamilton,
       V{"I", "P*", "Q*", "E", "T", "A", "M", "R"}, Target::SOVec,
       {"G", "F"}});
  add({"QHa/{..,F,R}->E(n)", Family::QuantumHamilton,
       V{"I", "P*", "Q*", "E", "T", "A", "M", "F*", "R"}, Target::SOVec,
       {"G"}});
  add({"QHa/{..,G,R}->E(n)", Family::QuantumHamilton,
       V{"I", "P*", "Q*", "E", "T", "A", "M", "G*", "R"}, Target::SOVec,
       {"F"}});
  add({"QHa/{..,F,G,R}->SO", Family::QuantumHamilton,
       V{"I", "P*", "Q*", "E", "T", "A", "M", "F*", "G*", "R"}, Target::SO,
       {}});
  return rows;
}

SuiteResult suite_algebra(const SuiteConfig& cfg) {
  SuiteResult out{.name = "algebra"};
  const Family fams[] = {Family::WeylHeisenberg, Family::Hamilton,
                         Family::InhomHamilton, Family::QuantumHamilton,
                         Family::Galilei,       Family::GalileiConjugate,
                         Family::Euclidean};
  const int nmax = std::max(cfg.n, 4);
  for (Family f : fams)
    for (int n = 1; n <= nmax; ++n) {
      const LieAlgebraSpec alg = builtin_algebra(f, n);
      const JacobiReport jr = jacobi_check(alg);
      add_check(out, "jacobi/" + family_name(f) + "/n" + std::to_string(n),
                jr.pass, 0.0, "Jacobi identity violated");
    }

  // Homomorphic-group table rows (quotients by the listed normal subgroups).
  for (int n = 2; n <= 3; ++n) {
    for (const QuotRow& row : quotient_rows()) {
      const LieAlgebraSpec parent = builtin_algebra(row.parent, n);
      SubspaceSpec sub(parent, expand(row.normal, n));
      const std::string base =
          std::string(row.title) + "/n" + std::to_string(n);
      if (!is_ideal(sub)) {
        add_check(out, base + "/ideal", false, 0.0, "not an ideal");
        continue;
      }
      add_check(out, base + "/ideal", true);
      const LieAlgebraSpec q = quotient(sub);
      add_check(out, base + "/jacobi", jacobi_check(q).pass, 0.0,
                "quotient fails Jacobi");
      std::string why;
      bool match;
      if (std::string(row.title).rfind("Ga/{M}", 0) == 0) {
        // E(n) x_s A(n+1): Euclid {J,G} acting on {P,E} with [G_i,E] = P_i.
        Expected e(q);
        e.so_block(n);
        e.rot_action(n, "G");
        e.rot_action(n, "P");
        for (int i = 1; i <= n; ++i) e.bracket(vl("G", i), "E", vl("P", i), 1);
        match = specs_equal(q, e.spec, &why);
      } else {
        match = row_matches(row, n, q, &why);
      }
      add_check(out, base + "/target", match, 0.0,
                "structure mismatch at " + why);
    }
    // The printed row whose generator set is not an ideal: its minimal
    // ideal closure adds {M, A} and reproduces the following row.
    {
      const LieAlgebraSpec parent =
          builtin_algebra(Family::QuantumHamilton, n);
      SubspaceSpec printed(parent, expand({"I", "P*", "Q*", "E", "T"}, n));
      add_check(out,
                "QHa/{I,P,Q,E,T}-printed-not-ideal/n" + std::to_string(n),
                !is_ideal(printed), 0.0,
                "printed H(n+1) row unexpectedly closed");
    }
  }
  out.notes.push_back(
      "the homomorphic-group table's H(n+1) row {I,P,Q,E,T} is not an ideal "
      "([G_i,P_k] and [F_i,Q_k] land on M, A); its ideal closure adds {M,A} "
      "and reproduces the adjacent row, which is what is verified");
  out.notes.push_back(
      "several table targets' abelian-factor dimensions are corrected for "
      "the surviving central generators (e.g. quotient by {I} leaves the "
      "(2n+4)-dimensional abelian normal factor {Q,P,T,E,M,A})");
  return out;
}

// ---------------------------------------------------------------------------
// matrix-oracle suite
// ---------------------------------------------------------------------------

SuiteResult suite_matrix_oracle(const SuiteConfig& cfg) {
  SuiteResult out{.name = "matrix-oracle"};
  const int trials = std::max(cfg.trials, 1000);
  for (int n = 1; n <= 3; ++n) {
    std::mt19937_64 rng(cfg.seed + n);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      const GroupParams a = random_element(n, rng);
      const GroupParams b = random_element(n, rng);
      const Eigen::MatrixXd lhs = to_matrix(product(a, b));
      const Eigen::MatrixXd rhs = to_matrix(a) * to_matrix(b);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    add_check(out, "product/n" + std::to_string(n), worst <= cfg.tol_matrix,
              worst, "matrix product deviates");

    // Generator commutators vs structure constants.
    const LieAlgebraSpec alg = builtin_algebra(Family::QuantumHamilton, n);
    const std::vector<Eigen::MatrixXd> gen = matrix_log_generators(n);
    double gw = 0;
    for (int a = 0; a < alg.dim; ++a)
      for (int b = 0; b < alg.dim; ++b) {
        Eigen::MatrixXd lhs = gen[a] * gen[b] - gen[b] * gen[a];
        for (int k = 0; k < alg.dim; ++k)
          if (alg.c[a][b][k] != 0) lhs -= alg.c[a][b][k].get_d() * gen[k];
        gw = std::max(gw, lhs.cwiseAbs().maxCoeff());
      }
    add_check(out, "generators/n" + std::to_string(n), gw == 0.0, gw,
              "generator commutators deviate from structure constants");
  }
  return out;
}

// ---------------------------------------------------------------------------
// casimir-count suite (generic-rank invariant counts)
// ---------------------------------------------------------------------------

SuiteResult suite_casimir_count(const SuiteConfig& cfg) {
  SuiteResult out{.name = "casimir-count"};
  struct Row { Family f; int expect[4]; };
  const Row rows[] = {
      {Family::WeylHeisenberg, {1, 1, 1, 1}},
      {Family::Hamilton, {1, 2, 2, 3}},
      {Family::Galilei, {2, 3, 3, 4}},
      {Family::QuantumHamilton, {4, 5, 5, 6}},
  };
  for (const Row& r : rows)
    for (int n = 1; n <= 4; ++n) {
      const int got =
          invariant_count(builtin_algebra(r.f, n), 8, cfg.seed + n);
      std::ostringstream det;
      det << "expected " << r.expect[n - 1] << ", got " << got;
      add_check(out, family_name(r.f) + "/n" + std::to_string(n),
                got == r.expect[n - 1], 0.0, det.str());
    }
  out.notes.push_back(
      "counts follow the closed-form column (floor(n/2)-based); the four "
      "printed n=2 and n=4 table cells for the Galilei and quantum Hamilton "
      "rows contradict the antisymmetric-rank parity of their own formula "
      "column and are corrected (Ga: 2,3,3,4; QHa: 4,5,5,6)");
  return out;
}

// ---------------------------------------------------------------------------
// enveloping suite (Casimir centrality)
// ---------------------------------------------------------------------------

SuiteResult suite_enveloping(const SuiteConfig& cfg) {
  SuiteResult out{.name = "enveloping"};
  struct Entry { Family f; int n; int kmax; };
  std::vector<Entry> entries;
  for (int n = 1; n <= 4; ++n)
    entries.push_back({Family::WeylHeisenberg, n, 1});
  entries.push_back({Family::Hamilton, 3, 2});
  entries.push_back({Family::Galilei, 3, 3});
  entries.push_back({Family::GalileiConjugate, 3, 3});
  entries.push_back({Family::QuantumHamilton, 3, 5});
  for (const Entry& e : entries) {
    const LieAlgebraSpec alg = builtin_algebra(e.f, e.n);
    for (int k = 1; k <= e.kmax; ++k) {
      const CentralityReport cr =
          is_central(alg, casimir_element(e.f, e.n, k));
      add_check(out,
                family_name(e.f) + "/n" + std::to_string(e.n) + "/C" +
                    std::to_string(k),
                cr.pass, 0.0,
                "commutator with " + cr.violating_generator + " is nonzero");
    }
    const std::string notes = casimir_notes(e.f);
    if (!notes.empty() &&
        std::find(out.notes.begin(), out.notes.end(), notes) ==
            out.notes.end())
      out.notes.push_back(notes);
  }
  out.notes.push_back(
      "the quartic quantum Hamilton invariant uses the commutant-repaired "
      "B_ij (scalar coefficient T^2 + MA - IR and matching sign pattern); "
      "the printed variant fails centrality against F_1");
  (void)cfg;
  return out;
}

// ---------------------------------------------------------------------------
// casimir suite (eigenvalues across seeded label sets)
// ---------------------------------------------------------------------------

SuiteResult suite_casimir(const SuiteConfig& cfg) {
  SuiteResult out{.name = "casimir"};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> mag(0.3, 2.5);
  std::uniform_int_distribution<int> sign(0, 1), spin(0, 4);
  const int sets = 20;
  for (int s = 0; s < sets; ++s) {
    RepLabels lb;
    lb.lambda = mag(rng) * (sign(rng) ? 1 : -1);
    lb.mu = mag(rng) * (sign(rng) ? 1 : -1);
    lb.alpha = mag(rng) * (sign(rng) ? 1 : -1);
    lb.kappa = mag(rng) * (sign(rng) ? 1 : -1);
    lb.hbar = mag(rng);
    lb.two_j = spin(rng);
    lb.galilei_eps = mag(rng) * (sign(rng) ? 1 : -1);
    struct Fk { Family f; int kmax; };
    for (auto [f, kmax] : {Fk{Family::WeylHeisenberg, 1},
                           Fk{Family::Hamilton, 2}, Fk{Family::Galilei, 3},
                           Fk{Family::GalileiConjugate, 3},
                           Fk{Family::QuantumHamilton, 5}}) {
      bool ok = true;
      std::string detail;
      try {
        for (int k = 1; k <= kmax; ++k) casimir_eigenvalue(f, lb, k);
      } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
      }
      add_check(out,
                family_name(f) + "/labels" + std::to_string(s), ok, 0.0,
                detail);
    }
  }
  out.notes.push_back(
      "quantum Hamilton C5 evaluates to (lambda*kappa)^2 j(j+1): the "
      "(alpha*mu - kappa*lambda)^2 closed form belongs to the non-central "
      "printed element; for the unique central repair the spin coefficient "
      "is the scalar value of T^2 + MA - IR, which is lambda*kappa");
  out.notes.push_back(
      "scalarity of every represented invariant is asserted to 1e-9 by "
      "substitution into the enveloping polynomial");
  return out;
}

// ---------------------------------------------------------------------------
// uir-homomorphism suite
// ---------------------------------------------------------------------------

SuiteResult suite_uir(const SuiteConfig& cfg) {
  SuiteResult out{.name = "uir-homomorphism"};
  struct Run {
    const char* name;
    Family f;
    RepLabels lb;
  };
  std::vector<Run> runs;
  RepLabels base = cfg.labels;
  runs.push_back({"WeylHeisenberg", Family::WeylHeisenberg, base});
  for (int two_j : {0, 1, 2}) {
    RepLabels lb = base;
    lb.two_j = two_j;
    runs.push_back({"Hamilton", Family::Hamilton, lb});
  }
  runs.push_back({"Galilei", Family::Galilei, base});
  {
    RepLabels lb = base;  // printed basis 1
    lb.time_basis = TimeBasis::MomentumTime;
    lb.internal_basis = InternalBasis::ForceDiag;
    runs.push_back({"QuantumHamilton", Family::QuantumHamilton, lb});
    lb.time_basis = TimeBasis::PositionTime;  // printed basis 2
    lb.internal_basis = InternalBasis::VelocityDiag;
    runs.push_back({"QuantumHamilton", Family::QuantumHamilton, lb});
    lb.time_basis = TimeBasis::MomentumTime;  // remaining diagonal choices
    lb.internal_basis = InternalBasis::VelocityDiag;
    runs.push_back({"QuantumHamilton", Family::QuantumHamilton, lb});
    lb.time_basis = TimeBasis::PositionTime;
    lb.internal_basis = InternalBasis::ForceDiag;
    runs.push_back({"QuantumHamilton", Family::QuantumHamilton, lb});
  }
  auto family_selected = [&](Family f) {
    if (cfg.families.empty()) return true;
    for (const std::string& tok : cfg.families) {
      if ((tok == "h" || tok == "wh") && f == Family::WeylHeisenberg)
        return true;
      if (tok == "ha" && f == Family::Hamilton) return true;
      if (tok == "ga" && f == Family::Galilei) return true;
      if (tok == "qha" && f == Family::QuantumHamilton) return true;
    }
    return false;
  };
  int idx = 0;
  for (const Run& r : runs) {
    if (!family_selected(r.f)) {
      ++idx;
      continue;
    }
    const HomReport rep =
        verify_homomorphism(r.f, r.lb, cfg.trials, cfg.seed + idx);
    std::ostringstream name;
    name << r.name << "/2j" << r.lb.two_j;
    if (r.f == Family::QuantumHamilton)
      name << (r.lb.time_basis == TimeBasis::MomentumTime ? "/momentum"
                                                          : "/position")
           << (r.lb.internal_basis == InternalBasis::ForceDiag ? "-force"
                                                               : "-velocity");
    add_check(out, name.str(), rep.pass && rep.max_dev <= cfg.tol,
              rep.max_dev, "homomorphism deviation above tolerance");
    for (const std::string& nline : rep.notes)
      if (std::find(out.notes.begin(), out.notes.end(), nline) ==
          out.notes.end())
        out.notes.push_back(nline);
    ++idx;
  }
  return out;
}

// ---------------------------------------------------------------------------
// cocycle suite
// ---------------------------------------------------------------------------

GroupParams zero_central(GroupParams g) {
  g.iota = g.s = g.u = 0;
  return g;
}

SuiteResult suite_cocycle(const SuiteConfig& cfg) {
  SuiteResult out{.name = "cocycle"};
  const int trials = std::max(cfg.trials, 200);
  for (int n = 1; n <= 3; ++n) {
    std::mt19937_64 rng(cfg.seed + 17 * n);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      const GroupParams a = zero_central(random_element(n, rng));
      const GroupParams b = zero_central(random_element(n, rng));
      const GroupParams c = zero_central(random_element(n, rng));
      // omega(a,b) + omega(a*b, c) = omega(b,c) + omega(a, b*c), where the
      // section products a*b are re-projected to zero central part.
      const auto w_ab = cocycle(a, b);
      const auto w_bc = cocycle(b, c);
      const auto w_ab_c = cocycle(zero_central(product(a, b)), c);
      const auto w_a_bc = cocycle(a, zero_central(product(b, c)));
      for (int i = 0; i < 3; ++i)
        worst = std::max(worst,
                         std::abs(w_ab[i] + w_ab_c[i] - w_bc[i] - w_a_bc[i]));
    }
    add_check(out, "identity/n" + std::to_string(n), worst <= 1e-10, worst,
              "2-cocycle identity deviation");
  }
  return out;
}

// ---------------------------------------------------------------------------
// cover suite
// ---------------------------------------------------------------------------

SuiteResult suite_cover(const SuiteConfig& cfg) {
  SuiteResult out{.name = "cover"};
  // (-1)^{2j} center action.
  for (int two_j = 0; two_j <= 6; ++two_j) {
    const Eigen::MatrixXcd d =
        wigner_d(two_j, -Eigen::Matrix2cd::Identity());
    const double sgn = (two_j % 2 == 0) ? 1.0 : -1.0;
    const double dev =
        (d - sgn * Eigen::MatrixXcd::Identity(two_j + 1, two_j + 1))
            .cwiseAbs()
            .maxCoeff();
    add_check(out, "center/2j" + std::to_string(two_j), dev <= 1e-12, dev,
              "wigner_d(-1) is not (-1)^{2j}");
  }
  // Projection homomorphism.
  {
    std::mt19937_64 rng(cfg.seed);
    const int trials = std::max(cfg.trials, 200);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      const Eigen::Matrix2cd a = random_su2(rng), b = random_su2(rng);
      worst = std::max(worst, (su2_project(a * b) -
                               su2_project(a) * su2_project(b))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    add_check(out, "projection-homomorphism", worst <= 1e-10, worst,
              "su2_project is not multiplicative");
  }
  // Representation double-cover consistency: negating the cover element
  // flips only the D^j factor, by (-1)^{2j}.
  {
    std::mt19937_64 rng(cfg.seed + 1);
    double worst = 0;
    for (int two_j : {1, 2}) {
      RepLabels lb = cfg.labels;
      lb.two_j = two_j;
      CoverParams g;
      g.Rbar = random_su2(rng);
      for (int i = 0; i < 3; ++i) {
        g.v(i) = 0.3 * i - 0.2;
        g.f(i) = 0.1 * i + 0.4;
        g.q(i) = -0.5 + 0.2 * i;
        g.p(i) = 0.25 * i;
      }
      g.r = 0.7; g.t = -0.3; g.eps = 0.2; g.iota = 0.1; g.s = 0.4;
      g.u = -0.6;
      RepValue plus = qha_rep(lb, g);
      CoverParams gneg = g;
      gneg.Rbar = -g.Rbar;
      RepValue minus = qha_rep(lb, gneg);
      const double sgn = (two_j % 2 == 0) ? 1.0 : -1.0;
      double dev = (minus.dj - sgn * plus.dj).cwiseAbs().maxCoeff();
      dev = std::max(dev, quadphase_distance(plus.internal, minus.internal));
      dev = std::max(dev, quadphase_distance(plus.base, minus.base));
      worst = std::max(worst, dev);
    }
    add_check(out, "rep-double-cover", worst <= 1e-10, worst,
              "qha_rep(-Rbar) is not (-1)^{2j} on the D^j factor alone");
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public interface
// ---------------------------------------------------------------------------

void SuiteConfig::validate() const {
  if (n < 1) throw Error("SuiteConfig: n must be >= 1");
  if (trials < 1) throw Error("SuiteConfig: trials must be >= 1");
  if (tol <= 0 || tol_matrix <= 0)
    throw Error("SuiteConfig: tolerances must be positive");
  labels.validate();
}

std::vector<std::string> all_suite_names() {
  return {"algebra",    "casimir",       "casimir-count",
          "cocycle",    "cover",         "enveloping",
          "matrix-oracle", "uir-homomorphism"};
}

std::string canonical_suite_name(const std::string& name) {
  if (name == "uir") return "uir-homomorphism";
  const auto names = all_suite_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return name;
  throw Error("unknown suite: " + name);
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  config.validate();
  const std::string canon = canonical_suite_name(name);
  if (canon == "algebra") return suite_algebra(config);
  if (canon == "casimir") return suite_casimir(config);
  if (canon == "casimir-count") return suite_casimir_count(config);
  if (canon == "cocycle") return suite_cocycle(config);
  if (canon == "cover") return suite_cover(config);
  if (canon == "enveloping") return suite_enveloping(config);
  if (canon == "matrix-oracle") return suite_matrix_oracle(config);
  if (canon == "uir-homomorphism") return suite_uir(config);
  throw Error("unknown suite: " + name);
}

nlohmann::json report_to_json(const std::vector<SuiteResult>& suites,
                              const SuiteConfig& config) {
  nlohmann::json j;
  j["schema"] = "hamrep/1";
  j["config"] = {
      {"n", config.n},
      {"trials", config.trials},
      {"seed", config.seed},
      {"tol", config.tol},
      {"tol_matrix", config.tol_matrix},
      {"families", config.families},
      {"labels",
       {{"lambda", config.labels.lambda},
        {"mu", config.labels.mu},
        {"alpha", config.labels.alpha},
        {"kappa", config.labels.kappa},
        {"two_j", config.labels.two_j},
        {"hbar", config.labels.hbar},
        {"galilei_eps", config.labels.galilei_eps},
        {"time_basis",
         config.labels.time_basis == TimeBasis::MomentumTime
             ? "momentum_time" : "position_time"},
        {"internal_basis",
         config.labels.internal_basis == InternalBasis::ForceDiag
             ? "force_diag" : "velocity_diag"}}},
  };
  std::vector<SuiteResult> sorted = suites;
  std::sort(sorted.begin(), sorted.end(),
            [](const SuiteResult& a, const SuiteResult& b) {
              return a.name < b.name;
            });
  bool all = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const SuiteResult& s : sorted) {
    nlohmann::json js;
    js["name"] = s.name;
    js["pass"] = s.pass;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : s.checks) {
      nlohmann::json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["max_dev"] = c.max_dev;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(jc);
    }
    js["checks"] = checks;
    js["notes"] = s.notes;
    arr.push_back(js);
    all = all && s.pass;
  }
  j["suites"] = arr;
  j["pass"] = all;
  return j;
}

}  // namespace hamrep
