#include "verify.hpp"

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "qca/enumerate.hpp"
#include "qca/errors.hpp"
#include "qca/glsseed.hpp"
#include "qca/lifting.hpp"
#include "random_seed.hpp"

namespace qca_verify {

using namespace qca;
using qca_test::random_compatible_seed;
using qca_test::random_grading;

namespace {

struct CheckFail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& msg) {
  if (!ok) throw CheckFail(msg);
}

CriterionResult run(int id, const std::string& name,
                    const std::function<std::string()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  try {
    r.detail = body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

std::vector<std::vector<int>> subsets_of_size(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if ((int)pick.size() == t) {
      out.push_back(pick);
      return;
    }
    for (int x = from; x <= n; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// n-th power of a single-monomial element, n of any sign.
TorusElement monomial_power(const TorusElement& x, long long n) {
  const auto& [a, c] = *x.terms().begin();
  TorusElement out = TorusElement::constant(x.ambient(), QCoeff::one());
  TorusElement base = x;
  if (n < 0) {
    IntVec neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    TorusElement inv = TorusElement::monomial(x.ambient(), neg, QCoeff::one());
    TorusElement prod = torus_mul(inv, x);
    long long ph = 0;
    int ps = 0;
    check(prod.terms().begin()->second.is_unit(ph, ps), "non-unit monomial");
    base = inv * QCoeff::q_half_power(-ph, ps);
    n = -n;
  }
  for (long long i = 0; i < n; ++i) out = torus_mul(out, base);
  return out;
}

/// Exchange monomial of a seed, from its own cluster and L.
TorusElement seed_based_monomial(const Seed& s, const IntVec& a) {
  long long half = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      half += a[i] * a[j] * s.L(j, i);
  TorusElement out =
      TorusElement::constant(s.ambient, QCoeff::q_half_power(half));
  for (std::size_t i = 0; i < s.size(); ++i)
    if (a[i] != 0) out = torus_mul(out, monomial_power(s.cluster[i], a[i]));
  return out;
}

long long expected_balance(int a, int b) {
  if (a == 1 && b == 1) return 2;
  if (a == 1 || b == 1) return 3;
  if (a == b) return 3LL * a - 1;
  return 3LL * std::min(a, b);
}

void check_plucker_coverage(int k, int n, const LocSeed& ls,
                            const Enumeration& e) {
  std::vector<LocElement> pool = ls.values;
  for (const auto& v : e.variables)
    pool.push_back(loc_normalize(eval_in_loc(v.value, ls.gen_images).loc));
  for (const auto& I : subsets_of_size(n, k)) {
    LocElement as_var{plucker(ls.shape, I), 1};
    LocElement as_coeff{plucker(ls.shape, I), 0};
    bool hit = false;
    for (const auto& p : pool)
      if (loc_eq(p, as_var) || loc_eq(p, as_coeff)) {
        hit = true;
        break;
      }
    std::ostringstream os;
    os << "missing coordinate for a " << k << "-subset of 1.." << n;
    check(hit, os.str());
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool parallel) {
  std::vector<CriterionResult> out;

  // Loc(Gr(3,6)) enumeration is shared between two criteria
  std::optional<LocSeed> ls36;
  std::optional<Enumeration> e36;
  auto get36 = [&]() {
    if (!ls36) {
      ls36 = loc_seed(3, 6, parallel);
      e36 = enumerate_seeds(ls36->seed, 16, parallel);
    }
  };

  out.push_back(run(1, "matrix 2x2 calibration", [&] {
    GlsSeed g = build_gls_seed(2, 2, parallel);
    MatShape sh = g.shape;
    MatElement x11 = MatElement::generator(sh, 1, 1);
    MatElement x12 = MatElement::generator(sh, 1, 2);
    MatElement x21 = MatElement::generator(sh, 2, 1);
    MatElement x22 = MatElement::generator(sh, 2, 2);
    // independent expansion of the exchange identity for the determinant
    MatElement det = quantum_minor(sh, {1, 2}, {1, 2});
    check(det == mat_mul(x11, x22) - mat_mul(x12, x21) * QCoeff::q_half_power(2),
          "determinant expansion is off");
    Seed m = mutate(g.seed, 0);
    MatElement value = eval_in_matrix(m.cluster[0], g.minors);
    check(value == x11, "mutated corner variable is not x11 on the nose");
    Seed back = mutate(m, 0);
    check(back.cluster[0] == g.seed.cluster[0], "mutation is not involutive");
    return "mutating the corner of the 2x2 seed gives exactly x11";
  }));

  out.push_back(run(2, "grid seed validation and degree balance", [&] {
    int seeds = 0, mutable_total = 0;
    for (int k = 1; k <= 4; ++k)
      for (int j = 1; j <= 4; ++j) {
        if (k * j > 12) continue;
        GlsSeed g = build_gls_seed(k, j, parallel);
        ++seeds;
        long long d =
            check_compatibility(g.seed.B, g.seed.L, g.seed.mutable_flags);
        bool any_mutable = false;
        const IntVec& G = g.seed.gradings.at("G");
        for (int a = 1; a <= k; ++a)
          for (int b = 1; b <= j; ++b) {
            std::size_t v = gls_index(j, a, b);
            if (!g.seed.is_mutable(v)) continue;
            any_mutable = true;
            ++mutable_total;
            long long in = 0, outd = 0;
            for (std::size_t i = 0; i < g.seed.size(); ++i) {
              if (g.seed.B(v, i) > 0) in += g.seed.B(v, i) * G[i];
              if (g.seed.B(v, i) < 0) outd -= g.seed.B(v, i) * G[i];
            }
            check(in == outd, "incoming and outgoing degree sums differ");
            check(in == expected_balance(a, b), "degree balance value is off");
          }
        if (any_mutable)
          check(d == 2, "compatibility constant is not 2");
      }
    std::ostringstream os;
    os << seeds << " grids validated, balance checked at " << mutable_total
       << " mutable vertices, d = 2 throughout";
    return os.str();
  }));

  out.push_back(run(3, "matrix 3x3 closure and minor census", [&] {
    GlsSeed g = build_gls_seed(3, 3, parallel);
    Enumeration e = enumerate_seeds(g.seed, 16, parallel);
    check(e.completed, "closure did not complete");
    check(e.variables.size() == 16, "expected 16 mutable cluster variables");
    const IntVec& G0 = g.seed.gradings.at("G");
    std::vector<MatElement> evals;
    for (const auto& v : e.variables) {
      MatElement m = eval_in_matrix(v.value, g.minors);
      check(degree(v.value, G0) == v.g_entry, "variable is not homogeneous");
      evals.push_back(std::move(m));
    }
    int found = 0;
    for (int t = 1; t <= 3; ++t)
      for (const auto& I : subsets_of_size(3, t))
        for (const auto& J : subsets_of_size(3, t)) {
          MatElement minor = quantum_minor(g.shape, I, J);
          bool hit = false;
          for (const auto& m : evals)
            if (m == minor) {
              hit = true;
              break;
            }
          for (const auto& m : g.minors)
            if (m == minor) {
              hit = true;
              break;
            }
          check(hit, "a quantum minor is missing from the closure");
          ++found;
        }
    std::ostringstream os;
    os << e.seeds.size() << " seeds, 16 variables, all " << found
       << " quantum minors occur, all homogeneous";
    return os.str();
  }));

  out.push_back(run(4, "theta equals the minimal denominator", [&] {
    LocSeed l25 = loc_seed(2, 5, parallel);
    Enumeration e25 = enumerate_seeds(l25.seed, 16, parallel);
    check(e25.completed, "Loc(Gr(2,5)) closure did not complete");
    for (const auto& v : e25.variables) {
      check(v.has_theta, "theta missing");
      check(minimal_denominator(v.value, l25) == v.theta,
            "theta and denominator disagree on Loc(Gr(2,5))");
    }
    get36();
    Seed m22 = mutate(ls36->seed, ls36->grid_pos(2, 2));
    std::size_t p = ls36->grid_pos(2, 2);
    check(m22.gradings.at("theta")[p] == 2, "theta after (2,2) is not 2");
    check(minimal_denominator(m22.cluster[p], *ls36) == 2,
          "denominator after (2,2) is not 2");
    std::vector<TorusElement> vals;
    for (const auto& v : e36->variables) vals.push_back(v.value);
    std::vector<long long> ds = minimal_denominators(vals, *ls36, parallel);
    for (std::size_t i = 0; i < vals.size(); ++i)
      check(ds[i] == e36->variables[i].theta,
            "theta and denominator disagree on Loc(Gr(3,6))");
    std::ostringstream os;
    os << e25.variables.size() << " + " << e36->variables.size()
       << " variables checked, theta = denominator everywhere";
    return os.str();
  }));

  out.push_back(run(5, "Plucker coverage of the localized closures", [&] {
    LocSeed l24 = loc_seed(2, 4, parallel);
    Enumeration e24 = enumerate_seeds(l24.seed, 16, parallel);
    check(e24.completed, "Loc(Gr(2,4)) closure did not complete");
    check_plucker_coverage(2, 4, l24, e24);
    LocSeed l25 = loc_seed(2, 5, parallel);
    Enumeration e25 = enumerate_seeds(l25.seed, 16, parallel);
    check(e25.completed, "Loc(Gr(2,5)) closure did not complete");
    check_plucker_coverage(2, 5, l25, e25);
    get36();
    check(e36->completed, "Loc(Gr(3,6)) closure did not complete");
    check_plucker_coverage(3, 6, *ls36, *e36);
    return "all 6 + 10 + 20 coordinates appear as cluster variables";
  }));

  out.push_back(run(6, "Grassmannian lift of Gr(3,6)", [&] {
    GrSeed gs = grassmannian_seed(3, 6, parallel);
    check(gs.seed.size() == 10,
          "initial cluster size is not k(n-k)+1 = 10");
    check(gs.values[0] == plucker(gs.shape, {1, 2, 3}),
          "frozen unit position is not [123]");
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        std::vector<int> q1 =
            q1_set(gls_rows(3, 3, a, b), gls_cols(3, 3, a, b), 3, 6);
        check(gs.values[1 + gls_index(3, a, b)] == plucker(gs.shape, q1),
              "grid entry is not the bare Plucker coordinate");
      }
    for (const auto& x : gs.seed.cluster)
      for (const auto& [mono, c] : x.terms())
        for (const auto& [h, m] : c.terms())
          check(h % 2 == 0, "a q^{1/2} survives in the initial cluster");
    for (std::size_t i = 0; i < gs.seed.size(); ++i)
      for (std::size_t j = i + 1; j < gs.seed.size(); ++j)
        check(qm_quasi_exponent(gs.values[i], gs.values[j]) == gs.seed.L(i, j),
              "tracked L disagrees with the oracle");
    check(gs.seed.gradings.at("G") == IntVec(10, 1),
          "inherited grading is not all ones");
    Enumeration e = enumerate_seeds(gs.seed, 16, parallel);
    check(e.completed, "Grassmannian closure did not complete");
    IntVec dvec(gs.seed.ambient->rows(), 0);
    dvec.back() = 1;
    for (const auto& v : e.variables) {
      LiftValue val = eval_in_loc(v.value, gs.gen_images);
      check(val.z == 0, "central power survives");
      check(loc_normalize(val.loc).denom_exp == 0,
            "a cluster variable keeps a denominator");
      check(degree(v.value, dvec) == v.g_entry,
            "a cluster variable is not homogeneous of its tracked degree");
    }
    std::ostringstream os;
    os << "10-element initial cluster of bare Plucker coordinates; "
       << e.variables.size()
       << " variables denominator-free and homogeneous";
    return os.str();
  }));

  out.push_back(run(7, "randomized property suites", [&] {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> ae(-2, 2);
    const int cases = 1000;
    for (int it = 0; it < cases; ++it) {
      std::size_t m = 1 + it % 2;
      Seed s = random_compatible_seed(rng, m, 1 + it % 3);
      long long d = check_compatibility(s.B, s.L, s.mutable_flags);
      std::size_t k = it % m;

      IntMatrix E = e_matrix(s.B, k, s.mutable_flags);
      check(E * E == IntMatrix::identity(s.size()), "E is not an involution");

      Seed mu = mutate(s, k);
      check(check_compatibility(mu.B, mu.L, mu.mutable_flags) == d,
            "compatibility constant changed under mutation");
      Seed back = mutate(mu, k);
      check(back.cluster[k] == s.cluster[k] && back.B == s.B && back.L == s.L &&
                back.gradings == s.gradings,
            "mutation is not involutive");

      IntVec H = random_grading(rng, s);
      Seed rq = rescale_by_q(s, H);
      Seed mrq = mutate(rq, k);
      IntVec Hp = E.transpose().mul(H);
      check(mrq.cluster[k] == mu.cluster[k] * QCoeff::q_half_power(Hp[k]),
            "q-rescaled mutation correspondence fails");

      IntVec t = random_grading(rng, s);
      IntVec u = random_grading(rng, s);
      Seed rs = rescale_seed(s, t, u);

      IntVec a(s.size());
      for (auto& x : a) x = ae(rng);
      TorusElement lhs = seed_based_monomial(rs, a);
      long long tu = 0, au = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        au += a[i] * u[i];
        for (std::size_t j = 0; j < a.size(); ++j)
          tu += a[i] * a[j] * t[i] * u[j];
      }
      Seed lifted = s;
      lifted.ambient = rs.ambient;
      for (auto& x : lifted.cluster) x = lift_element(x, rs.ambient);
      TorusElement rhs = seed_based_monomial(lifted, a);
      IntVec zpow(rs.ambient->rows(), 0);
      zpow.back() = au;
      rhs = torus_mul(rhs, TorusElement::monomial(rs.ambient, zpow));
      rhs = rhs * QCoeff::q_half_power(tu);
      check(lhs == rhs, "exchange monomial identity fails");

      IntVec negu(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) negu[i] = -u[i];
      Seed undone =
          rescale_seed(rs, t, negu, (long long)rs.ambient->rows() - 1);
      check(undone.L == s.L, "reversal does not restore L");
      for (std::size_t i = 0; i < s.size(); ++i)
        check(undone.cluster[i] == lift_element(s.cluster[i], undone.ambient),
              "reversal does not restore the cluster");
    }
    std::ostringstream os;
    os << cases << " cases for each of the six properties";
    return os.str();
  }));

  out.push_back(run(8, "dehomogenisation homomorphism audit", [&] {
    int pairs = 0;
    for (int k = 2; k <= 3; ++k)
      for (int j = 2; j <= 3; ++j) {
        int n = k + j;
        MatShape ms{k, j};
        for (int i1 = 1; i1 <= k; ++i1)
          for (int j1 = 1; j1 <= j; ++j1)
            for (int i2 = 1; i2 <= k; ++i2)
              for (int j2 = 1; j2 <= j; ++j2) {
                MatElement a = MatElement::generator(ms, i1, j1);
                MatElement b = MatElement::generator(ms, i2, j2);
                check(loc_eq(alpha(mat_mul(a, b), n),
                             loc_mul(alpha(a, n), alpha(b, n))),
                      "generator pair breaks the homomorphism");
                ++pairs;
              }
      }
    int minors = 0;
    MatShape m33{3, 3};
    for (int t = 1; t <= 3; ++t)
      for (const auto& I : subsets_of_size(3, t))
        for (const auto& J : subsets_of_size(3, t)) {
          check(loc_eq(alpha(quantum_minor(m33, I, J), 6),
                       {plucker({3, 6}, q1_set(I, J, 3, 6)), 1}),
                "minor image identity fails");
          ++minors;
        }
    std::ostringstream os;
    os << pairs << " generator pairs and " << minors
       << " minor images verified bit-exactly";
    return os.str();
  }));

  return out;
}

}  // namespace qca_verify
