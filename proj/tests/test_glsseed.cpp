#include "doctest.h"
#include "qca/enumerate.hpp"
#include "qca/errors.hpp"
#include "qca/glsseed.hpp"

using namespace qca;

TEST_CASE("staircase row and column sets") {
  CHECK(gls_rows(2, 2, 1, 1) == std::vector<int>{2});
  CHECK(gls_cols(2, 2, 1, 1) == std::vector<int>{2});
  CHECK(gls_rows(2, 2, 1, 2) == std::vector<int>{2});
  CHECK(gls_cols(2, 2, 1, 2) == std::vector<int>{1});
  CHECK(gls_rows(2, 2, 2, 1) == std::vector<int>{1});
  CHECK(gls_cols(2, 2, 2, 1) == std::vector<int>{2});
  CHECK(gls_rows(2, 2, 2, 2) == std::vector<int>{1, 2});
  CHECK(gls_cols(2, 2, 2, 2) == std::vector<int>{1, 2});

  CHECK(gls_rows(3, 3, 2, 2) == std::vector<int>{2, 3});
  CHECK(gls_cols(3, 3, 2, 2) == std::vector<int>{2, 3});
  CHECK(gls_rows(3, 3, 3, 3) == std::vector<int>{1, 2, 3});
}

TEST_CASE("grading vector") {
  CHECK(gls_grading(3, 3) == IntVec{1, 1, 1, 1, 2, 2, 1, 2, 3});
  for (int s = 1; s <= 4; ++s) CHECK(gls_grading(4, 4)[gls_index(4, 1, s)] == 1);
}

TEST_CASE("exchange matrix for the 2x2 grid") {
  std::vector<char> flags;
  IntMatrix B = gls_exchange_matrix(2, 2, flags);
  CHECK(flags == std::vector<char>{1, 0, 0, 0});
  // column 0 splits into out-arrows (1,2),(2,1) and in-arrow (2,2)
  CHECK(B(1, 0) == 1);
  CHECK(B(2, 0) == 1);
  CHECK(B(3, 0) == -1);
  // frozen pairs carry no arrows
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = 1; j < 4; ++j) CHECK(B(i, j) == 0);
}

TEST_CASE("built seed for Mat(2,2)") {
  GlsSeed g = build_gls_seed(2, 2);
  CHECK(g.seed.size() == 4);
  CHECK(g.minors[0] == MatElement::generator(g.shape, 2, 2));
  CHECK(g.minors[1] == MatElement::generator(g.shape, 2, 1));
  CHECK(g.minors[2] == MatElement::generator(g.shape, 1, 2));
  CHECK(g.minors[3] == quantum_minor(g.shape, {1, 2}, {1, 2}));
  CHECK(g.seed.labels[3] == "M[12|12]");
  CHECK(g.seed.L(1, 0) == 1);
  CHECK(g.seed.L(3, 2) == 0);
  CHECK(check_compatibility(g.seed.B, g.seed.L, g.seed.mutable_flags) == 2);
  CHECK(g.seed.gradings.at("theta") == IntVec(4, 1));
}

TEST_CASE("compatibility constant is 2 across small grids") {
  for (auto [k, j] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    GlsSeed g = build_gls_seed(k, j);
    CHECK(check_compatibility(g.seed.B, g.seed.L, g.seed.mutable_flags) == 2);
  }
}

TEST_CASE("degree balance at mutable vertices") {
  int k = 3, j = 4;
  GlsSeed g = build_gls_seed(k, j);
  const IntVec& G = g.seed.gradings.at("G");
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= j; ++b) {
      std::size_t v = gls_index(j, a, b);
      if (!g.seed.is_mutable(v)) continue;
      long long in = 0, out = 0;
      for (std::size_t i = 0; i < g.seed.size(); ++i) {
        if (g.seed.B(v, i) > 0) in += g.seed.B(v, i) * G[i];
        if (g.seed.B(v, i) < 0) out -= g.seed.B(v, i) * G[i];
      }
      CHECK(in == out);
      long long expect;
      if (a == 1 && b == 1)
        expect = 2;
      else if (a == 1 || b == 1)
        expect = 3;
      else if (a == b)
        expect = 3 * a - 1;
      else
        expect = 3 * std::min(a, b);
      CHECK(in == expect);
    }
}

TEST_CASE("Mat(2,2) calibration: mutation at the corner gives x11") {
  GlsSeed g = build_gls_seed(2, 2);
  Seed m = mutate(g.seed, 0);
  MatElement value = eval_in_matrix(m.cluster[0], g.minors);
  CHECK(value == MatElement::generator(g.shape, 1, 1));
  // and back again
  Seed back = mutate(m, 0);
  CHECK(back.cluster[0] == g.seed.cluster[0]);
}

TEST_CASE("theta recurrence on Mat(3,3)") {
  GlsSeed g = build_gls_seed(3, 3);
  const IntVec& theta = g.seed.gradings.at("theta");
  IntVec after = theta_mutate(theta, g.seed.B, gls_index(3, 2, 2));
  CHECK(after[gls_index(3, 2, 2)] == 2);
  IntVec corner = theta_mutate(theta, g.seed.B, gls_index(3, 1, 1));
  CHECK(corner[gls_index(3, 1, 1)] == 1);
  // at (1,1) the incoming and outgoing theta sums differ (not Et-mutable data)
  IntVec bp = b_plus(g.seed.B, gls_index(3, 1, 1));
  IntVec bm = b_minus(g.seed.B, gls_index(3, 1, 1));
  long long up = 0, down = 0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (i == gls_index(3, 1, 1)) continue;
    up += bp[i] * theta[i];
    down += bm[i] * theta[i];
  }
  CHECK(up != down);
}

TEST_CASE("small enumerations stay inside the matrix algebra") {
  GlsSeed g22 = build_gls_seed(2, 2);
  Enumeration e22 = enumerate_seeds(g22.seed);
  CHECK(e22.completed);
  CHECK(e22.seeds.size() == 2);
  CHECK(e22.variables.size() == 2);

  GlsSeed g23 = build_gls_seed(2, 3);
  Enumeration e23 = enumerate_seeds(g23.seed);
  CHECK(e23.completed);
  CHECK(e23.variables.size() == 5);
  const IntVec& G0 = g23.seed.gradings.at("G");
  for (const auto& v : e23.variables) {
    MatElement m = eval_in_matrix(v.value, g23.minors);
    CHECK(!m.is_zero());
    CHECK(degree(v.value, G0) == v.g_entry);
  }

  Enumeration serial = enumerate_seeds(g23.seed, 16, false);
  CHECK(serial.seeds.size() == e23.seeds.size());
  CHECK(serial.variables.size() == e23.variables.size());
}

TEST_CASE("validation failures carry indices") {
  GlsSeed g = build_gls_seed(2, 2);
  Seed broken = g.seed;
  broken.L(0, 1) += 1;
  broken.L(1, 0) -= 1;
  CHECK_THROWS(validate_seed(broken));
}
