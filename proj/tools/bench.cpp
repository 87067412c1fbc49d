// Timing comparison of the parallel kernels against their serial reference
// paths. Each pair is checked for equal results before the times are printed.

#include <chrono>
#include <cstdio>

#include "qca/enumerate.hpp"
#include "qca/glsseed.hpp"
#include "qca/lifting.hpp"

using namespace qca;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(F&& f) {
  auto t0 = clk::now();
  f();
  return seconds(t0, clk::now());
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s serial %7.3fs  parallel %7.3fs  x%.2f  results %s\n",
              name, serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              equal ? "equal" : "DIFFER");
}

}  // namespace

int main() {
  {
    GlsSeed g = build_gls_seed(3, 4, false);
    IntMatrix ls, lp;
    double ts = timed([&] { ls = gls_quasi_matrix(g.minors, false); });
    double tp = timed([&] { lp = gls_quasi_matrix(g.minors, true); });
    report("quasi matrix, Mat(3,4)", ts, tp, ls == lp);
  }
  {
    GlsSeed g = build_gls_seed(3, 3);
    Enumeration es, ep;
    double ts = timed([&] { es = enumerate_seeds(g.seed, 16, false); });
    double tp = timed([&] { ep = enumerate_seeds(g.seed, 16, true); });
    bool equal = es.seeds.size() == ep.seeds.size() &&
                 es.variables.size() == ep.variables.size();
    for (std::size_t i = 0; equal && i < es.variables.size(); ++i)
      equal = es.variables[i].value == ep.variables[i].value;
    report("seed closure, Mat(3,3)", ts, tp, equal);
  }
  {
    LocSeed ls = loc_seed(3, 6);
    Enumeration e = enumerate_seeds(ls.seed, 16, true);
    std::vector<TorusElement> vals;
    for (const auto& v : e.variables) vals.push_back(v.value);
    std::vector<long long> ds, dp;
    double ts = timed([&] { ds = minimal_denominators(vals, ls, false); });
    double tp = timed([&] { dp = minimal_denominators(vals, ls, true); });
    report("denominators, Loc(Gr(3,6))", ts, tp, ds == dp);
  }
  return 0;
}
