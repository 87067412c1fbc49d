#include "qca/glsseed.hpp"

#include <sstream>

#include "qca/errors.hpp"

namespace qca {

std::vector<int> gls_rows(int k, int j, int r, int s) {
  (void)j;
  std::vector<int> out;
  for (int x = k - r + 1; x <= k - r + s; ++x)
    if (1 <= x && x <= k) out.push_back(x);
  return out;
}

std::vector<int> gls_cols(int k, int j, int r, int s) {
  (void)k;
  std::vector<int> out;
  for (int x = j - s + 1; x <= j - s + r; ++x)
    if (1 <= x && x <= j) out.push_back(x);
  return out;
}

IntMatrix gls_exchange_matrix(int k, int j, std::vector<char>& mutable_flags) {
  std::size_t r = (std::size_t)k * j;
  mutable_flags.assign(r, 0);
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= j; ++b)
      mutable_flags[gls_index(j, a, b)] = (a < k && b < j);
  IntMatrix B(r, r);
  auto arrow = [&](int a1, int b1, int a2, int b2) {
    if (a2 < 1 || a2 > k || b2 < 1 || b2 > j) return;
    std::size_t from = gls_index(j, a1, b1), to = gls_index(j, a2, b2);
    if (!mutable_flags[from] && !mutable_flags[to]) return;
    // arrow from->to adds to the count of arrows into "to"
    B(to, from) += 1;
    B(from, to) -= 1;
  };
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= j; ++b) {
      arrow(a, b, a, b + 1);
      arrow(a, b, a + 1, b);
      arrow(a, b, a - 1, b - 1);
    }
  return B;
}

IntVec gls_grading(int k, int j) {
  IntVec G((std::size_t)k * j);
  for (int r = 1; r <= k; ++r)
    for (int s = 1; s <= j; ++s) G[gls_index(j, r, s)] = std::min(r, s);
  return G;
}

IntMatrix gls_quasi_matrix(const std::vector<MatElement>& cluster,
                           bool parallel) {
  std::size_t r = cluster.size();
  IntMatrix L(r, r);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) pairs.push_back({i, j});
  std::vector<long long> vals(pairs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long p = 0; p < (long long)pairs.size(); ++p)
    vals[p] = qm_quasi_exponent(cluster[pairs[p].first], cluster[pairs[p].second]);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    L(pairs[p].first, pairs[p].second) = vals[p];
    L(pairs[p].second, pairs[p].first) = -vals[p];
  }
  return L;
}

GlsSeed build_gls_seed(int k, int j, bool parallel) {
  if (k < 1 || j < 1) throw std::invalid_argument("grid sizes must be positive");
  GlsSeed out;
  out.k = k;
  out.j = j;
  out.shape = MatShape{k, j};
  std::size_t r = (std::size_t)k * j;

  out.minors.reserve(r);
  std::vector<std::string> labels(r);
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= j; ++b) {
      std::vector<int> R = gls_rows(k, j, a, b);
      std::vector<int> C = gls_cols(k, j, a, b);
      out.minors.push_back(quantum_minor(out.shape, R, C));
      std::ostringstream os;
      os << "M[";
      for (int x : R) os << x;
      os << "|";
      for (int x : C) os << x;
      os << "]";
      labels[gls_index(j, a, b)] = os.str();
    }

  Seed& s = out.seed;
  s.B = gls_exchange_matrix(k, j, s.mutable_flags);
  s.L = gls_quasi_matrix(out.minors, parallel);
  s.ambient = make_ambient(s.L);
  for (std::size_t i = 0; i < r; ++i)
    s.cluster.push_back(TorusElement::generator(s.ambient, i));
  s.labels = labels;
  s.gradings["G"] = gls_grading(k, j);
  s.gradings["theta"] = IntVec(r, 1);
  validate_seed(s);
  return out;
}

MatElement eval_in_matrix(const TorusElement& v,
                          const std::vector<MatElement>& images) {
  if (images.empty()) throw std::invalid_argument("no generator images");
  MatShape shape = images[0].shape();
  if (v.is_zero()) return MatElement(shape);
  if (v.rank() != images.size())
    throw std::invalid_argument("image count does not match torus rank");

  IntVec shift(v.rank(), 0);
  for (const auto& [a, c] : v.terms())
    for (std::size_t i = 0; i < a.size(); ++i)
      shift[i] = std::max(shift[i], -a[i]);

  auto eval_poly = [&](const TorusElement& w) {
    MatElement out(shape);
    for (const auto& [a, c] : w.terms()) {
      MatElement m = MatElement::constant(shape, c);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (long long n = 0; n < a[i]; ++n) m = mat_mul(m, images[i]);
      out += m;
    }
    return out;
  };

  bool laurent = false;
  for (long long x : shift) laurent |= (x != 0);
  if (!laurent) return eval_poly(v);
  TorusElement cleared =
      torus_mul(v, TorusElement::monomial(v.ambient(), shift));
  return qm_divide_right(eval_poly(cleared),
                         eval_poly(TorusElement::monomial(v.ambient(), shift)));
}

}  // namespace qca
