#include "qca/qmatrix.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qca/errors.hpp"

namespace qca {

namespace {

int max_gen(const IntVec& a) {
  for (int g = (int)a.size() - 1; g >= 0; --g)
    if (a[g] != 0) return g;
  return -1;
}

QCoeff q_inv() { return QCoeff::q_half_power(-2); }
QCoeff q_minus_qinv() {
  return QCoeff::q_half_power(2) - QCoeff::q_half_power(-2);
}

/// Add one power of generator h to every monomial; valid when every monomial
/// ends at or before h.
MatElement append_gen(const MatElement& e, int h) {
  MatElement out(e.shape());
  for (const auto& [a, c] : e.terms()) {
    IntVec b = a;
    ++b[h];
    out.add_term(b, c);
  }
  return out;
}

MatElement mul_elem_gen(const MatElement& e, int g);

using CacheKey = std::tuple<int, int, IntVec, int>;
std::map<CacheKey, MatElement> g_cache;
std::mutex g_cache_mutex;

/// Normal form of X^a X_g for a normal monomial X^a.
MatElement mul_mono_gen(MatShape shape, const IntVec& a, int g) {
  int h = max_gen(a);
  if (h <= g) {
    IntVec b = a;
    ++b[g];
    return MatElement::monomial(shape, b);
  }
  CacheKey key{shape.rows, shape.cols, a, g};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  IntVec ap = a;
  --ap[h];
  int rh = h / shape.cols, ch = h % shape.cols;
  int rg = g / shape.cols, cg = g % shape.cols;
  MatElement out(shape);
  if (rh == rg || ch == cg) {
    out = append_gen(mul_mono_gen(shape, ap, g), h) * q_inv();
  } else if (ch < cg) {  // rh > rg here: antidiagonal pair, commutes
    out = append_gen(mul_mono_gen(shape, ap, g), h);
  } else {  // rh > rg, ch > cg: X_h X_g = X_g X_h - (q - q^{-1}) X_b X_c
    int b = rg * shape.cols + ch;
    int c = rh * shape.cols + cg;
    out = append_gen(mul_mono_gen(shape, ap, g), h) -
          mul_elem_gen(mul_mono_gen(shape, ap, b), c) * q_minus_qinv();
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(std::move(key), out);
  return out;
}

MatElement mul_elem_gen(const MatElement& e, int g) {
  MatElement out(e.shape());
  for (const auto& [a, c] : e.terms()) {
    MatElement part = mul_mono_gen(e.shape(), a, g);
    out += part * c;
  }
  return out;
}

long long inversions(const std::vector<int>& p) {
  long long inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

}  // namespace

MatElement MatElement::monomial(MatShape shape, const IntVec& a,
                                const QCoeff& c) {
  if ((int)a.size() != shape.gens())
    throw std::invalid_argument("exponent vector does not match shape");
  for (long long x : a)
    if (x < 0) throw std::invalid_argument("negative PBW exponent");
  MatElement out(shape);
  if (!c.is_zero()) out.terms_[a] = c;
  return out;
}

MatElement MatElement::generator(MatShape shape, int i, int j) {
  if (i < 1 || i > shape.rows || j < 1 || j > shape.cols)
    throw std::invalid_argument("generator index out of shape");
  IntVec a(shape.gens(), 0);
  a[(i - 1) * shape.cols + (j - 1)] = 1;
  return monomial(shape, a);
}

MatElement MatElement::constant(MatShape shape, const QCoeff& c) {
  return monomial(shape, IntVec(shape.gens(), 0), c);
}

const std::pair<const IntVec, QCoeff>& MatElement::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return *terms_.rbegin();
}

void MatElement::add_term(const IntVec& a, const QCoeff& c) {
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

static void require_same_shape(const MatElement& a, const MatElement& b) {
  if (!(a.shape() == b.shape()))
    throw std::invalid_argument("matrix algebra shapes differ");
}

MatElement& MatElement::operator+=(const MatElement& rhs) {
  require_same_shape(*this, rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, c);
  return *this;
}

MatElement& MatElement::operator-=(const MatElement& rhs) {
  require_same_shape(*this, rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
  return *this;
}

MatElement MatElement::operator+(const MatElement& rhs) const {
  MatElement out = *this;
  out += rhs;
  return out;
}

MatElement MatElement::operator-(const MatElement& rhs) const {
  MatElement out = *this;
  out -= rhs;
  return out;
}

MatElement MatElement::operator-() const {
  MatElement out(shape_);
  for (const auto& [a, c] : terms_) out.terms_[a] = -c;
  return out;
}

MatElement MatElement::operator*(const QCoeff& c) const {
  MatElement out(shape_);
  if (c.is_zero()) return out;
  for (const auto& [a, v] : terms_) {
    QCoeff w = v * c;
    if (!w.is_zero()) out.terms_[a] = w;
  }
  return out;
}

bool MatElement::operator==(const MatElement& rhs) const {
  if (terms_.empty() && rhs.terms_.empty()) return true;
  return shape_ == rhs.shape_ && terms_ == rhs.terms_;
}

std::string MatElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    std::string c = it->second.str();
    bool printed = false;
    if (c != "1") {
      if (c.find(' ') != std::string::npos)
        os << "(" << c << ")";
      else
        os << c;
      printed = true;
    }
    for (int g = 0; g < (int)it->first.size(); ++g) {
      long long e = it->first[g];
      if (e == 0) continue;
      if (printed) os << "*";
      printed = true;
      os << "x" << (g / shape_.cols + 1) << (g % shape_.cols + 1);
      if (e != 1) os << "^" << e;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

MatElement mat_mul(const MatElement& A, const MatElement& B) {
  require_same_shape(A, B);
  MatElement out(A.shape());
  for (const auto& [b, cb] : B.terms()) {
    MatElement e = A;
    for (int g = 0; g < (int)b.size(); ++g)
      for (long long n = 0; n < b[g]; ++n) e = mul_elem_gen(e, g);
    out += e * cb;
  }
  return out;
}

MatElement normal_form(MatShape shape,
                       const std::vector<std::pair<int, int>>& word,
                       const QCoeff& c, bool naive) {
  std::vector<int> gens;
  gens.reserve(word.size());
  for (auto [i, j] : word) {
    if (i < 1 || i > shape.rows || j < 1 || j > shape.cols)
      throw std::invalid_argument("generator index out of shape");
    gens.push_back((i - 1) * shape.cols + (j - 1));
  }
  if (!naive) {
    MatElement e = MatElement::constant(shape, c);
    for (int g : gens) e = mul_elem_gen(e, g);
    return e;
  }
  // reference strategy: rewrite the leftmost out-of-order adjacent pair
  MatElement out(shape);
  std::deque<std::pair<std::vector<int>, QCoeff>> work;
  work.emplace_back(gens, c);
  while (!work.empty()) {
    auto [w, coeff] = std::move(work.front());
    work.pop_front();
    std::size_t p = 0;
    for (; p + 1 < w.size(); ++p)
      if (w[p] > w[p + 1]) break;
    if (p + 1 >= w.size()) {
      IntVec a(shape.gens(), 0);
      for (int g : w) ++a[g];
      out.add_term(a, coeff);
      continue;
    }
    int x = w[p], y = w[p + 1];
    int rx = x / shape.cols, cx = x % shape.cols;
    int ry = y / shape.cols, cy = y % shape.cols;
    std::vector<int> swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    if (rx == ry || cx == cy) {
      work.emplace_back(std::move(swapped), coeff * q_inv());
    } else if (cx < cy) {
      work.emplace_back(std::move(swapped), coeff);
    } else {
      work.emplace_back(std::move(swapped), coeff);
      std::vector<int> corr = w;
      corr[p] = ry * shape.cols + cx;
      corr[p + 1] = rx * shape.cols + cy;
      work.emplace_back(std::move(corr), -(coeff * q_minus_qinv()));
    }
  }
  return out;
}

MatElement quantum_minor(MatShape shape, const std::vector<int>& I,
                         const std::vector<int>& J) {
  if (I.size() != J.size())
    throw std::invalid_argument("minor row and column sets differ in size");
  std::vector<int> rows = I, cols = J;
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  std::size_t t = rows.size();
  MatElement out(shape);
  std::vector<int> perm(t);
  for (std::size_t i = 0; i < t; ++i) perm[i] = (int)i;
  do {
    long long inv = inversions(perm);
    IntVec a(shape.gens(), 0);
    for (std::size_t s = 0; s < t; ++s) {
      int i = rows[s], j = cols[perm[s]];
      if (i < 1 || i > shape.rows || j < 1 || j > shape.cols)
        throw std::invalid_argument("minor index out of shape");
      ++a[(i - 1) * shape.cols + (j - 1)];
    }
    // rows strictly increase, so the word is already normal ordered
    out.add_term(a, QCoeff::q_half_power(2 * inv, inv % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MatElement plucker(MatShape shape, const std::vector<int>& J) {
  std::vector<int> rows(shape.rows);
  for (int i = 0; i < shape.rows; ++i) rows[i] = i + 1;
  return quantum_minor(shape, rows, J);
}

long long qm_quasi_exponent(const MatElement& A, const MatElement& B) {
  if (A.is_zero() || B.is_zero())
    throw std::invalid_argument("quasi-commutation of zero element");
  MatElement ab = mat_mul(A, B);
  MatElement ba = mat_mul(B, A);
  const auto& [a1, c1] = ab.leading();
  const auto& [a2, c2] = ba.leading();
  if (a1 != a2)
    throw NotQuasiCommuting("leading monomials of AB and BA differ");
  long long half = c1.terms().begin()->first - c2.terms().begin()->first;
  MatElement shifted = ba * QCoeff::q_half_power(half);
  if (!(ab == shifted))
    throw NotQuasiCommuting("AB and BA are not proportional by a q-power");
  if (half % 2 != 0) throw NotQuasiCommuting("AB = q^{n/2} BA with odd n");
  return half / 2;
}

static MatElement divide_impl(const MatElement& P, const MatElement& D,
                              bool right) {
  if (D.is_zero()) throw std::invalid_argument("division by zero");
  MatElement Q(P.shape());
  if (P.is_zero()) return Q;
  require_same_shape(P, D);
  long long uh = 0;
  int us = 0;
  if (!D.leading().second.is_unit(uh, us))
    throw NotDivisible("divisor leading coefficient is not a unit q-power");
  const IntVec& dlead = D.leading().first;
  MatElement R = P;
  while (!R.is_zero()) {
    const auto& [rlead, rcoeff] = R.leading();
    IntVec e(rlead.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = rlead[i] - dlead[i];
      if (e[i] < 0) throw NotDivisible("leading monomial not divisible");
    }
    MatElement mono = MatElement::monomial(P.shape(), e);
    MatElement full = right ? mat_mul(mono, D) : mat_mul(D, mono);
    const auto& [flead, fcoeff] = full.leading();
    if (flead != rlead) throw std::logic_error("leading terms fail to multiply");
    long long fh = 0;
    int fs = 0;
    if (!fcoeff.is_unit(fh, fs))
      throw std::logic_error("leading coefficient lost unitality");
    QCoeff factor = rcoeff;
    factor.scale(-fh, fs);
    Q.add_term(e, factor);
    R -= full * factor;
  }
  return Q;
}

MatElement qm_divide_right(const MatElement& P, const MatElement& D) {
  return divide_impl(P, D, true);
}

MatElement qm_divide_left(const MatElement& P, const MatElement& D) {
  return divide_impl(P, D, false);
}

namespace {

MatElement base_plucker(MatShape shape) {
  std::vector<int> J(shape.rows);
  for (int i = 0; i < shape.rows; ++i) J[i] = i + 1;
  return plucker(shape, J);
}

MatElement plucker_power(MatShape shape, long long m) {
  MatElement out = MatElement::constant(shape, QCoeff::one());
  MatElement base = base_plucker(shape);
  for (long long i = 0; i < m; ++i) out = mat_mul(out, base);
  return out;
}

/// N' with [1..k]^{-m} N = N' [1..k]^{-m}.
MatElement conj_by_denominator(const MatElement& N, long long m) {
  if (m == 0 || N.is_zero()) return N;
  MatElement pw = plucker_power(N.shape(), m);
  return qm_divide_left(mat_mul(N, pw), pw);
}

}  // namespace

LocElement loc_mul(const LocElement& a, const LocElement& b) {
  return {mat_mul(a.num, conj_by_denominator(b.num, a.denom_exp)),
          a.denom_exp + b.denom_exp};
}

LocElement loc_add(const LocElement& a, const LocElement& b) {
  long long d = std::max(a.denom_exp, b.denom_exp);
  MatElement na = mat_mul(a.num, plucker_power(a.num.shape(), d - a.denom_exp));
  MatElement nb = mat_mul(b.num, plucker_power(b.num.shape(), d - b.denom_exp));
  return {na + nb, d};
}

LocElement loc_scale(const LocElement& a, const QCoeff& c) {
  return {a.num * c, a.denom_exp};
}

bool loc_eq(const LocElement& a, const LocElement& b) {
  long long d = std::max(a.denom_exp, b.denom_exp);
  MatElement na = mat_mul(a.num, plucker_power(a.num.shape(), d - a.denom_exp));
  MatElement nb = mat_mul(b.num, plucker_power(b.num.shape(), d - b.denom_exp));
  return na == nb;
}

LocElement loc_normalize(const LocElement& e) {
  LocElement out = e;
  if (out.num.is_zero()) {
    out.denom_exp = 0;
    return out;
  }
  MatElement base = base_plucker(out.num.shape());
  while (out.denom_exp > 0) {
    try {
      MatElement q = qm_divide_right(out.num, base);
      out.num = std::move(q);
      --out.denom_exp;
    } catch (const NotDivisible&) {
      break;
    }
  }
  return out;
}

LocElement loc_divide_right(const LocElement& a, const LocElement& b) {
  if (b.num.is_zero()) throw std::invalid_argument("division by zero");
  MatShape shape = a.num.shape();
  long long start = std::max(a.denom_exp - b.denom_exp, 0LL);
  for (long long dq = start; dq <= start + 16; ++dq) {
    MatElement target =
        mat_mul(a.num, plucker_power(shape, dq + b.denom_exp - a.denom_exp));
    MatElement divisor = conj_by_denominator(b.num, dq);
    try {
      MatElement q = qm_divide_right(target, divisor);
      return loc_normalize({q, dq});
    } catch (const NotDivisible&) {
      continue;
    }
  }
  throw NotDivisible("no localized quotient found");
}

}  // namespace qca
