#include "qca/torus.hpp"

#include <algorithm>
#include <sstream>

#include "qca/errors.hpp"

namespace qca {

Ambient make_ambient(IntMatrix L) {
  if (!L.is_skew_symmetric())
    throw std::invalid_argument("ambient matrix must be skew-symmetric");
  return std::make_shared<const IntMatrix>(std::move(L));
}

static void require_same_ambient(const TorusElement& A, const TorusElement& B) {
  const Ambient& a = A.ambient();
  const Ambient& b = B.ambient();
  if (a == b) return;
  if (a && b && *a == *b) return;
  throw AmbientMismatch("torus elements live over different ambient matrices");
}

TorusElement TorusElement::monomial(Ambient amb, const IntVec& a,
                                    const QCoeff& c) {
  if (!amb || a.size() != amb->rows())
    throw std::invalid_argument("exponent vector length does not match ambient");
  TorusElement out(std::move(amb));
  if (!c.is_zero()) out.terms_[a] = c;
  return out;
}

TorusElement TorusElement::generator(Ambient amb, std::size_t i) {
  IntVec a(amb->rows(), 0);
  a.at(i) = 1;
  return monomial(std::move(amb), a);
}

TorusElement TorusElement::constant(Ambient amb, const QCoeff& c) {
  return monomial(std::move(amb), IntVec(amb->rows(), 0), c);
}

const std::pair<const IntVec, QCoeff>& TorusElement::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return *terms_.rbegin();
}

void TorusElement::add_term(const IntVec& a, const QCoeff& c) {
  if (a.size() != rank())
    throw std::invalid_argument("exponent vector length does not match ambient");
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
  require_same_ambient(*this, rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& rhs) {
  require_same_ambient(*this, rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
  return *this;
}

TorusElement TorusElement::operator+(const TorusElement& rhs) const {
  TorusElement out = *this;
  out += rhs;
  return out;
}

TorusElement TorusElement::operator-(const TorusElement& rhs) const {
  TorusElement out = *this;
  out -= rhs;
  return out;
}

TorusElement TorusElement::operator-() const {
  TorusElement out(ambient_);
  for (const auto& [a, c] : terms_) out.terms_[a] = -c;
  return out;
}

TorusElement TorusElement::operator*(const QCoeff& c) const {
  TorusElement out(ambient_);
  if (c.is_zero()) return out;
  for (const auto& [a, v] : terms_) {
    QCoeff w = v * c;
    if (!w.is_zero()) out.terms_[a] = w;
  }
  return out;
}

bool TorusElement::operator==(const TorusElement& rhs) const {
  if (terms_.empty() && rhs.terms_.empty()) return true;
  require_same_ambient(*this, rhs);
  return terms_ == rhs.terms_;
}

std::string TorusElement::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    std::string c = it->second.str();
    if (c != "1") {
      if (c.find(' ') != std::string::npos)
        os << "(" << c << ")";
      else
        os << c;
      printed = true;
    }
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      long long e = it->first[i];
      if (e == 0) continue;
      if (printed) os << "*";
      printed = true;
      if (i < names.size())
        os << names[i];
      else
        os << "X" << (i + 1);
      if (e != 1) os << "^" << e;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

/// Half-power picked up when X^a X^b is normal-ordered to X^{a+b}:
/// full exponent sum_{i>j} a_i b_j L_{ij}, i.e. 2x that in half units.
static long long reorder_half(const IntVec& a, const IntVec& b,
                              const IntMatrix& L) {
  long long s = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < i; ++j)
      if (b[j] != 0) s += a[i] * b[j] * L(i, j);
  }
  return 2 * s;
}

TorusElement torus_mul(const TorusElement& A, const TorusElement& B) {
  require_same_ambient(A, B);
  const Ambient& amb = A.ambient() ? A.ambient() : B.ambient();
  TorusElement out(amb);
  if (A.is_zero() || B.is_zero()) return out;
  const IntMatrix& L = *amb;
  IntVec sum(L.rows());
  for (const auto& [a, ca] : A.terms())
    for (const auto& [b, cb] : B.terms()) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
      QCoeff c = ca * cb;
      c.scale(reorder_half(a, b, L));
      out.add_term(sum, c);
    }
  return out;
}

TorusElement based_monomial(const Ambient& amb, const IntVec& a) {
  if (!amb || a.size() != amb->rows())
    throw std::invalid_argument("exponent vector length does not match ambient");
  const IntMatrix& L = *amb;
  long long half = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[j] != 0) half += a[i] * a[j] * L(j, i);
  }
  return TorusElement::monomial(amb, a, QCoeff::q_half_power(half));
}

long long quasi_commutation_exponent(const TorusElement& A,
                                     const TorusElement& B) {
  if (A.is_zero() || B.is_zero())
    throw std::invalid_argument("quasi-commutation of zero element");
  TorusElement ab = torus_mul(A, B);
  TorusElement ba = torus_mul(B, A);
  // Exact proportionality AB = q^lambda BA forces equal exponent supports and
  // every coefficient shifted by the same half-power with the same integers.
  const auto& [a1, c1] = ab.leading();
  const auto& [a2, c2] = ba.leading();
  if (a1 != a2)
    throw NotQuasiCommuting("leading monomials of AB and BA differ");
  if (c1.terms().empty() || c2.terms().empty())
    throw std::logic_error("unpruned zero coefficient");
  long long half = c1.terms().begin()->first - c2.terms().begin()->first;
  TorusElement shifted = ba * QCoeff::q_half_power(half);
  if (!(ab == shifted))
    throw NotQuasiCommuting("AB and BA are not proportional by a q-power");
  if (half % 2 != 0)
    throw NotQuasiCommuting("AB = q^{n/2} BA with odd n");
  return half / 2;
}

TorusElement torus_divide_right(const TorusElement& P, const TorusElement& D) {
  require_same_ambient(P, D);
  if (D.is_zero()) throw std::invalid_argument("division by zero");
  const Ambient& amb = D.ambient();
  TorusElement Q(amb);
  if (P.is_zero()) return Q;

  const auto& [dlead, dcoeff] = D.leading();
  long long dhalf = 0;
  int dsign = 0;
  if (!dcoeff.is_unit(dhalf, dsign))
    throw NotDivisible("divisor leading coefficient is not a unit q-power");

  // If Q D = P then lex-min exponents add, so every quotient exponent is
  // lex >= lexmin(P) - lexmin(D). Greedy quotient exponents strictly decrease
  // in lex, so falling below that bound means no quotient exists.
  IntVec bound(P.terms().begin()->first);
  for (std::size_t i = 0; i < bound.size(); ++i)
    bound[i] -= D.terms().begin()->first[i];

  TorusElement R = P;
  // Exact divisions finish in one step per quotient term; the cap only stops
  // indivisible inputs whose greedy remainders dodge the lex bound.
  const std::size_t cap = 200000;
  for (std::size_t iter = 0; !R.is_zero(); ++iter) {
    if (iter > cap) throw NotDivisible("division did not terminate");
    const auto& [rlead, rcoeff] = R.leading();
    IntVec e(rlead);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= dlead[i];
    if (e < bound) throw NotDivisible("remainder cannot be cleared");
    QCoeff qc = rcoeff;
    qc.scale(-dhalf - reorder_half(e, dlead, *amb), dsign);
    TorusElement qt = TorusElement::monomial(amb, e, qc);
    Q += qt;
    R -= torus_mul(qt, D);
  }
  return Q;
}

Ambient extend_ambient(const Ambient& amb, const IntVec& col) {
  if (!amb || col.size() != amb->rows())
    throw std::invalid_argument("extension column length does not match ambient");
  std::size_t r = amb->rows();
  IntMatrix L(r + 1, r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) L(i, j) = (*amb)(i, j);
    L(i, r) = col[i];
    L(r, i) = -col[i];
  }
  return make_ambient(std::move(L));
}

TorusElement lift_element(const TorusElement& e, const Ambient& bigger) {
  std::size_t r = e.rank();
  if (!bigger || bigger->rows() < r)
    throw std::invalid_argument("target ambient smaller than source");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if ((*bigger)(i, j) != (*e.ambient())(i, j))
        throw AmbientMismatch("target ambient does not extend the source");
  TorusElement out(bigger);
  for (const auto& [a, c] : e.terms()) {
    IntVec b(bigger->rows(), 0);
    std::copy(a.begin(), a.end(), b.begin());
    out.add_term(b, c);
  }
  return out;
}

long long degree(const TorusElement& A, const IntVec& G) {
  if (A.is_zero()) throw std::invalid_argument("degree of zero element");
  if (G.size() != A.rank())
    throw std::invalid_argument("grading vector length does not match ambient");
  bool have = false;
  long long deg = 0;
  for (const auto& [a, c] : A.terms()) {
    long long d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] * G[i];
    if (!have) {
      deg = d;
      have = true;
    } else if (d != deg) {
      throw Inhomogeneous("monomials carry different degrees");
    }
  }
  return deg;
}

}  // namespace qca
