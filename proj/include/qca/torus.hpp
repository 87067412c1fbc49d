#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qca/intmat.hpp"
#include "qca/qcoeff.hpp"

namespace qca {

/// The quasi-commutation matrix shared by all elements of one quantum torus.
/// Held by shared_ptr so elements stay cheap to copy and the "same ambient"
/// check is usually a pointer comparison.
using Ambient = std::shared_ptr<const IntMatrix>;

Ambient make_ambient(IntMatrix L);

/// Finite sum of ordered monomials X_1^{a_1}...X_r^{a_r} with QCoeff
/// coefficients, over a fixed ambient L with X_i X_j = q^{L_{ij}} X_j X_i.
/// Terms are kept in a lex-sorted map with no zero coefficients, so equality
/// is structural.
class TorusElement {
 public:
  using Terms = std::map<IntVec, QCoeff>;

  TorusElement() = default;
  explicit TorusElement(Ambient amb) : ambient_(std::move(amb)) {}

  static TorusElement monomial(Ambient amb, const IntVec& a,
                               const QCoeff& c = QCoeff::one());
  static TorusElement generator(Ambient amb, std::size_t i);
  static TorusElement constant(Ambient amb, const QCoeff& c);

  const Ambient& ambient() const { return ambient_; }
  std::size_t rank() const { return ambient_ ? ambient_->rows() : 0; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Lex-largest exponent vector and its coefficient. Element must be nonzero.
  const std::pair<const IntVec, QCoeff>& leading() const;

  void add_term(const IntVec& a, const QCoeff& c);

  TorusElement operator+(const TorusElement& rhs) const;
  TorusElement operator-(const TorusElement& rhs) const;
  TorusElement operator-() const;
  TorusElement& operator+=(const TorusElement& rhs);
  TorusElement& operator-=(const TorusElement& rhs);

  /// Scalar multiple.
  TorusElement operator*(const QCoeff& c) const;

  bool operator==(const TorusElement& rhs) const;
  bool operator!=(const TorusElement& rhs) const { return !(*this == rhs); }
  /// Structural order on the term maps; used for canonical sorting only.
  bool operator<(const TorusElement& rhs) const { return terms_ < rhs.terms_; }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  Ambient ambient_;
  Terms terms_;
};

/// Exact product via normal ordering: X^a X^b = q^{sum_{i>j} a_i b_j L_{ij}} X^{a+b}.
TorusElement torus_mul(const TorusElement& A, const TorusElement& B);

/// M(a) = q^{(1/2) sum_{i<j} a_i a_j L_{ji}} X^a, the based exchange monomial.
TorusElement based_monomial(const Ambient& amb, const IntVec& a);

/// lambda with A B = q^lambda B A, verified exactly.
long long quasi_commutation_exponent(const TorusElement& A,
                                     const TorusElement& B);

/// Q with Q D = P exactly; greedy lex leading-term elimination.
TorusElement torus_divide_right(const TorusElement& P, const TorusElement& D);

/// Common degree sum a . G of all monomials of A.
long long degree(const TorusElement& A, const IntVec& G);

/// Ambient grown by one generator Z with X_i Z = q^{col_i} Z X_i.
Ambient extend_ambient(const Ambient& amb, const IntVec& col);

/// Reinterpret over a larger ambient whose leading block matches; new
/// exponents are zero.
TorusElement lift_element(const TorusElement& e, const Ambient& bigger);

}  // namespace qca
