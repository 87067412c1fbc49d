#pragma once

#include <string>
#include <vector>

#include "qca/intmat.hpp"
#include "qca/qcoeff.hpp"

namespace qca {

/// Generator grid of a quantum matrix algebra: entries X_{ij} with
/// 1 <= i <= rows, 1 <= j <= cols, ordered row-major.
struct MatShape {
  int rows = 0;
  int cols = 0;
  int gens() const { return rows * cols; }
  bool operator==(const MatShape& o) const {
    return rows == o.rows && cols == o.cols;
  }
};

/// Element in PBW normal form: exponent vectors over the row-major generator
/// order with QCoeff coefficients, no zero terms. Products are straightened
/// with the quantum 2x2 relations (ab=qba along rows and columns, bc=cb on
/// antidiagonals, ad-da=(q-q^{-1})bc on diagonals).
class MatElement {
 public:
  using Terms = std::map<IntVec, QCoeff>;

  MatElement() = default;
  explicit MatElement(MatShape shape) : shape_(shape) {}

  static MatElement monomial(MatShape shape, const IntVec& a,
                             const QCoeff& c = QCoeff::one());
  static MatElement generator(MatShape shape, int i, int j);  // 1-based
  static MatElement constant(MatShape shape, const QCoeff& c);

  MatShape shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::pair<const IntVec, QCoeff>& leading() const;

  void add_term(const IntVec& a, const QCoeff& c);

  MatElement operator+(const MatElement& rhs) const;
  MatElement operator-(const MatElement& rhs) const;
  MatElement operator-() const;
  MatElement& operator+=(const MatElement& rhs);
  MatElement& operator-=(const MatElement& rhs);
  MatElement operator*(const QCoeff& c) const;

  bool operator==(const MatElement& rhs) const;
  bool operator!=(const MatElement& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  MatShape shape_;
  Terms terms_;
};

/// Exact product in PBW normal form.
MatElement mat_mul(const MatElement& A, const MatElement& B);

/// Normal form of a scalar times a word of generators given as 1-based (i, j)
/// pairs. naive selects an independent straightening strategy (adjacent
/// transpositions on words) used to cross-check the default one.
MatElement normal_form(MatShape shape,
                       const std::vector<std::pair<int, int>>& word,
                       const QCoeff& c = QCoeff::one(), bool naive = false);

/// Quantum minor on rows I and columns J (1-based, strictly increasing).
MatElement quantum_minor(MatShape shape, const std::vector<int>& I,
                         const std::vector<int>& J);

/// Maximal minor on rows {1..k}: the Plucker coordinate [J].
MatElement plucker(MatShape shape, const std::vector<int>& J);

/// lambda with AB = q^lambda BA, verified exactly.
long long qm_quasi_exponent(const MatElement& A, const MatElement& B);

/// Q with Q D = P (right) or D Q = P (left); exponents stay in N^gens so
/// greedy lex elimination terminates.
MatElement qm_divide_right(const MatElement& P, const MatElement& D);
MatElement qm_divide_left(const MatElement& P, const MatElement& D);

/// Element of the localisation of the Grassmannian subalgebra at [1..k]:
/// numerator times [1..k]^{-denom_exp}.
struct LocElement {
  MatElement num;
  long long denom_exp = 0;
};

LocElement loc_mul(const LocElement& a, const LocElement& b);
LocElement loc_add(const LocElement& a, const LocElement& b);
LocElement loc_scale(const LocElement& a, const QCoeff& c);
bool loc_eq(const LocElement& a, const LocElement& b);

/// Strip right factors of [1..k] until the denominator exponent is minimal.
LocElement loc_normalize(const LocElement& e);

/// Q with loc_mul(Q, b) = a, already normalized.
LocElement loc_divide_right(const LocElement& a, const LocElement& b);

}  // namespace qca
