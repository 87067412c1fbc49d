#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace qca {

/// Exact scalar in Z[q^{1/2}, q^{-1/2}].  A term n -> c denotes c * q^{n/2};
/// exponents are kept in half-power units so no rational arithmetic is needed.
/// The zero element has an empty term map.
class QCoeff {
 public:
  using Terms = std::map<long long, mpz_class>;

  QCoeff() = default;
  explicit QCoeff(long long integer) {
    if (integer != 0) terms_[0] = mpz_class(static_cast<long>(integer));
  }
  explicit QCoeff(const mpz_class& integer) {
    if (integer != 0) terms_[0] = integer;
  }

  /// c * q^{half/2}
  static QCoeff q_half_power(long long half, const mpz_class& c);
  static QCoeff q_half_power(long long half, long long c = 1) {
    return q_half_power(half, mpz_class(static_cast<long>(c)));
  }
  static QCoeff one() { return QCoeff(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// True when the value is +-q^{n/2}; fills the exponent and sign.
  bool is_unit(long long& half_exp, int& sign) const;

  QCoeff operator+(const QCoeff& rhs) const;
  QCoeff operator-(const QCoeff& rhs) const;
  QCoeff operator*(const QCoeff& rhs) const;
  QCoeff operator-() const;
  QCoeff& operator+=(const QCoeff& rhs);
  QCoeff& operator-=(const QCoeff& rhs);
  QCoeff& operator*=(const QCoeff& rhs);

  /// Multiply by c * q^{half/2} in place.
  void scale(long long half, const mpz_class& c = 1);

  bool operator==(const QCoeff& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const QCoeff& rhs) const { return !(*this == rhs); }
  bool operator<(const QCoeff& rhs) const { return terms_ < rhs.terms_; }

  std::string str() const;

 private:
  void prune();
  Terms terms_;
};

}  // namespace qca
