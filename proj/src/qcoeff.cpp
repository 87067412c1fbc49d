#include "qca/qcoeff.hpp"

#include <sstream>

namespace qca {

QCoeff QCoeff::q_half_power(long long half, const mpz_class& c) {
  QCoeff out;
  if (c != 0) out.terms_[half] = c;
  return out;
}

bool QCoeff::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

bool QCoeff::is_unit(long long& half_exp, int& sign) const {
  if (terms_.size() != 1) return false;
  const auto& [n, c] = *terms_.begin();
  if (c != 1 && c != -1) return false;
  half_exp = n;
  sign = (c == 1) ? 1 : -1;
  return true;
}

QCoeff& QCoeff::operator+=(const QCoeff& rhs) {
  for (const auto& [n, c] : rhs.terms_) terms_[n] += c;
  prune();
  return *this;
}

QCoeff& QCoeff::operator-=(const QCoeff& rhs) {
  for (const auto& [n, c] : rhs.terms_) terms_[n] -= c;
  prune();
  return *this;
}

QCoeff QCoeff::operator+(const QCoeff& rhs) const {
  QCoeff out = *this;
  out += rhs;
  return out;
}

QCoeff QCoeff::operator-(const QCoeff& rhs) const {
  QCoeff out = *this;
  out -= rhs;
  return out;
}

QCoeff QCoeff::operator*(const QCoeff& rhs) const {
  QCoeff out;
  for (const auto& [n1, c1] : terms_)
    for (const auto& [n2, c2] : rhs.terms_) out.terms_[n1 + n2] += c1 * c2;
  out.prune();
  return out;
}

QCoeff& QCoeff::operator*=(const QCoeff& rhs) {
  *this = *this * rhs;
  return *this;
}

QCoeff QCoeff::operator-() const {
  QCoeff out;
  for (const auto& [n, c] : terms_) out.terms_[n] = -c;
  return out;
}

void QCoeff::scale(long long half, const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  Terms shifted;
  for (auto& [n, v] : terms_) shifted[n + half] = v * c;
  terms_ = std::move(shifted);
}

void QCoeff::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::string QCoeff::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    mpz_class a = (!first && c < 0) ? mpz_class(-c) : c;
    first = false;
    if (n == 0) {
      os << a;
    } else {
      if (a != 1) {
        if (a == -1)
          os << "-";
        else
          os << a << "*";
      }
      os << "q";
      if (n != 2) {
        if (n % 2 == 0)
          os << "^" << n / 2;
        else
          os << "^(" << n << "/2)";
      }
    }
  }
  return os.str();
}

}  // namespace qca
