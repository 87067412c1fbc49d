#include "qca/seed.hpp"

#include <algorithm>
#include <sstream>

#include "qca/errors.hpp"

namespace qca {

long long check_compatibility(const IntMatrix& B, const IntMatrix& L,
                              const std::vector<char>& mutable_flags) {
  std::size_t r = B.rows();
  if (L.rows() != r || L.cols() != r || B.cols() != r ||
      mutable_flags.size() != r)
    throw std::invalid_argument("size mismatch in compatibility check");
  long long d = 0;
  for (std::size_t k = 0; k < r; ++k) {
    if (!mutable_flags[k]) continue;
    for (std::size_t j = 0; j < r; ++j) {
      long long v = 0;
      for (std::size_t i = 0; i < r; ++i) v += B(i, k) * L(i, j);
      if (j == k) {
        if (v <= 0) {
          std::ostringstream os;
          os << "diagonal entry " << v << " at mutable index " << k;
          throw Incompatible(os.str());
        }
        if (d == 0) {
          d = v;
        } else if (v != d) {
          std::ostringstream os;
          os << "diagonal entries differ: " << d << " vs " << v << " at index "
             << k;
          throw Incompatible(os.str());
        }
      } else if (v != 0) {
        std::ostringstream os;
        os << "off-diagonal entry " << v << " at (" << k << "," << j << ")";
        throw Incompatible(os.str());
      }
    }
  }
  return d;
}

IntMatrix e_matrix(const IntMatrix& B, std::size_t k,
                   const std::vector<char>& mutable_flags) {
  if (k >= B.rows() || !mutable_flags[k])
    throw std::invalid_argument("mutation direction is frozen or out of range");
  IntMatrix E = IntMatrix::identity(B.rows());
  E(k, k) = -1;
  for (std::size_t r = 0; r < B.rows(); ++r)
    if (r != k) E(r, k) = std::max(0LL, -B(r, k));
  return E;
}

IntVec b_plus(const IntMatrix& B, std::size_t k) {
  IntVec v(B.rows(), 0);
  v[k] = -1;
  for (std::size_t i = 0; i < B.rows(); ++i)
    if (i != k && B(i, k) > 0) v[i] = B(i, k);
  return v;
}

IntVec b_minus(const IntMatrix& B, std::size_t k) {
  IntVec v(B.rows(), 0);
  v[k] = -1;
  for (std::size_t i = 0; i < B.rows(); ++i)
    if (i != k && B(i, k) < 0) v[i] = -B(i, k);
  return v;
}

IntVec theta_mutate(const IntVec& theta, const IntMatrix& B, std::size_t k) {
  IntVec bp = b_plus(B, k);
  IntVec bm = b_minus(B, k);
  long long up = 0, down = 0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (i == k) continue;
    up += bp[i] * theta[i];
    down += bm[i] * theta[i];
  }
  long long next = std::max(up, down) - theta[k];
  if (next < 0) {
    std::ostringstream os;
    os << "theta would become " << next << " at index " << k;
    throw NegativeTheta(os.str());
  }
  IntVec out = theta;
  out[k] = next;
  return out;
}

/// M(b) with the X_k^{-1} commuted to the right and dropped, i.e. M(b) X_k:
/// a q-prefactor times the increasing-order product of the other cluster
/// variables raised to the nonnegative entries of b.
static TorusElement exchange_product(const Seed& s, std::size_t k,
                                     const IntVec& b) {
  std::size_t r = s.size();
  long long half = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (b[i] == 0) continue;
    for (std::size_t j = i + 1; j < r; ++j)
      if (b[j] != 0) half += b[i] * b[j] * s.L(j, i);
  }
  for (std::size_t j = k + 1; j < r; ++j) half -= 2 * b[j] * s.L(k, j);
  TorusElement out =
      TorusElement::constant(s.ambient, QCoeff::q_half_power(half));
  for (std::size_t i = 0; i < r; ++i) {
    if (i == k) continue;
    for (long long n = 0; n < b[i]; ++n) out = torus_mul(out, s.cluster[i]);
  }
  return out;
}

Seed mutate(const Seed& s, std::size_t k) {
  if (k >= s.size() || !s.is_mutable(k))
    throw std::invalid_argument("mutation direction is frozen or out of range");
  TorusElement numerator = exchange_product(s, k, b_plus(s.B, k)) +
                           exchange_product(s, k, b_minus(s.B, k));
  Seed out = s;
  out.cluster[k] = torus_divide_right(numerator, s.cluster[k]);
  IntMatrix E = e_matrix(s.B, k, s.mutable_flags);
  IntMatrix Et = E.transpose();
  out.B = E * s.B * Et;
  out.L = Et * s.L * E;
  for (auto& [name, v] : out.gradings) {
    if (name == "theta")
      v = theta_mutate(v, s.B, k);
    else
      v = Et.mul(v);
  }
  return out;
}

static void require_grading(const Seed& s, const IntVec& v, const char* what) {
  if (v.size() != s.size())
    throw std::invalid_argument(std::string(what) + ": length mismatch");
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!s.is_mutable(j)) continue;
    long long dot = 0;
    for (std::size_t i = 0; i < s.size(); ++i) dot += s.B(j, i) * v[i];
    if (dot != 0) {
      std::ostringstream os;
      os << what << " is not a grading: B_j v = " << dot << " at mutable index "
         << j;
      throw ValidationError(os.str());
    }
  }
}

Seed rescale_by_q(const Seed& s, const IntVec& H) {
  require_grading(s, H, "H");
  Seed out = s;
  for (std::size_t i = 0; i < s.size(); ++i)
    out.cluster[i] = s.cluster[i] * QCoeff::q_half_power(H[i]);
  return out;
}

/// Solve a_i . gamma = c_i over the ambient generators, where cluster entry i
/// is a single monomial with exponent a_i. Only exponents 0 and +-e_g occur
/// in the seeds this library builds; anything else is rejected.
static IntVec generator_exponents(const Seed& s, const IntVec& c,
                                  const char* what) {
  std::size_t rank = s.ambient->rows();
  IntVec gamma(rank, 0);
  std::vector<char> known(rank, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.cluster[i].terms().size() != 1)
      throw std::invalid_argument(
          std::string(what) + ": cluster entry is not a monomial");
    const IntVec& a = s.cluster[i].terms().begin()->first;
    std::size_t nz = 0, g = 0;
    for (std::size_t p = 0; p < a.size(); ++p)
      if (a[p] != 0) {
        ++nz;
        g = p;
      }
    if (nz == 0) {
      if (c[i] != 0)
        throw ValidationError(std::string(what) +
                              ": constant entry with nonzero commutation");
      continue;
    }
    if (nz > 1 || (a[g] != 1 && a[g] != -1))
      throw std::invalid_argument(
          std::string(what) + ": cluster entry is not a generator monomial");
    long long val = a[g] * c[i];
    if (known[g] && gamma[g] != val)
      throw ValidationError(std::string(what) +
                            ": inconsistent commutation exponents");
    gamma[g] = val;
    known[g] = 1;
  }
  return gamma;
}

Seed extend_with_laurent_coefficients(const Seed& s, const IntVec& c,
                                      std::pair<long long, long long> deg_pair,
                                      const std::string& label) {
  if (c.size() != s.size())
    throw std::invalid_argument("commutation vector length mismatch");
  require_grading(s, c, "c");  // keeps (B, L) compatible after extension
  bool trivial = std::all_of(c.begin(), c.end(),
                             [](long long x) { return x == 0; });
  IntVec gamma = trivial ? IntVec(s.ambient->rows(), 0)
                         : generator_exponents(s, c, "extend");
  // y X_g = q^{gamma_g} X_g y, so the ambient column for y is -gamma.
  IntVec col(gamma.size());
  for (std::size_t g = 0; g < gamma.size(); ++g) col[g] = -gamma[g];
  Ambient amb = extend_ambient(s.ambient, col);
  std::size_t r = s.size();
  std::size_t ypos = amb->rows() - 1;

  Seed out;
  out.ambient = amb;
  out.cluster.reserve(r + 2);
  for (const auto& x : s.cluster) out.cluster.push_back(lift_element(x, amb));
  out.cluster.push_back(TorusElement::generator(amb, ypos));
  IntVec yinv(amb->rows(), 0);
  yinv[ypos] = -1;
  out.cluster.push_back(TorusElement::monomial(amb, yinv));

  out.B = IntMatrix(r + 2, r + 2);
  out.L = IntMatrix(r + 2, r + 2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      out.B(i, j) = s.B(i, j);
      out.L(i, j) = s.L(i, j);
    }
  for (std::size_t i = 0; i < r + 2; ++i)
    for (std::size_t j = r; j < r + 2; ++j) {
      if (i == j) continue;
      out.L(i, j) = quasi_commutation_exponent(out.cluster[i], out.cluster[j]);
      out.L(j, i) = -out.L(i, j);
    }
  for (std::size_t i = 0; i < r; ++i)
    if (out.L(r, i) != c[i])
      throw ValidationError("extension does not realize the requested exponents");

  out.gradings = s.gradings;
  for (auto& [name, v] : out.gradings) {
    if (name == "G") {
      v.push_back(deg_pair.first);
      v.push_back(deg_pair.second);
    } else {
      v.push_back(0);
      v.push_back(0);
    }
  }
  out.mutable_flags = s.mutable_flags;
  out.mutable_flags.push_back(0);
  out.mutable_flags.push_back(0);
  out.labels = s.labels;
  out.labels.push_back(label);
  out.labels.push_back(label + "^-1");
  return out;
}

Seed rescale_seed(const Seed& s, const IntVec& t, const IntVec& u,
                  long long reuse_z) {
  require_grading(s, t, "t");
  require_grading(s, u, "u");
  Ambient amb;
  std::size_t zpos;
  if (reuse_z >= 0) {
    amb = s.ambient;
    zpos = static_cast<std::size_t>(reuse_z);
    if (zpos >= amb->rows())
      throw std::invalid_argument("reuse_z out of range");
  } else {
    IntVec tau = generator_exponents(s, t, "rescale");
    // z X_g = q^{tau_g} X_g z, so the ambient column for z is -tau.
    IntVec col(tau.size());
    for (std::size_t g = 0; g < tau.size(); ++g) col[g] = -tau[g];
    amb = extend_ambient(s.ambient, col);
    zpos = amb->rows() - 1;
  }

  Seed out = s;
  out.ambient = amb;
  TorusElement zel = TorusElement::generator(amb, zpos);
  for (std::size_t i = 0; i < s.size(); ++i) {
    TorusElement lifted = lift_element(s.cluster[i], amb);
    if (quasi_commutation_exponent(zel, lifted) != t[i])
      throw ValidationError("z does not scale a cluster entry by q^{t_i}");
    IntVec zpow(amb->rows(), 0);
    zpow[zpos] = u[i];
    out.cluster[i] = torus_mul(
        lifted,
        TorusElement::monomial(amb, zpow, QCoeff::q_half_power(t[i] * u[i])));
  }
  out.L = s.L - wedge(t, u);
  IntVec& G = out.gradings.at("G");
  for (std::size_t i = 0; i < s.size(); ++i) G[i] += u[i];
  out.gradings["t"] = t;
  out.gradings["u"] = u;
  return out;
}

std::vector<std::size_t> grading_defect(const IntMatrix& B,
                                        const std::vector<char>& mutable_flags,
                                        const IntVec& v) {
  std::vector<std::size_t> bad;
  for (std::size_t j = 0; j < B.rows(); ++j) {
    if (!mutable_flags[j]) continue;
    long long dot = 0;
    for (std::size_t i = 0; i < B.rows(); ++i) dot += B(j, i) * v[i];
    if (dot != 0) bad.push_back(j);
  }
  return bad;
}

void validate_seed(const Seed& s) {
  std::size_t r = s.size();
  if (!s.ambient) throw ValidationError("seed has no ambient");
  if (s.B.rows() != r || s.B.cols() != r || s.L.rows() != r || s.L.cols() != r)
    throw ValidationError("matrix sizes do not match cluster size");
  if (s.mutable_flags.size() != r || s.labels.size() != r)
    throw ValidationError("flag or label length mismatch");
  if (!s.B.is_skew_symmetric()) throw ValidationError("B is not skew-symmetric");
  if (!s.L.is_skew_symmetric()) throw ValidationError("L is not skew-symmetric");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!s.is_mutable(i) && !s.is_mutable(j) && s.B(i, j) != 0)
        throw ValidationError("B has an arrow between frozen indices");
  check_compatibility(s.B, s.L, s.mutable_flags);
  if (!s.gradings.count("G")) throw ValidationError("seed lacks the G grading");
  for (const auto& [name, v] : s.gradings) {
    if (name == "theta") {
      if (v.size() != r) throw ValidationError("theta length mismatch");
      continue;
    }
    require_grading(s, v, name.c_str());
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      long long got;
      try {
        got = quasi_commutation_exponent(s.cluster[i], s.cluster[j]);
      } catch (const NotQuasiCommuting&) {
        std::ostringstream os;
        os << "cluster entries " << i << " and " << j
           << " do not quasi-commute";
        throw ValidationError(os.str());
      }
      if (got != s.L(i, j)) {
        std::ostringstream os;
        os << "tracked L(" << i << "," << j << ") = " << s.L(i, j)
           << " but arithmetic gives " << got;
        throw ValidationError(os.str());
      }
    }
}

}  // namespace qca
