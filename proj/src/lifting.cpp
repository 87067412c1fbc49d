#include "qca/lifting.hpp"

#include <algorithm>
#include <sstream>

#include "qca/errors.hpp"

namespace qca {

namespace {

std::string subset_label(const std::vector<int>& J) {
  bool wide = std::any_of(J.begin(), J.end(), [](int x) { return x > 9; });
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (wide && i) os << ',';
    os << J[i];
  }
  os << ']';
  return os.str();
}

/// h with X == Y q^{h/2}; throws when no such unit relates them.
long long unit_ratio_half(const MatElement& X, const MatElement& Y) {
  if (X.is_zero() && Y.is_zero()) return 0;
  if (X.is_zero() || Y.is_zero())
    throw NotQuasiCommuting("zero against nonzero");
  const auto& lx = X.leading();
  const auto& ly = Y.leading();
  if (lx.first != ly.first)
    throw NotQuasiCommuting("leading monomials differ");
  long long h = lx.second.terms().begin()->first -
                ly.second.terms().begin()->first;
  if (X != Y * QCoeff::q_half_power(h))
    throw NotQuasiCommuting("ratio is not a power of q");
  return h;
}

IntMatrix restrict_matrix(const IntMatrix& M,
                          const std::vector<std::size_t>& keep) {
  IntMatrix out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      out(i, j) = M(keep[i], keep[j]);
  return out;
}

IntVec restrict_vec(const IntVec& v, const std::vector<std::size_t>& keep) {
  IntVec out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) out[i] = v[keep[i]];
  return out;
}

}  // namespace

std::vector<int> q1_set(const std::vector<int>& I, const std::vector<int>& J,
                        int k, int n) {
  if (k < 1 || n <= k) throw std::invalid_argument("need 1 <= k < n");
  if (I.size() != J.size() || (int)I.size() > k)
    throw std::invalid_argument("index sets must have equal size at most k");
  std::vector<char> drop(k + 1, 0);
  for (int i : I) {
    if (i < 1 || i > k) throw std::invalid_argument("row index out of range");
    if (drop[k - i + 1]) throw std::invalid_argument("repeated row index");
    drop[k - i + 1] = 1;
  }
  std::vector<int> out;
  for (int j : J) {
    if (j < 1 || j > n - k) throw std::invalid_argument("column index out of range");
    int x = j + k;
    if (x > n) x -= n;  // wrap, though j + k never exceeds n here
    out.push_back(x);
  }
  for (int x = 1; x <= k; ++x)
    if (!drop[x]) out.push_back(x);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end() ||
      (int)out.size() != k)
    throw std::invalid_argument("column set is not a k-subset");
  return out;
}

LocElement alpha_generator(int k, int n, int i, int j) {
  return {plucker(MatShape{k, n}, q1_set({i}, {j}, k, n)), 1};
}

LocElement alpha(const MatElement& x, int n) {
  MatShape ms = x.shape();
  int k = ms.rows, j = ms.cols;
  if (k + j != n) throw std::invalid_argument("shape does not match n");
  MatShape gs{k, n};
  LocElement acc{MatElement(gs), 0};
  for (const auto& [mono, c] : x.terms()) {
    LocElement term{MatElement::constant(gs, c), 0};
    for (int g = 0; g < ms.gens(); ++g)
      for (long long rep = 0; rep < mono[g]; ++rep)
        term = loc_mul(term, alpha_generator(k, n, g / j + 1, g % j + 1));
    acc = loc_add(acc, term);
  }
  return loc_normalize(acc);
}

long long loc_quasi_exponent(const LocElement& a, const LocElement& b) {
  LocElement ab = loc_mul(a, b);
  LocElement ba = loc_mul(b, a);
  // equal denominator exponents, so the ratio is visible on the numerators
  long long h = unit_ratio_half(ab.num, ba.num);
  if (h % 2 != 0) throw NotQuasiCommuting("odd half-power ratio");
  return h / 2;
}

LocSeed loc_seed(int k, int n, bool parallel) {
  if (k < 2 || k >= n) throw std::invalid_argument("need 2 <= k < n");
  int j = n - k;
  GlsSeed g = build_gls_seed(k, j, parallel);

  LocSeed out;
  out.k = k;
  out.n = n;
  out.shape = MatShape{k, n};

  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) base[i] = i + 1;
  std::string plabel = subset_label(base);

  // Y X = q^{deg X} X Y, so the commutation vector is the matrix grading
  out.seed = extend_with_laurent_coefficients(
      g.seed, g.seed.gradings.at("G"), {1, -1}, plabel);
  out.seed.gradings.at("theta").back() = 1;  // [1..k]^{-1} carries denominator 1

  std::size_t grid = (std::size_t)k * j;
  out.values.resize(grid);
  out.gen_images.resize(grid + 1);
  for (int r = 1; r <= k; ++r)
    for (int s = 1; s <= j; ++s) {
      std::vector<int> q1 =
          q1_set(gls_rows(k, j, r, s), gls_cols(k, j, r, s), k, n);
      std::size_t pos = gls_index(j, r, s);
      out.values[pos] = loc_normalize({plucker(out.shape, q1), 1});
      out.gen_images[pos] = {out.values[pos], 0};
      out.seed.labels[pos] = subset_label(q1);
    }
  out.values.push_back({plucker(out.shape, base), 0});
  out.values.push_back({MatElement::constant(out.shape, QCoeff::one()), 1});
  out.gen_images[grid] = {{plucker(out.shape, base), 0}, 0};
  out.z_pow.assign(out.seed.size(), 0);
  validate_seed(out.seed);
  return out;
}

LocSeed hat_seed(const LocSeed& ls) {
  const Seed& s = ls.seed;
  std::size_t r = s.size();
  std::size_t corner = gls_index(ls.n - ls.k, 1, 1);

  // the denominator vector (1,..,1,-1,1) fails the grading test exactly at
  // the corner; that defect is what the unit coefficient repairs
  IntVec avec(r, 1);
  avec[r - 2] = -1;
  avec[r - 1] = 1;
  std::vector<std::size_t> bad = grading_defect(s.B, s.mutable_flags, avec);
  if (bad != std::vector<std::size_t>{corner})
    throw ValidationError("denominator vector defect is not the corner alone");

  Seed h;
  h.ambient = s.ambient;
  h.cluster.push_back(TorusElement::constant(s.ambient, QCoeff::one()));
  for (const auto& x : s.cluster) h.cluster.push_back(x);

  h.B = IntMatrix(r + 1, r + 1);
  h.L = IntMatrix(r + 1, r + 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      h.B(i + 1, j + 1) = s.B(i, j);
      h.L(i + 1, j + 1) = s.L(i, j);
    }
  h.B(corner + 1, 0) = 1;  // single arrow from the unit into the corner
  h.B(0, corner + 1) = -1;

  h.mutable_flags.push_back(0);
  h.mutable_flags.insert(h.mutable_flags.end(), s.mutable_flags.begin(),
                         s.mutable_flags.end());
  h.labels.push_back("1");
  h.labels.insert(h.labels.end(), s.labels.begin(), s.labels.end());

  IntVec ghat(r + 1, -1);
  ghat[r - 1] = 1;   // [1..k]
  ghat[r] = -1;      // [1..k]^{-1}
  IntVec that(r + 1, 0);
  const IntVec& gloc = s.gradings.at("G");
  for (std::size_t i = 0; i < r - 2; ++i) that[i + 1] = gloc[i];

  IntVec theta(1, 0);
  const IntVec& told = s.gradings.at("theta");
  theta.insert(theta.end(), told.begin(), told.end());

  h.gradings["G"] = ghat;
  h.gradings["G_hat"] = ghat;
  h.gradings["t_hat"] = that;
  h.gradings["theta"] = theta;
  validate_seed(h);

  LocSeed out = ls;
  out.seed = std::move(h);
  out.offset = 1;
  out.values.insert(out.values.begin(),
                    {MatElement::constant(ls.shape, QCoeff::one()), 0});
  out.z_pow.assign(r + 1, 0);
  return out;
}

LocSeed rescaled_loc_seed(int k, int n, bool parallel) {
  LocSeed out = hat_seed(loc_seed(k, n, parallel));
  std::size_t r = out.seed.size();
  IntVec t = out.seed.gradings.at("t_hat");
  IntVec u(r);
  for (std::size_t i = 0; i < r; ++i) u[i] = -out.seed.gradings.at("G_hat")[i];

  out.seed = rescale_seed(out.seed, t, u);
  // shift the coefficient pair by q^{+-1/2} so that q^{-1/2}[1..k]^{-1}Z is
  // exactly central
  IntVec H(r, 0);
  H[r - 2] = 1;
  H[r - 1] = -1;
  out.seed = rescale_by_q(out.seed, H);
  out.z_pow = u;

  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) base[i] = i + 1;
  out.gen_images.push_back(
      {{plucker(out.shape, base) * QCoeff::q_half_power(1), 0}, 1});
  validate_seed(out.seed);

  // centrality of q^{-1/2}[1..k]^{-1}Z against every torus generator
  std::size_t rank = out.seed.ambient->rows();
  IntVec zc(rank, 0);
  zc[rank - 2] = -1;
  zc[rank - 1] = 1;
  TorusElement central =
      TorusElement::monomial(out.seed.ambient, zc, QCoeff::q_half_power(-1));
  for (std::size_t g = 0; g < rank; ++g)
    if (quasi_commutation_exponent(
            central, TorusElement::generator(out.seed.ambient, g)) != 0)
      throw ValidationError("quotient coefficient is not central");
  return out;
}

LiftValue eval_in_loc(const TorusElement& v,
                      const std::vector<LiftValue>& images) {
  if (images.empty()) throw std::invalid_argument("no generator images");
  MatShape shape = images[0].loc.num.shape();
  if (v.is_zero()) return {{MatElement(shape), 0}, 0};
  if (v.rank() != images.size())
    throw std::invalid_argument("image count does not match torus rank");

  IntVec shift(v.rank(), 0);
  for (const auto& [a, c] : v.terms())
    for (std::size_t i = 0; i < a.size(); ++i)
      shift[i] = std::max(shift[i], -a[i]);

  auto eval_poly = [&](const TorusElement& w) {
    LiftValue acc;
    bool first = true;
    for (const auto& [a, c] : w.terms()) {
      LiftValue t{{MatElement::constant(shape, c), 0}, 0};
      for (std::size_t i = 0; i < a.size(); ++i)
        for (long long rep = 0; rep < a[i]; ++rep) {
          t.loc = loc_mul(t.loc, images[i].loc);
          t.z += images[i].z;
        }
      if (first) {
        acc = std::move(t);
        first = false;
      } else {
        if (t.z != acc.z)
          throw ValidationError("mixed central powers in one element");
        acc.loc = loc_add(acc.loc, t.loc);
      }
    }
    return acc;
  };

  bool laurent = false;
  for (long long x : shift) laurent |= (x != 0);
  if (!laurent) return eval_poly(v);
  TorusElement mono = TorusElement::monomial(v.ambient(), shift);
  LiftValue num = eval_poly(torus_mul(v, mono));
  LiftValue den = eval_poly(mono);
  return {loc_divide_right(num.loc, den.loc), num.z - den.z};
}

long long minimal_denominator(const TorusElement& v, const LocSeed& ls) {
  return loc_normalize(eval_in_loc(v, ls.gen_images).loc).denom_exp;
}

std::vector<long long> minimal_denominators(const std::vector<TorusElement>& vs,
                                            const LocSeed& ls, bool parallel) {
  std::vector<long long> out(vs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long i = 0; i < (long long)vs.size(); ++i)
    out[i] = minimal_denominator(vs[i], ls);
  return out;
}

GrSeed grassmannian_seed(int k, int n, bool parallel) {
  LocSeed rs = rescaled_loc_seed(k, n, parallel);
  const Seed& s = rs.seed;
  std::size_t rank = s.ambient->rows();  // grid, y, Z
  std::size_t yg = rank - 2;

  // Z and [1..k] share all quasi-commutation exponents, so substituting
  // Z -> q^{1/2}[1..k] is a torus homomorphism onto the reduced ambient
  IntMatrix lred(rank - 1, rank - 1);
  for (std::size_t i = 0; i + 1 < rank; ++i)
    for (std::size_t j = 0; j + 1 < rank; ++j) lred(i, j) = (*s.ambient)(i, j);
  Ambient amb = make_ambient(lred);

  auto subst = [&](const TorusElement& e) {
    TorusElement out(amb);
    for (const auto& [a, c] : e.terms()) {
      IntVec a2(a.begin(), a.end() - 1);
      a2[yg] += a.back();
      QCoeff c2 = c;
      c2.scale(a.back());
      out.add_term(a2, c2);
    }
    return out;
  };

  std::size_t r = s.size();
  TorusElement one = TorusElement::constant(amb, QCoeff::one());
  if (subst(s.cluster[r - 2]) != one || subst(s.cluster[r - 1]) != one)
    throw ValidationError("coefficient pair does not collapse to the identity");

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i + 2 < r; ++i) keep.push_back(i);

  GrSeed out;
  out.k = k;
  out.n = n;
  out.shape = rs.shape;
  out.seed.ambient = amb;
  for (std::size_t i : keep) out.seed.cluster.push_back(subst(s.cluster[i]));
  out.seed.B = restrict_matrix(s.B, keep);
  out.seed.L = restrict_matrix(s.L, keep);
  for (std::size_t i : keep) {
    out.seed.mutable_flags.push_back(s.mutable_flags[i]);
    out.seed.labels.push_back(s.labels[i]);
  }

  IntVec ones = restrict_vec(s.gradings.at("u"), keep);
  if (ones != IntVec(keep.size(), 1))
    throw ValidationError("inherited grading is not the all-ones vector");
  IntVec that = restrict_vec(s.gradings.at("t_hat"), keep);
  out.seed.gradings["G"] = ones;
  out.seed.gradings["t_hat"] = that;
  out.seed.gradings["theta"] = restrict_vec(s.gradings.at("theta"), keep);

  // strip the residual q^{(t_hat+1)/2} factors
  IntVec H(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) H[i] = -(that[i] + 1);
  out.seed = rescale_by_q(out.seed, H);

  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) base[i] = i + 1;
  out.seed.labels[0] = subset_label(base);
  validate_seed(out.seed);

  out.gen_images.assign(rank - 1, {});
  for (std::size_t g = 0; g + 1 < rank; ++g)
    out.gen_images[g] = {rs.gen_images[g].loc, 0};
  for (std::size_t i = 0; i < out.seed.size(); ++i) {
    LiftValue val = eval_in_loc(out.seed.cluster[i], out.gen_images);
    if (val.z != 0)
      throw ValidationError("central power survived the quotient");
    LocElement nrm = loc_normalize(val.loc);
    if (nrm.denom_exp != 0) {
      std::ostringstream os;
      os << "cluster entry " << i << " keeps denominator exponent "
         << nrm.denom_exp;
      throw DenominatorNotCleared(os.str());
    }
    out.values.push_back(nrm.num);
  }
  return out;
}

}  // namespace qca
