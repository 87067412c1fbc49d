#pragma once

#include "qca/glsseed.hpp"
#include "qca/qmatrix.hpp"
#include "qca/seed.hpp"

namespace qca {

/// Column set Q1(I, J) of the maximal minor representing the image of the
/// minor with rows I and columns J under the dehomogenisation: the shifted
/// columns {j + k} joined with {1..k} minus the reflected rows {k - i + 1}.
std::vector<int> q1_set(const std::vector<int>& I, const std::vector<int>& J,
                        int k, int n);

/// Image of the matrix generator X_{ij} (shape k x (n-k)) in the localisation
/// of the Grassmannian subalgebra of the k x n matrix algebra at [1..k].
LocElement alpha_generator(int k, int n, int i, int j);

/// The dehomogenisation homomorphism on an arbitrary element, computed
/// multiplicatively on generators and normalized.
LocElement alpha(const MatElement& x, int n);

/// lambda with ab = q^lambda ba for localized elements, verified exactly.
long long loc_quasi_exponent(const LocElement& a, const LocElement& b);

/// Value in the localisation extended by a central Laurent variable z:
/// loc * z^{z_pow}. Centrality keeps the product componentwise.
struct LiftValue {
  LocElement loc;
  long long z = 0;
};

/// Seed whose torus variables stand for elements of the localized
/// Grassmannian; values holds the oracle image of each cluster entry and
/// gen_images the image of each ambient torus generator.
struct LocSeed {
  int k = 0;
  int n = 0;
  MatShape shape;                      // k x n, home of the Plucker oracle
  Seed seed;                           // torus-level data
  std::vector<LocElement> values;      // per cluster entry
  IntVec z_pow;                        // central-z power per cluster entry
  std::vector<LiftValue> gen_images;   // per ambient generator
  std::size_t offset = 0;              // 1 once the unit coefficient is added

  std::size_t grid_pos(int r, int s) const {
    return offset + gls_index(n - k, r, s);
  }
};

/// Transport of the matrix-algebra seed: grid entries become maximal minors
/// over [1..k], with the two Laurent coefficients [1..k], [1..k]^{-1}
/// adjoined as frozen variables of degree 1 and -1.
LocSeed loc_seed(int k, int n, bool parallel = true);

/// Homogenisation fix: prepend the unit coefficient with a single arrow into
/// the corner grid vertex; install the denominator grading G_hat =
/// (-1,...,-1,1,-1) as G and record t_hat = (0, matrix degrees, 0, 0).
LocSeed hat_seed(const LocSeed& ls);

/// Rescale by (t_hat, -G_hat) through a new skew variable Z and shift the two
/// coefficients by q^{+-1/2}, so that q^{-1/2}[1..k]^{-1}Z is central and the
/// tracked grading becomes zero.
LocSeed rescaled_loc_seed(int k, int n, bool parallel = true);

/// Evaluate a torus element through per-generator images. Negative exponents
/// are cleared by multiplying through and dividing back.
LiftValue eval_in_loc(const TorusElement& v,
                      const std::vector<LiftValue>& images);

/// Least d with value(v) = (Grassmannian element) [1..k]^{-d}.
long long minimal_denominator(const TorusElement& v, const LocSeed& ls);

/// Batch form of minimal_denominator; parallel over the inputs with a serial
/// path kept for cross-checking and benchmarks.
std::vector<long long> minimal_denominators(const std::vector<TorusElement>& vs,
                                            const LocSeed& ls,
                                            bool parallel = true);

/// The final seed on the Grassmannian subalgebra: every cluster entry is a
/// denominator-free element (a Plucker coordinate initially), with the
/// all-ones grading.
struct GrSeed {
  int k = 0;
  int n = 0;
  MatShape shape;
  Seed seed;
  std::vector<MatElement> values;      // oracle value of each cluster entry
  std::vector<LiftValue> gen_images;   // per ambient generator
};

/// Quotient of the rescaled seed by the central coefficient: substitute
/// Z -> q^{1/2}[1..k] at the torus level, drop the two trivialized
/// coefficients, inherit the all-ones grading, and strip the residual
/// q-powers with a final rescale by -(t_hat + 1). Throws
/// DenominatorNotCleared if any cluster value fails to land in the
/// Grassmannian subalgebra.
GrSeed grassmannian_seed(int k, int n, bool parallel = true);

}  // namespace qca
