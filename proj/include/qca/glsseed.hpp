#pragma once

#include "qca/qmatrix.hpp"
#include "qca/seed.hpp"

namespace qca {

/// The initial graded quantum seed on a k x j quantum matrix algebra, built
/// from minors on the staircase row/column sets, with the quasi-commutation
/// matrix computed by the rewriting oracle.
struct GlsSeed {
  int k = 0;
  int j = 0;
  MatShape shape;
  Seed seed;                       // torus-level seed, generators = minors
  std::vector<MatElement> minors;  // oracle value of each cluster entry
};

/// Row and column sets of the minor at grid position (r, s), 1-based.
std::vector<int> gls_rows(int k, int j, int r, int s);
std::vector<int> gls_cols(int k, int j, int r, int s);

/// Grid position (r, s) -> flat index (r-1)*j + (s-1).
inline std::size_t gls_index(int j, int r, int s) {
  return (std::size_t)(r - 1) * j + (s - 1);
}

/// Exchange matrix from the arrow rules (a,b)->(a,b+1), (a,b)->(a+1,b),
/// (a,b)->(a-1,b-1); frozen indices are those with a=k or b=j; arrows between
/// two frozen indices are dropped. b_{il} counts arrows l->i minus i->l.
IntMatrix gls_exchange_matrix(int k, int j, std::vector<char>& mutable_flags);

/// G entry min(r, s) per grid position.
IntVec gls_grading(int k, int j);

/// Pairwise quasi-commutation exponents of the cluster, by the oracle.
IntMatrix gls_quasi_matrix(const std::vector<MatElement>& cluster,
                           bool parallel = true);

/// Assemble and validate the full seed. theta starts at all ones.
GlsSeed build_gls_seed(int k, int j, bool parallel = true);

/// Image of a torus element under Y_i -> images[i]; ordered monomials map to
/// increasing-order products. Negative exponents are cleared by multiplying
/// through and dividing back, so any Laurent polynomial value that lies in
/// the matrix algebra evaluates exactly.
MatElement eval_in_matrix(const TorusElement& v,
                          const std::vector<MatElement>& images);

}  // namespace qca
