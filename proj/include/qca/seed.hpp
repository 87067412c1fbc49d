#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qca/torus.hpp"

namespace qca {

/// A graded quantum seed. Cluster variables are Laurent expansions in the
/// torus of the initial cluster (the shared ambient); B prescribes exchange,
/// L tracks pairwise quasi-commutation of the current cluster, and gradings
/// holds named integer vectors. "G" is always present; "theta" is an
/// auxiliary vector with its own mutation rule, everything else mutates like
/// a grading.
struct Seed {
  Ambient ambient;
  std::vector<TorusElement> cluster;
  IntMatrix B;
  IntMatrix L;
  std::map<std::string, IntVec> gradings;
  std::vector<char> mutable_flags;
  std::vector<std::string> labels;

  std::size_t size() const { return cluster.size(); }
  bool is_mutable(std::size_t i) const { return mutable_flags[i] != 0; }
};

/// d with (B_mut)^T L = d Id on the mutable block and 0 elsewhere.
/// Returns 0 when there is no mutable index.
long long check_compatibility(const IntMatrix& B, const IntMatrix& L,
                              const std::vector<char>& mutable_flags);

/// The involutive mutation matrix for direction k.
IntMatrix e_matrix(const IntMatrix& B, std::size_t k,
                   const std::vector<char>& mutable_flags);

/// Exchange directions: column k of B split by sign, with -1 in slot k.
IntVec b_plus(const IntMatrix& B, std::size_t k);
IntVec b_minus(const IntMatrix& B, std::size_t k);

/// theta'_k = max(b_k^+ . theta, b_k^- . theta) - theta_k, positive parts
/// only; other entries unchanged.
IntVec theta_mutate(const IntVec& theta, const IntMatrix& B, std::size_t k);

Seed mutate(const Seed& s, std::size_t k);

/// Multiply cluster entry i by q^{H_i/2}; H must be a grading for B.
Seed rescale_by_q(const Seed& s, const IntVec& H);

/// Adjoin frozen Laurent coefficients y, y^{-1} with y X_i = q^{c_i} X_i y
/// on cluster entries; degrees of the pair come from deg_pair.
Seed extend_with_laurent_coefficients(const Seed& s, const IntVec& c,
                                      std::pair<long long, long long> deg_pair =
                                          {1, -1},
                                      const std::string& label = "y");

/// The re-scaled seed: cluster entry i becomes q^{t_i u_i/2} X_i z^{u_i}
/// over an ambient grown by z with z X_i = q^{t_i} X_i z; L shifts by
/// -wedge(t, u) and G by u. t and u join the gradings and mutate alongside.
/// Pass reuse_z >= 0 to use an existing ambient generator as z (needed to
/// undo a rescale: rescaling by (t, -u) through the same z is the identity).
Seed rescale_seed(const Seed& s, const IntVec& t, const IntVec& u,
                  long long reuse_z = -1);

/// Mutable indices j where B_j v != 0; empty iff v is a grading for B.
std::vector<std::size_t> grading_defect(const IntMatrix& B,
                                        const std::vector<char>& mutable_flags,
                                        const IntVec& v);

/// Full invariant audit; throws ValidationError / Incompatible on failure.
void validate_seed(const Seed& s);

}  // namespace qca
