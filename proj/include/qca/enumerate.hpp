#pragma once

#include "qca/seed.hpp"

namespace qca {

/// One distinct cluster variable found during closure, with the grading data
/// of the seed position that produced it.
struct EnumeratedVariable {
  TorusElement value;
  long long g_entry = 0;
  long long theta = 0;
  bool has_theta = false;
};

struct Enumeration {
  std::vector<Seed> seeds;                  // canonical representatives, BFS order
  std::vector<EnumeratedVariable> variables;  // mutable-position variables, sorted
  bool completed = false;                   // closure finished under the cap
  std::size_t depth_reached = 0;
};

/// Breadth-first closure under mutation at every mutable index. Seeds are
/// identified up to simultaneous index permutation of (cluster, B, L,
/// gradings, flags). A level whose mutations are all known ends the search.
Enumeration enumerate_seeds(const Seed& s, std::size_t max_depth = 16,
                            bool parallel = true);

/// Deterministic content key; equal elements get equal keys.
std::string canonical_key(const TorusElement& e);

}  // namespace qca
