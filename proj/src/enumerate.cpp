#include "qca/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qca {

std::string canonical_key(const TorusElement& e) {
  std::ostringstream os;
  for (const auto& [a, c] : e.terms()) {
    os << '[';
    for (long long x : a) os << x << ',';
    os << ':';
    for (const auto& [n, m] : c.terms()) os << n << '=' << m.get_str() << ',';
    os << ']';
  }
  return os.str();
}

static std::string seed_key(const Seed& s) {
  std::size_t r = s.size();
  std::vector<std::string> keys(r);
  for (std::size_t i = 0; i < r; ++i) keys[i] = canonical_key(s.cluster[i]);
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::ostringstream os;
  for (std::size_t i : perm) os << keys[i] << '|' << int(s.mutable_flags[i]) << ';';
  os << "B:";
  for (std::size_t i : perm)
    for (std::size_t j : perm) os << s.B(i, j) << ',';
  os << "L:";
  for (std::size_t i : perm)
    for (std::size_t j : perm) os << s.L(i, j) << ',';
  for (const auto& [name, v] : s.gradings) {
    os << name << ':';
    for (std::size_t i : perm) os << v[i] << ',';
  }
  return os.str();
}

Enumeration enumerate_seeds(const Seed& s, std::size_t max_depth,
                            bool parallel) {
  Enumeration out;
  std::set<std::string> visited;
  std::map<std::string, EnumeratedVariable> vars;

  auto record_variable = [&](const Seed& seed, std::size_t k) {
    std::string key = canonical_key(seed.cluster[k]);
    if (vars.count(key)) return;
    EnumeratedVariable v;
    v.value = seed.cluster[k];
    v.g_entry = seed.gradings.at("G")[k];
    auto it = seed.gradings.find("theta");
    if (it != seed.gradings.end()) {
      v.theta = it->second[k];
      v.has_theta = true;
    }
    vars.emplace(std::move(key), std::move(v));
  };

  visited.insert(seed_key(s));
  out.seeds.push_back(s);
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s.is_mutable(k)) record_variable(s, k);

  std::vector<const Seed*> frontier{&out.seeds.back()};
  std::vector<std::size_t> dirs;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s.is_mutable(k)) dirs.push_back(k);

  std::size_t depth = 0;
  out.completed = dirs.empty();
  while (!frontier.empty() && depth < max_depth) {
    ++depth;
    std::size_t jobs = frontier.size() * dirs.size();
    std::vector<Seed> candidates(jobs);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long idx = 0; idx < (long long)jobs; ++idx)
      candidates[idx] =
          mutate(*frontier[idx / dirs.size()], dirs[idx % dirs.size()]);

    // deterministic serial merge in job order
    std::vector<std::size_t> fresh;
    for (std::size_t idx = 0; idx < jobs; ++idx) {
      std::size_t k = dirs[idx % dirs.size()];
      record_variable(candidates[idx], k);
      if (visited.insert(seed_key(candidates[idx])).second)
        fresh.push_back(idx);
    }
    std::size_t base = out.seeds.size();
    for (std::size_t idx : fresh) out.seeds.push_back(std::move(candidates[idx]));
    frontier.clear();
    for (std::size_t i = base; i < out.seeds.size(); ++i)
      frontier.push_back(&out.seeds[i]);
    if (frontier.empty()) out.completed = true;
  }
  out.depth_reached = depth;

  out.variables.reserve(vars.size());
  for (auto& [key, v] : vars) out.variables.push_back(std::move(v));
  return out;
}

}  // namespace qca
