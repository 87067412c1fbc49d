#include <cstdio>

#include "verify.hpp"

int main() {
  auto results = qca_verify::run_acceptance();
  bool all = true;
  for (const auto& r : results) {
    std::printf("criterion %d [%s]: %s: %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
