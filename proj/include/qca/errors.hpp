#pragma once

#include <stdexcept>
#include <string>

namespace qca {

struct AmbientMismatch : std::runtime_error {
  explicit AmbientMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotQuasiCommuting : std::runtime_error {
  explicit NotQuasiCommuting(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& msg) : std::runtime_error(msg) {}
};

struct Inhomogeneous : std::runtime_error {
  explicit Inhomogeneous(const std::string& msg) : std::runtime_error(msg) {}
};

struct Incompatible : std::runtime_error {
  explicit Incompatible(const std::string& msg) : std::runtime_error(msg) {}
};

struct NegativeTheta : std::runtime_error {
  explicit NegativeTheta(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DenominatorNotCleared : std::runtime_error {
  explicit DenominatorNotCleared(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qca
