#pragma once

#include "json.hpp"
#include "qca/seed.hpp"

namespace qca {

/// JSON forms used for persistence and golden files. Everything is emitted in
/// canonical order (map order for terms, row-major for matrices) so equal
/// objects serialize to identical bytes.
///
///   coefficient: [[n, c], ...]        c * q^{n/2}, c a number or, when it
///                                     does not fit, a decimal string
///   matrix:      {rows, cols, data}   row-major
///   element:     [[[a...], coeff]]    exponent vector and coefficient
///   seed:        {ambient, cluster, B, L, gradings, mutable, labels}

nlohmann::json coeff_to_json(const QCoeff& c);
QCoeff coeff_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const TorusElement& e);
TorusElement element_from_json(const nlohmann::json& j, const Ambient& amb);

nlohmann::json seed_to_json(const Seed& s);
Seed seed_from_json(const nlohmann::json& j);

}  // namespace qca
