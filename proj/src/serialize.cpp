#include "qca/serialize.hpp"

#include "qca/errors.hpp"

namespace qca {

using nlohmann::json;

json coeff_to_json(const QCoeff& c) {
  json out = json::array();
  for (const auto& [n, m] : c.terms()) {
    if (m.fits_slong_p())
      out.push_back(json::array({n, (long long)m.get_si()}));
    else
      out.push_back(json::array({n, m.get_str()}));
  }
  return out;
}

QCoeff coeff_from_json(const json& j) {
  QCoeff out;
  for (const auto& term : j) {
    long long n = term.at(0).get<long long>();
    mpz_class m;
    if (term.at(1).is_string())
      m = mpz_class(term.at(1).get<std::string>());
    else
      m = mpz_class(static_cast<long>(term.at(1).get<long long>()));
    out += QCoeff::q_half_power(n, m);
  }
  return out;
}

json matrix_to_json(const IntMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) data.push_back(m(i, j));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

IntMatrix matrix_from_json(const json& j) {
  std::size_t r = j.at("rows").get<std::size_t>();
  std::size_t c = j.at("cols").get<std::size_t>();
  const json& data = j.at("data");
  if (data.size() != r * c) throw ValidationError("matrix data size mismatch");
  IntMatrix out(r, c);
  std::size_t p = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) out(i, k) = data[p++].get<long long>();
  return out;
}

json element_to_json(const TorusElement& e) {
  json out = json::array();
  for (const auto& [a, c] : e.terms())
    out.push_back(json::array({json(a), coeff_to_json(c)}));
  return out;
}

TorusElement element_from_json(const json& j, const Ambient& amb) {
  TorusElement out(amb);
  for (const auto& term : j)
    out.add_term(term.at(0).get<IntVec>(), coeff_from_json(term.at(1)));
  return out;
}

json seed_to_json(const Seed& s) {
  json cluster = json::array();
  for (const auto& x : s.cluster) cluster.push_back(element_to_json(x));
  json gradings = json::object();
  for (const auto& [name, v] : s.gradings) gradings[name] = v;
  json flags = json::array();
  for (char f : s.mutable_flags) flags.push_back((int)f);
  return json{{"ambient", matrix_to_json(*s.ambient)},
              {"cluster", cluster},
              {"B", matrix_to_json(s.B)},
              {"L", matrix_to_json(s.L)},
              {"gradings", gradings},
              {"mutable", flags},
              {"labels", s.labels}};
}

Seed seed_from_json(const json& j) {
  Seed s;
  s.ambient = make_ambient(matrix_from_json(j.at("ambient")));
  for (const auto& e : j.at("cluster"))
    s.cluster.push_back(element_from_json(e, s.ambient));
  s.B = matrix_from_json(j.at("B"));
  s.L = matrix_from_json(j.at("L"));
  for (const auto& [name, v] : j.at("gradings").items())
    s.gradings[name] = v.get<IntVec>();
  for (const auto& f : j.at("mutable"))
    s.mutable_flags.push_back((char)f.get<int>());
  s.labels = j.at("labels").get<std::vector<std::string>>();
  validate_seed(s);
  return s;
}

}  // namespace qca
