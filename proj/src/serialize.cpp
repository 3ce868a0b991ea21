#include "nilzeta/serialize.hpp"

namespace nilzeta {

using nlohmann::json;

json frf_to_json(const Frf& f) {
  json out;
  out["vars"] = f.arena()->names();
  json num = json::array();
  for (const auto& [e, c] : f.numerator().terms()) {
    json row = json::array({c.get_num().get_str(), c.get_den().get_str()});
    for (int x : e) row.push_back(x);
    num.push_back(std::move(row));
  }
  out["num"] = std::move(num);
  json den = json::array();
  for (const auto& [e, k] : f.denominator()) {
    json row = json::array({k});
    for (int x : e) row.push_back(x);
    den.push_back(std::move(row));
  }
  out["den"] = std::move(den);
  return out;
}

Frf frf_from_json(const json& j) {
  ArenaPtr arena = make_arena(j.at("vars").get<std::vector<std::string>>());
  const std::size_t n = arena->size();
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& row : j.at("num")) {
    if (row.size() != n + 2) throw StructuralError("malformed numerator row");
    Rational c(Integer(row[0].get<std::string>()),
               Integer(row[1].get<std::string>()));
    c.canonicalize();
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = row[i + 2].get<int>();
    terms.emplace_back(std::move(e), std::move(c));
  }
  Frf::Denominator den;
  for (const auto& row : j.at("den")) {
    if (row.size() != n + 1) throw StructuralError("malformed denominator row");
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = row[i + 1].get<int>();
    den[e] += row[0].get<int>();
  }
  return Frf(LaurentPolynomial(arena, std::move(terms)), std::move(den));
}

json lff_to_json(const Lff& f) {
  json out;
  out["vars"] = json::array({"s"});
  json num = json::array();
  for (const auto& c : f.numerator().coefficients()) {
    num.push_back(json::array({c.get_num().get_str(), c.get_den().get_str()}));
  }
  out["num"] = std::move(num);
  json den = json::array();
  for (const auto& [fac, k] : f.denominator()) {
    den.push_back(json::array({k, fac.first, fac.second}));
  }
  out["den"] = std::move(den);
  return out;
}

Lff lff_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& row : j.at("num")) {
    Rational c(Integer(row.at(0).get<std::string>()),
               Integer(row.at(1).get<std::string>()));
    c.canonicalize();
    coeffs.push_back(std::move(c));
  }
  Lff::Denominator den;
  for (const auto& row : j.at("den")) {
    den[{row.at(1).get<long>(), row.at(2).get<long>()}] += row.at(0).get<int>();
  }
  return Lff(UnivariatePolynomial(std::move(coeffs)), std::move(den));
}

}  // namespace nilzeta
