#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "g2/endo.hpp"
#include "g2/forms.hpp"

namespace g2 {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "0,1,3" for the rank-r basis tuple of the given degree; "" in degree 0
std::string coeff_key(int degree, int rank);
// inverse of coeff_key; throws ParseError on malformed or unsorted tuples
int rank_of_key(int degree, const std::string& key, const std::string& where);

template <class S>
Json scalar_to_json(const S& x);
template <>
inline Json scalar_to_json<Rational>(const Rational& x) {
  return Json(x.get_str());
}
template <>
inline Json scalar_to_json<double>(const double& x) {
  return Json(x);
}

template <class S>
S scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return scalar_traits<S>::from_rational(parse_rational(j.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer())
    return scalar_traits<S>::from_long(j.get<long>());
  if (j.is_number_float()) {
    if constexpr (scalar_traits<S>::exact)
      throw ParseError(where + ": exact mode cannot read a float literal; use \"p/q\"");
    else
      return j.get<double>();
  }
  throw ParseError(where + ": expected a rational string or a number");
}

// {"degree": k, "coeffs": {"i,j,k": value, ...}}, zero coefficients omitted
template <class S>
Json form_to_json(const Form<S>& f) {
  if (f.degree > DIM)
    throw std::invalid_argument("form_to_json: degree exceeds 7");
  Json coeffs = Json::object();
  for (int r = 0; r < static_cast<int>(f.c.size()); ++r) {
    if (scalar_traits<S>::is_zero(f.c[r])) continue;
    coeffs[coeff_key(f.degree, r)] = scalar_to_json<S>(f.c[r]);
  }
  return Json{{"degree", f.degree}, {"coeffs", coeffs}};
}

template <class S>
Form<S> form_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
    throw ParseError(where + ": expected {\"degree\": k, \"coeffs\": {...}}");
  if (!j["degree"].is_number_integer())
    throw ParseError(where + ".degree: expected an integer");
  int k = j["degree"].get<int>();
  if (k < 0 || k > DIM)
    throw ParseError(where + ".degree: must be between 0 and 7");
  if (!j["coeffs"].is_object())
    throw ParseError(where + ".coeffs: expected an object");
  Form<S> f(k);
  for (const auto& [key, val] : j["coeffs"].items()) {
    int r = rank_of_key(k, key, where + ".coeffs");
    f.c[r] = scalar_from_json<S>(val, where + ".coeffs[\"" + key + "\"]");
  }
  return f;
}

// {"rows": [[a_00 ... a_06], ..., [a_60 ... a_66]]}
template <class S>
Json endo_to_json(const Endo7<S>& a) {
  Json rows = Json::array();
  for (int i = 0; i < DIM; ++i) {
    Json row = Json::array();
    for (int j = 0; j < DIM; ++j) row.push_back(scalar_to_json<S>(a(i, j)));
    rows.push_back(row);
  }
  return Json{{"rows", rows}};
}

template <class S>
Endo7<S> endo_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("rows"))
    throw ParseError(where + ": expected {\"rows\": [[...] x7]}");
  const Json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != DIM)
    throw ParseError(where + ".rows: expected 7 rows");
  Endo7<S> a;
  for (int i = 0; i < DIM; ++i) {
    if (!rows[i].is_array() || rows[i].size() != DIM)
      throw ParseError(where + ".rows[" + std::to_string(i) + "]: expected 7 entries");
    for (int k = 0; k < DIM; ++k)
      a(i, k) = scalar_from_json<S>(
          rows[i][k], where + ".rows[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return a;
}

template <class S>
Json vec_to_json(const Vec7<S>& v) {
  Json arr = Json::array();
  for (int i = 0; i < DIM; ++i) arr.push_back(scalar_to_json<S>(v[i]));
  return arr;
}

}  // namespace g2
