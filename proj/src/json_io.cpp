#include "shorttoric/json_io.hpp"

#include <algorithm>

#include "shorttoric/error.hpp"

namespace shorttoric {

namespace {

json rational_to_json(const Rational& r) {
  return json::array({to_string(Rational(r.get_num())), to_string(Rational(r.get_den()))});
}

json rational_pair(const Rational& r) {
  // small numbers fit in plain JSON integers; big ones go through strings
  if (mpz_fits_slong_p(r.get_num().get_mpz_t()) && mpz_fits_slong_p(r.get_den().get_mpz_t()))
    return json::array({r.get_num().get_si(), r.get_den().get_si()});
  return rational_to_json(r);
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(errc::parse_error, "expected [numerator, denominator]");
  auto part = [](const json& v) -> Integer {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) return Integer(v.get<std::string>());
    fail(errc::parse_error, "expected an integer or integer string");
  };
  Rational r(part(j[0]), part(j[1]));
  r.canonicalize();
  return r;
}

}  // namespace

json poset_to_json(const Poset& p) {
  std::vector<int> order = p.elements_by_rank();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p.rank(a) != p.rank(b) ? p.rank(a) < p.rank(b) : p.label(a) < p.label(b);
  });
  json elements = json::array();
  json ranks = json::object();
  for (int v : order) {
    elements.push_back(p.label(v));
    ranks[p.label(v)] = p.rank(v);
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : p.cover_pairs()) covers.emplace_back(p.label(lo), p.label(hi));
  std::sort(covers.begin(), covers.end());
  json jcovers = json::array();
  for (const auto& [lo, hi] : covers) jcovers.push_back(json::array({lo, hi}));
  return json{{"elements", elements}, {"covers", jcovers}, {"ranks", ranks}};
}

Poset poset_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "poset file must be a JSON object");
  std::vector<std::string> elements;
  if (j.contains("elements"))
    for (const auto& e : j.at("elements")) elements.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers"))
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) fail(errc::parse_error, "cover must be a pair");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  std::optional<std::map<std::string, int>> ranks;
  if (j.contains("ranks") && !j.at("ranks").is_null()) {
    ranks.emplace();
    for (auto it = j.at("ranks").begin(); it != j.at("ranks").end(); ++it)
      (*ranks)[it.key()] = it.value().get<int>();
  }
  return Poset::from_covers(covers, ranks, elements);
}

json laurent_to_json(const LaurentPoly& p) {
  json out = json::array();
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    json triple = json::array();
    triple.push_back(it->first);
    json pair = rational_pair(it->second);
    triple.push_back(pair[0]);
    triple.push_back(pair[1]);
    out.push_back(triple);
  }
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) fail(errc::parse_error, "polynomial must be a JSON array");
  LaurentPoly out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3)
      fail(errc::parse_error, "polynomial term must be [exponent, numerator, denominator]");
    out.add_term(t[0].get<long>(), rational_from_json(json::array({t[1], t[2]})));
  }
  return out;
}

json flag_to_json(const FlagVector& v) {
  json values = json::object();
  for (uint64_t s = 0; s < v.values.size(); ++s)
    if (v.values[s] != 0 || s == 0) values[std::to_string(s)] = rational_pair(v.values[s]);
  const char* kind = v.kind == FlagKind::F ? "F" : v.kind == FlagKind::H ? "H" : "L";
  return json{{"n", v.n}, {"kind", kind}, {"values", values}};
}

json nc_to_json(const NCPoly& p) {
  json terms = json::object();
  for (const auto& [w, c] : p.terms) terms[w] = rational_pair(c);
  const char* alpha = p.alphabet == Alphabet::AB ? "AB"
                      : p.alphabet == Alphabet::CE ? "CE"
                                                   : "CD";
  return json{{"alphabet", alpha}, {"terms", terms}};
}

}  // namespace shorttoric
