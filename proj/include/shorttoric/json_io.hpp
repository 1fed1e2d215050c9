#ifndef SHORTTORIC_JSON_IO_HPP
#define SHORTTORIC_JSON_IO_HPP

#include <json.hpp>

#include "shorttoric/flag_vectors.hpp"
#include "shorttoric/laurent.hpp"
#include "shorttoric/nc_poly.hpp"
#include "shorttoric/poset.hpp"

namespace shorttoric {

using json = nlohmann::json;

/*
  File formats:
    poset       {"elements": [...], "covers": [["u","v"], ...],
                 "ranks": {"u": 0, ...}}   (ranks optional on input)
    polynomial  [[exponent, numerator, denominator], ...], exponents
                descending
    flag vector {"n": n, "kind": "F|H|L", "values": {"<mask>": [num, den]}}
    nc poly     {"alphabet": "AB|CE|CD", "terms": {"word": [num, den]}}
  Output is canonical: poset elements sorted by (rank, label), object keys
  sorted, so identical inputs serialize byte-identically.
*/

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json flag_to_json(const FlagVector& v);
json nc_to_json(const NCPoly& p);

}  // namespace shorttoric

#endif
