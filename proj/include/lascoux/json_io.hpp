#pragma once

#include <json.hpp>

#include "lascoux/expansion.hpp"
#include "lascoux/fillings.hpp"
#include "lascoux/genomic.hpp"
#include "lascoux/polynomial.hpp"
#include "lascoux/tableaux.hpp"

namespace lascoux {

using Json = nlohmann::json;

// {"nvars": n, "terms": [{"c": int, "b": int, "e": [ints]}]}; coefficients
// that do not fit in 64 bits are emitted as decimal strings.
Json to_json(const BPolynomial& f);
BPolynomial polynomial_from_json(const Json& j);

// {"shape": [...], "inner": [...]|null, "basement": [...]|"large"|"none",
//  "rows": [[[ints]...]...]} with each box sorted decreasing, anchor first.
Json to_json(const SetFilling& filling);
SetFilling filling_from_json(const Json& j);

// {"outer": [...], "inner": [...], "convention": "reverse"|"increasing",
//  "rows": [[[ints]...]...]}
Json to_json(const SetTableau& tableau);
SetTableau tableau_from_json(const Json& j);

// {"lambda": [...], "mu": [...], "t": [[ints]...], "u": [[ints]...]}
Json to_json(const LenartPair& pair);
LenartPair lenart_pair_from_json(const Json& j);

// {"shape": [...], "inner": [...], "boxes": [[[family,gene]|null ...]...]}
Json to_json(const GenomicFilling& filling);
GenomicFilling genomic_from_json(const Json& j);

// [{"gamma": [...], "coeff": [{"b": int, "c": int}]}]
Json to_json(const AtomExpansion& expansion);
Json beta_poly_to_json(const BetaPoly& p);

}  // namespace lascoux
