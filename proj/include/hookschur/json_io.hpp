#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "hookschur/filling.hpp"
#include "hookschur/lr.hpp"
#include "hookschur/polynomial.hpp"
#include "hookschur/rsk.hpp"

namespace hookschur {

using Json = nlohmann::ordered_json;

// All parsers throw std::invalid_argument naming the offending field or
// token; serializers emit the same shapes the parsers accept.

// {"shape":[3,4], "rows":[["1","2","1'"], ...], "mask":[1,0]} with rows
// bottom to top; "mask" is optional.
Json tableau_to_json(const Filling& f, const std::optional<SkewMask>& mask = std::nullopt);

struct ParsedTableau {
    Filling filling;
    std::optional<SkewMask> mask;
};
ParsedTableau tableau_from_json(const Json& j);

// {"k1":3,"l1":2,"k2":2,"l2":2,"rows":[[...], ...]} with rows top to bottom.
Json matrix_to_json(const MixedMatrix& m);
MixedMatrix matrix_from_json(const Json& j);

// {"top":["1","1'"], "bottom":["2","1"]}
Json biword_to_json(const BiWord& w);
BiWord biword_from_json(const Json& j);

// {"beta":[...], "gamma":[...], "labels":[[...], ...]} bottom to top.
Json lr_tableau_to_json(const LrTableau& v);
LrTableau lr_tableau_from_json(const Json& j);

// Array of {"coeff": c, "exps": {"x1":2, ...}} in the canonical term order;
// coefficients that fit in 64 bits are numbers, larger ones decimal strings.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// Reads and parses a file, reporting the path on failure.
Json load_json_file(const std::string& path);

}  // namespace hookschur
