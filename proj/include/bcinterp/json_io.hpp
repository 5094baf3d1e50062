#pragma once

#include <string>

#include <json.hpp>

#include "bcinterp/laurent.hpp"
#include "bcinterp/points.hpp"

namespace bcinterp {

// {"n": n, "terms": [{"exp": [...], "coef": "p/q"}, ...]} with terms in
// canonical order and exact fraction strings; round-trips bit for bit.
nlohmann::json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const InterpParams& p);

// Writes text to path via a temporary file in the same directory plus rename,
// so readers never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& text);

}  // namespace bcinterp
