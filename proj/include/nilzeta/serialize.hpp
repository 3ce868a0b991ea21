// Canonical JSON forms of the arith value types.

#pragma once

#include "json.hpp"

#include "nilzeta/arith.hpp"

namespace nilzeta {

// {"vars": [...], "num": [["c_num", "c_den", e_1, ..., e_k], ...],
//  "den": [[mult, e_1, ..., e_k], ...]}, both lists sorted by exponent.
nlohmann::json frf_to_json(const Frf& f);
Frf frf_from_json(const nlohmann::json& j);

// {"vars": ["s"], "num": [["c_num", "c_den"], ...] by ascending degree,
//  "den": [[mult, a, b], ...]} where each factor is (b*s - a).
nlohmann::json lff_to_json(const Lff& f);
Lff lff_from_json(const nlohmann::json& j);

}  // namespace nilzeta
