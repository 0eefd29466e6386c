#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "mv/crystal.hpp"

namespace mv::io {

using Json = nlohmann::ordered_json;

// {"series": "A", "rank": 2, "lambda": [1,1], "base_word": [1,2,1], "N": [1,0,0]}
// Letters are 1-based. With `vertices`, appends
// "vertices": [{"w": [..], "mu": ["p/q", ..]}, ..] in Weyl element order.
Json polytope_to_json(const MVPolytope& p, bool vertices = false);

// Accepts any reduced word of w0 under "base_word" and converts to the base
// word of `rs`. Throws ConfigError on schema problems or invalid data.
MVPolytope polytope_from_json(const Json& j, const RootSystemPtr& rs);
// Builds the root system from "series"/"rank".
MVPolytope polytope_from_json(const Json& j);

Json crystal_to_json(const Crystal& c, bool vertices = false);

std::vector<int> parse_labels(const std::string& csv);
Json vector_to_json(const HVector& v);
Json word_to_json(const Word& w);

std::string format_vertex_table(const MVPolytope& p);

}  // namespace mv::io
