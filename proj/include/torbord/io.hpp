#pragma once

#include <json.hpp>

#include <string>

#include "torbord/numeric.hpp"
#include "torbord/simplicial.hpp"

namespace torbord {

using Json = nlohmann::ordered_json;

/// Exact integers are emitted as JSON numbers when they fit in 64 bits
/// and as decimal strings otherwise; parsing accepts both.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json int_vector_to_json(const std::vector<Int>& v);

Json rat_to_json(const Rat& v); // "p/q"

Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

/// Accepts either the JSON object form or the compact text form
/// "m: v v v, v v".
SimplicialComplex parse_complex_text(const std::string& text);
SimplicialComplex load_complex_file(const std::string& path);

/// The full invariant bundle for one complex: vectors, characteristic
/// numbers, genus specializations, bordism data, flags.  Stable key order.
Json analyze_report(const SimplicialComplex& k);

} // namespace torbord
