#pragma once

#include "torbord/simplicial.hpp"

// Shared small complexes used throughout the suite.
namespace fixtures {

using torbord::SimplicialComplex;

// m=4, facets {1,2,3},{4}
inline SimplicialComplex e1() { return SimplicialComplex::parse(4, {{1, 2, 3}, {4}}); }

// the void complex on [3]
inline SimplicialComplex e2() { return SimplicialComplex::parse(3, {}); }

// boundary of the triangle
inline SimplicialComplex e3() { return SimplicialComplex::parse(3, {{1, 2}, {1, 3}, {2, 3}}); }

// cone over the triangle boundary on [4]
inline SimplicialComplex e4() {
    return SimplicialComplex::parse(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
}

// the bordant pair on [5]
inline SimplicialComplex e5a() {
    return SimplicialComplex::parse(5, {{1}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}
inline SimplicialComplex e5b() {
    return SimplicialComplex::parse(5, {{1}, {2, 3, 4}, {3, 5}, {4, 5}});
}

// a single vertex with two ghosts
inline SimplicialComplex e6() { return SimplicialComplex::parse(3, {{1}}); }

// three isolated vertices with one ghost, bordant to e1
inline SimplicialComplex three_points_m4() {
    return SimplicialComplex::parse(4, {{1}, {2}, {3}});
}

} // namespace fixtures
