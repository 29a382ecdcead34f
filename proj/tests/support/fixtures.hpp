#pragma once

#include <vector>

#include "rspan/lattice_geometry.hpp"
#include "rspan/subspaces.hpp"

namespace rspan::testing {

inline LatticePolytope hull_of(std::vector<LatticePoint> pts)
{
    return LatticePolytope::hull(pts);
}

inline MonomialSubspace sub(std::vector<LatticePoint> pts)
{
    const std::size_t n = pts.front().dim();
    return MonomialSubspace(n, std::move(pts));
}

inline MonomialSubspace simplex2() { return sub({{0, 0}, {1, 0}, {0, 1}}); }
inline MonomialSubspace square2() { return sub({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
inline MonomialSubspace wide_triangle() { return sub({{0, 0}, {2, 0}, {0, 2}}); }

} // namespace rspan::testing
