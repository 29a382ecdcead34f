#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rspan/arith.hpp"

namespace rspan {

/// Facet inequality <x, normal> >= offset; `normal` is the primitive inner normal.
struct Facet {
    LatticePoint normal;
    Integer offset;

    friend bool operator==(const Facet&, const Facet&) = default;
};

/// Exact volume: `value` is Euclidean, `normalized` is n! * value.
struct VolumeValue {
    Rational value;
    Integer normalized;
};

/// Normal cone of a vertex of a full-dimensional polytope (the dual cone of
/// the vertex's tangent cone). `rays` are the primitive inner normals of the
/// facets through the vertex; `inequalities` h describe the cone as
/// {u : <h, u> >= 0}.
struct VertexCone {
    LatticePoint vertex;
    std::vector<LatticePoint> rays;
    std::vector<LatticePoint> inequalities;

    bool contains(const LatticePoint& u) const;
};

/// Convex hull of finitely many lattice points, stored by its extreme points.
///
/// Construction runs a placing triangulation over the input in lexicographic
/// order, which yields the vertex set, the facet description and the exact
/// volume in one pass. Lower-dimensional inputs are handled by projecting onto
/// a coordinate subspace on which the affine hull maps injectively; such
/// polytopes have volume 0 and no facets.
class LatticePolytope {
public:
    /// Throws invalid_argument on empty input, dimension_mismatch on mixed dimensions.
    static LatticePolytope hull(std::span<const LatticePoint> points);
    static LatticePolytope point(const LatticePoint& p);

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t affine_dim() const noexcept { return affine_dim_; }
    bool is_full_dimensional() const noexcept { return affine_dim_ == dim_; }

    /// Extreme points in lexicographic order.
    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
    /// Facets sorted by (normal, offset); empty unless full-dimensional.
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    /// n! times the Euclidean volume.
    const Integer& normalized_volume() const noexcept { return normalized_volume_; }

    bool contains(const LatticePoint& x) const;
    LatticePolytope translated(const LatticePoint& t) const;
    LatticePolytope dilated(const Integer& k) const;

    /// Normal cones of all vertices, in vertex order. Requires a
    /// full-dimensional polytope with ambient dimension at most 3.
    std::vector<VertexCone> normal_cones() const;

    /// Lower-left and upper-right corners of the bounding box.
    std::pair<LatticePoint, LatticePoint> bounding_box() const;

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b)
    {
        return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
    }

private:
    LatticePolytope() = default;

    std::size_t dim_ = 0;
    std::size_t affine_dim_ = 0;
    std::vector<LatticePoint> vertices_;
    std::vector<Facet> facets_;
    Integer normalized_volume_ = 0;

    // Membership data for lower-dimensional polytopes: equations <w, x - v0> = 0
    // cutting out the affine hull, and the facets of the projection onto
    // `projection_coords_`.
    std::vector<LatticePoint> affine_equations_;
    std::vector<std::size_t> projection_coords_;
    std::vector<Facet> projected_facets_;
};

LatticePolytope convex_hull(std::span<const LatticePoint> points);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// All points of Z^n in P, lexicographically sorted (bounding-box scan).
std::vector<LatticePoint> lattice_points(const LatticePolytope& p);

VolumeValue euclidean_volume(const LatticePolytope& p);

/// Mixed volume normalized so that MV(P, ..., P) equals n! vol(P); computed by
/// inclusion-exclusion over all 2^n - 1 partial Minkowski sums. Requires exactly
/// n polytopes in Z^n.
Integer mixed_volume(std::span<const LatticePolytope> polytopes);

/// True iff the normal fan of q refines the normal fan of p. Both must be
/// full-dimensional with ambient dimension at most 3.
bool refines(const LatticePolytope& q, const LatticePolytope& p);

struct SupportData {
    Integer value;
    LatticePolytope face;
};

/// min over P of <a, u> and the face where it is attained. `u` must be nonzero.
SupportData support_data(const LatticePolytope& p, const LatticePoint& u);

} // namespace rspan
