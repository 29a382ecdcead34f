#include "rspan/lattice_geometry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rspan/error.hpp"
#include "rspan/integer_linalg.hpp"

namespace rspan {

namespace {

// A simplex of the triangulated boundary; <outer, x> <= level on the hull.
struct BoundaryFacet {
    std::vector<std::size_t> idx;
    LatticePoint outer;
    Integer level;
};

BoundaryFacet make_boundary_facet(const std::vector<LatticePoint>& pts, std::vector<std::size_t> idx,
                                  const LatticePoint& inside)
{
    std::sort(idx.begin(), idx.end());
    const std::size_t n = pts.front().dim();
    std::vector<LatticePoint> diffs;
    diffs.reserve(n - 1);
    for (std::size_t k = 1; k < idx.size(); ++k)
        diffs.push_back(pts[idx[k]] - pts[idx[0]]);
    LatticePoint u = linalg::cross(diffs, n);
    Integer c = dot(u, pts[idx[0]]);
    Integer side = dot(u, inside);
    if (side == c)
        fail(ErrorCode::invariant_breach, "placing triangulation: reference point lies on a new facet");
    if (side > c) {
        u = -u;
        c = -c;
    }
    return {std::move(idx), std::move(u), std::move(c)};
}

Integer simplex_volume(const std::vector<LatticePoint>& pts, const std::vector<std::size_t>& base,
                       const LatticePoint& apex)
{
    std::vector<LatticePoint> rows;
    rows.reserve(base.size());
    for (auto i : base)
        rows.push_back(pts[i] - apex);
    return abs(linalg::determinant(rows));
}

struct PlacedHull {
    std::vector<BoundaryFacet> boundary;
    Integer normalized_volume = 0;
};

// Incremental hull of points that affinely span Z^n. Every point not yet
// inside the current hull sits in the outside set of one facet it sees; the
// farthest such point is inserted next, which keeps the inserted points few.
// Visibility is strict, so points on the current boundary are dropped.
PlacedHull place(const std::vector<LatticePoint>& pts)
{
    const std::size_t n = pts.front().dim();
    std::vector<std::size_t> simplex{0};
    std::vector<LatticePoint> diffs;
    for (std::size_t i = 1; i < pts.size() && simplex.size() < n + 1; ++i) {
        diffs.push_back(pts[i] - pts[0]);
        if (linalg::rank(diffs) == diffs.size())
            simplex.push_back(i);
        else
            diffs.pop_back();
    }
    if (simplex.size() != n + 1)
        fail(ErrorCode::invariant_breach, "placing triangulation: input is not full-dimensional");

    struct Live {
        BoundaryFacet facet;
        std::vector<std::size_t> outside;
        bool alive = true;
    };
    std::vector<Live> facets;
    PlacedHull out;
    out.normalized_volume = abs(linalg::determinant(diffs));
    for (std::size_t omit = 0; omit <= n; ++omit) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k <= n; ++k)
            if (k != omit)
                idx.push_back(simplex[k]);
        facets.push_back({make_boundary_facet(pts, std::move(idx), pts[simplex[omit]]), {}, true});
    }

    auto sees = [&](std::size_t f, std::size_t i) {
        return dot(facets[f].facet.outer, pts[i]) > facets[f].facet.level;
    };
    auto assign = [&](std::size_t i, std::size_t from) {
        for (std::size_t f = from; f < facets.size(); ++f)
            if (facets[f].alive && sees(f, i)) {
                facets[f].outside.push_back(i);
                return true;
            }
        return false;
    };

    std::vector<bool> in_simplex(pts.size(), false);
    for (std::size_t v : simplex)
        in_simplex[v] = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!in_simplex[i])
            assign(i, 0);

    for (std::size_t cur = 0; cur < facets.size(); ++cur) {
        while (facets[cur].alive && !facets[cur].outside.empty()) {
            // farthest point above this facet, first index on ties
            std::size_t apex = facets[cur].outside.front();
            Integer best = dot(facets[cur].facet.outer, pts[apex]);
            for (std::size_t i : facets[cur].outside) {
                Integer v = dot(facets[cur].facet.outer, pts[i]);
                if (v > best || (v == best && i < apex)) {
                    best = std::move(v);
                    apex = i;
                }
            }
            const LatticePoint& p = pts[apex];

            // ridge -> (multiplicity among visible facets, vertex opposite the ridge)
            std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> ridges;
            std::vector<std::size_t> orphans;
            for (std::size_t g = 0; g < facets.size(); ++g) {
                if (!facets[g].alive || !sees(g, apex))
                    continue;
                const auto& idx = facets[g].facet.idx;
                out.normalized_volume += simplex_volume(pts, idx, p);
                for (std::size_t k = 0; k < idx.size(); ++k) {
                    std::vector<std::size_t> ridge;
                    for (std::size_t j = 0; j < idx.size(); ++j)
                        if (j != k)
                            ridge.push_back(idx[j]);
                    auto [it, inserted] = ridges.try_emplace(std::move(ridge), 0, idx[k]);
                    it->second.first += 1;
                }
                facets[g].alive = false;
                for (std::size_t i : facets[g].outside)
                    if (i != apex)
                        orphans.push_back(i);
                facets[g].outside.clear();
            }

            const std::size_t first_new = facets.size();
            for (auto& [ridge, info] : ridges) {
                if (info.first != 1)
                    continue;
                std::vector<std::size_t> idx = ridge;
                idx.push_back(apex);
                facets.push_back({make_boundary_facet(pts, std::move(idx), pts[info.second]), {}, true});
            }
            for (std::size_t i : orphans)
                if (!assign(i, first_new))
                    assign(i, 0);
        }
    }

    for (auto& f : facets)
        if (f.alive)
            out.boundary.push_back(std::move(f.facet));
    return out;
}

// Facets, vertices and volume of a full-dimensional point set.
void build_full_dimensional(const std::vector<LatticePoint>& pts, std::vector<LatticePoint>& vertices,
                            std::vector<Facet>& facets, Integer& normalized_volume)
{
    const std::size_t n = pts.front().dim();
    PlacedHull placed = place(pts);
    normalized_volume = placed.normalized_volume;

    facets.clear();
    for (const auto& bf : placed.boundary) {
        LatticePoint inner = primitive(-bf.outer);
        // outer = -g * inner, so level = -g * offset
        Integer g = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (inner[c] != 0) {
                g = -bf.outer[c] / inner[c];
                break;
            }
        }
        facets.push_back({std::move(inner), -bf.level / g});
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        if (a.normal == b.normal)
            return a.offset < b.offset;
        return a.normal < b.normal;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // every vertex lies on some boundary simplex
    std::vector<std::size_t> candidates;
    for (const auto& bf : placed.boundary)
        candidates.insert(candidates.end(), bf.idx.begin(), bf.idx.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    vertices.clear();
    for (std::size_t c : candidates) {
        const LatticePoint& p = pts[c];
        std::vector<LatticePoint> tight;
        for (const auto& f : facets)
            if (dot(f.normal, p) == f.offset)
                tight.push_back(f.normal);
        if (tight.size() >= n && linalg::rank(tight) == n)
            vertices.push_back(p);
    }
}

} // namespace

bool VertexCone::contains(const LatticePoint& u) const
{
    return std::all_of(inequalities.begin(), inequalities.end(),
                       [&](const LatticePoint& h) { return dot(h, u) >= 0; });
}

LatticePolytope LatticePolytope::hull(std::span<const LatticePoint> points)
{
    if (points.empty())
        fail(ErrorCode::invalid_argument, "convex_hull: empty point set");
    const std::size_t n = points.front().dim();
    if (n == 0)
        fail(ErrorCode::invalid_argument, "convex_hull: ambient dimension must be at least 1");
    require_dim(points, n, "convex_hull");

    std::vector<LatticePoint> pts(points.begin(), points.end());
    canonicalize(pts);

    LatticePolytope out;
    out.dim_ = n;

    std::vector<LatticePoint> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(pts[i] - pts[0]);
    const std::size_t k = linalg::rank(diffs);
    out.affine_dim_ = k;

    if (k == n) {
        build_full_dimensional(pts, out.vertices_, out.facets_, out.normalized_volume_);
        return out;
    }
    if (k == 0) {
        out.vertices_ = {pts[0]};
        out.affine_equations_ = linalg::kernel_basis({}, n);
        return out;
    }

    // Pick k coordinates on which the affine hull projects injectively.
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < n && coords.size() < k; ++c) {
        coords.push_back(c);
        std::vector<LatticePoint> proj;
        for (const auto& d : diffs) {
            LatticePoint q(coords.size());
            for (std::size_t j = 0; j < coords.size(); ++j)
                q[j] = d[coords[j]];
            proj.push_back(std::move(q));
        }
        if (linalg::rank(proj) < coords.size())
            coords.pop_back();
    }

    std::map<LatticePoint, LatticePoint> lift;
    std::vector<LatticePoint> projected;
    for (const auto& p : pts) {
        LatticePoint q(k);
        for (std::size_t j = 0; j < k; ++j)
            q[j] = p[coords[j]];
        lift.emplace(q, p);
        projected.push_back(std::move(q));
    }
    LatticePolytope low = hull(projected);
    for (const auto& v : low.vertices_)
        out.vertices_.push_back(lift.at(v));
    canonicalize(out.vertices_);
    out.affine_equations_ = linalg::kernel_basis(diffs, n);
    out.projection_coords_ = std::move(coords);
    out.projected_facets_ = low.facets_;
    return out;
}

LatticePolytope LatticePolytope::point(const LatticePoint& p)
{
    return hull(std::span<const LatticePoint>(&p, 1));
}

bool LatticePolytope::contains(const LatticePoint& x) const
{
    if (x.dim() != dim_)
        fail(ErrorCode::dimension_mismatch, "contains: point of wrong dimension");
    if (is_full_dimensional()) {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](const Facet& f) { return dot(f.normal, x) >= f.offset; });
    }
    LatticePoint rel = x - vertices_.front();
    for (const auto& w : affine_equations_)
        if (dot(w, rel) != 0)
            return false;
    if (affine_dim_ == 0)
        return true;
    LatticePoint q(affine_dim_);
    for (std::size_t j = 0; j < affine_dim_; ++j)
        q[j] = x[projection_coords_[j]];
    return std::all_of(projected_facets_.begin(), projected_facets_.end(),
                       [&](const Facet& f) { return dot(f.normal, q) >= f.offset; });
}

LatticePolytope LatticePolytope::translated(const LatticePoint& t) const
{
    std::vector<LatticePoint> moved;
    moved.reserve(vertices_.size());
    for (const auto& v : vertices_)
        moved.push_back(v + t);
    return hull(moved);
}

LatticePolytope LatticePolytope::dilated(const Integer& k) const
{
    std::vector<LatticePoint> scaled;
    scaled.reserve(vertices_.size());
    for (const auto& v : vertices_)
        scaled.push_back(k * v);
    return hull(scaled);
}

std::vector<VertexCone> LatticePolytope::normal_cones() const
{
    if (dim_ > 3)
        fail(ErrorCode::invalid_argument, "normal fans are only built in dimension <= 3");
    if (!is_full_dimensional())
        fail(ErrorCode::degenerate_polytope, "normal fan of a lower-dimensional polytope");
    std::vector<VertexCone> cones;
    cones.reserve(vertices_.size());
    for (const auto& v : vertices_) {
        VertexCone cone;
        cone.vertex = v;
        for (const auto& f : facets_)
            if (dot(f.normal, v) == f.offset)
                cone.rays.push_back(f.normal);
        for (const auto& w : vertices_)
            if (!(w == v))
                cone.inequalities.push_back(w - v);
        cones.push_back(std::move(cone));
    }
    return cones;
}

std::pair<LatticePoint, LatticePoint> LatticePolytope::bounding_box() const
{
    LatticePoint lo = vertices_.front();
    LatticePoint hi = vertices_.front();
    for (const auto& v : vertices_) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (v[c] < lo[c])
                lo[c] = v[c];
            if (v[c] > hi[c])
                hi[c] = v[c];
        }
    }
    return {lo, hi};
}

LatticePolytope convex_hull(std::span<const LatticePoint> points)
{
    return LatticePolytope::hull(points);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q)
{
    if (p.ambient_dim() != q.ambient_dim())
        fail(ErrorCode::dimension_mismatch, "minkowski_sum: ambient dimensions differ");
    std::vector<LatticePoint> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices())
            sums.push_back(a + b);
    return LatticePolytope::hull(sums);
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p)
{
    auto [lo, hi] = p.bounding_box();
    std::vector<LatticePoint> out;
    LatticePoint x = lo;
    const std::size_t n = p.ambient_dim();
    for (;;) {
        if (p.contains(x))
            out.push_back(x);
        // odometer with the last coordinate fastest keeps the output sorted
        std::size_t c = n;
        while (c > 0) {
            --c;
            if (x[c] < hi[c]) {
                x[c] += 1;
                break;
            }
            x[c] = lo[c];
            if (c == 0)
                return out;
        }
    }
}

VolumeValue euclidean_volume(const LatticePolytope& p)
{
    Rational value(p.normalized_volume(), factorial(static_cast<unsigned>(p.ambient_dim())));
    return {value, p.normalized_volume()};
}

Integer mixed_volume(std::span<const LatticePolytope> polytopes)
{
    if (polytopes.empty())
        fail(ErrorCode::invalid_argument, "mixed_volume: no polytopes given");
    const std::size_t n = polytopes.front().ambient_dim();
    if (polytopes.size() != n)
        fail(ErrorCode::invalid_argument, "mixed_volume: need exactly " + std::to_string(n) + " polytopes, got " +
                                              std::to_string(polytopes.size()));
    for (const auto& p : polytopes)
        if (p.ambient_dim() != n)
            fail(ErrorCode::dimension_mismatch, "mixed_volume: ambient dimensions differ");
    if (n > 20)
        fail(ErrorCode::cap_exceeded, "mixed_volume: dimension too large for inclusion-exclusion");

    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::optional<LatticePolytope>> partial(subsets);
    Integer alternating = 0;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        const std::size_t low = mask & (~mask + 1);
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(low));
        const std::size_t rest = mask ^ low;
        partial[mask] = rest == 0 ? polytopes[i] : minkowski_sum(*partial[rest], polytopes[i]);
        const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
        if ((n - size) % 2 == 0)
            alternating += partial[mask]->normalized_volume();
        else
            alternating -= partial[mask]->normalized_volume();
    }

    // alternating = n! * sum (-1)^(n-|S|) vol(P_S)
    const Integer nf = factorial(static_cast<unsigned>(n));
    if (alternating % nf != 0)
        fail(ErrorCode::invariant_breach, "mixed_volume: inclusion-exclusion sum is not integral");
    Integer mv = alternating / nf;
    if (mv < 0)
        fail(ErrorCode::invariant_breach, "mixed_volume: negative result");
    return mv;
}

bool refines(const LatticePolytope& q, const LatticePolytope& p)
{
    if (q.ambient_dim() != p.ambient_dim())
        fail(ErrorCode::dimension_mismatch, "refines: ambient dimensions differ");
    const auto fine = q.normal_cones();
    const auto coarse = p.normal_cones();
    for (const auto& cone : fine) {
        bool inside_some = std::any_of(coarse.begin(), coarse.end(), [&](const VertexCone& target) {
            return std::all_of(cone.rays.begin(), cone.rays.end(),
                               [&](const LatticePoint& r) { return target.contains(r); });
        });
        if (!inside_some)
            return false;
    }
    return true;
}

SupportData support_data(const LatticePolytope& p, const LatticePoint& u)
{
    if (u.dim() != p.ambient_dim())
        fail(ErrorCode::dimension_mismatch, "support_data: direction of wrong dimension");
    if (u.is_zero())
        fail(ErrorCode::invalid_argument, "support_data: zero direction");
    Integer best = dot(p.vertices().front(), u);
    for (const auto& v : p.vertices())
        best = std::min(best, dot(v, u));
    std::vector<LatticePoint> face;
    for (const auto& v : p.vertices())
        if (dot(v, u) == best)
            face.push_back(v);
    return {best, LatticePolytope::hull(face)};
}

} // namespace rspan
