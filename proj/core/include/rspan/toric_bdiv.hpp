#pragma once

// Projective toric models, their Cartier divisors, and b-divisors as classes
// of divisors under pull-back to refinements.
//
// Conventions: a model is the normal fan of a full-dimensional lattice polytope
// (its "base"); maximal cones are the vertex normal cones. A Cartier divisor is
// an integral piecewise-linear function h given on each maximal cone sigma by a
// linear functional a_sigma, h(u) = <a_sigma, u> for u in sigma. Polytopes
// enter through h_P(u) = min_{a in P} <a, u>, and the sections of a divisor are
// the b with <b, u> >= h(u) for all u. Everything is restricted to n <= 3.

#include <optional>
#include <span>
#include <vector>

#include "rspan/grothendieck.hpp"
#include "rspan/lattice_geometry.hpp"
#include "rspan/subspaces.hpp"

namespace rspan {

class ToricModel {
public:
    /// Throws degenerate_polytope for lower-dimensional bases, invalid_argument for n > 3.
    static ToricModel from_base(LatticePolytope base);

    std::size_t dim() const noexcept { return base_.ambient_dim(); }
    const LatticePolytope& base() const noexcept { return base_; }
    /// One cone per vertex of the base, in vertex order.
    const std::vector<VertexCone>& cones() const noexcept { return cones_; }
    /// Distinct rays of the fan, sorted.
    const std::vector<LatticePoint>& rays() const noexcept { return rays_; }

    /// Index of the maximal cone containing every ray in `rays`, if any.
    std::optional<std::size_t> cone_containing(std::span<const LatticePoint> rays) const;

    /// Equal fans (mutual refinement); bases may differ.
    bool same_fan(const ToricModel& other) const;

private:
    explicit ToricModel(LatticePolytope base);

    LatticePolytope base_;
    std::vector<VertexCone> cones_;
    std::vector<LatticePoint> rays_;
};

class ToricDivisor {
public:
    /// One functional per maximal cone, in cone order. Throws invalid_argument
    /// unless adjacent functionals agree on every shared ray.
    ToricDivisor(ToricModel model, std::vector<LatticePoint> functionals);

    static ToricDivisor zero(const ToricModel& model);
    static ToricDivisor principal(const ToricModel& model, const LatticePoint& a);
    /// The support function of the model's own base.
    static ToricDivisor of_base(const ToricModel& model);

    const ToricModel& model() const noexcept { return model_; }
    const std::vector<LatticePoint>& functionals() const noexcept { return functionals_; }
    std::size_t dim() const noexcept { return model_.dim(); }

    /// h(u) for u in the support of the fan.
    Integer evaluate(const LatticePoint& u) const;
    bool is_principal() const;

    /// Both operands must live on the same base polytope.
    friend ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);
    friend ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b);
    friend ToricDivisor operator*(const Integer& k, const ToricDivisor& d);

    /// Same base and same functionals.
    friend bool operator==(const ToricDivisor& a, const ToricDivisor& b);

private:
    ToricModel model_;
    std::vector<LatticePoint> functionals_;
};

/// A b-divisor, held through one representative divisor on some model.
class BDivisor {
public:
    explicit BDivisor(ToricDivisor representative) : representative_(std::move(representative)) {}

    const ToricDivisor& representative() const noexcept { return representative_; }
    std::size_t dim() const noexcept { return representative_.dim(); }

private:
    ToricDivisor representative_;
};

/// Normal fan of `finer` refines that of `coarser`.
bool dominates(const ToricModel& finer, const ToricModel& coarser);

/// The model of the Minkowski sum of the bases; dominates both inputs.
ToricModel common_refinement(const ToricModel& a, const ToricModel& b);

/// Re-reads the support function of `d` on a dominating model.
ToricDivisor pullback(const ToricDivisor& d, const ToricModel& finer);

/// The divisor of a subspace on the model of its Newton polytope; its local
/// functionals are the vertices. Throws degenerate_polytope when the Newton
/// polytope is not full-dimensional.
ToricDivisor divisor_of_subspace(const MonomialSubspace& l);

/// Global sections {b : <b, r> >= h(r) for every ray r}; nullopt is the zero subspace.
std::optional<MonomialSubspace> subspace_of_divisor(const ToricDivisor& d);

/// Exact test across every wall of the fan: the neighbouring functional is
/// strictly larger on the rays off the wall.
bool is_strictly_convex(const ToricDivisor& d);

/// True iff the divisor of the subspace of sections, read on the model of `d`,
/// is defined there and equals `d`.
bool is_very_ample_by_sections(const ToricDivisor& d);

bool bdiv_equal(const BDivisor& a, const BDivisor& b);

struct VeryAmpleSplit {
    ToricDivisor plus;
    ToricDivisor minus;
    /// D_plus = D + multiplier * D_Q and D_minus = multiplier * D_Q.
    Integer multiplier;
};

/// Writes the representative as a difference of two strictly convex divisors
/// (D_minus may be zero when the multiplier is 0) on its own model.
VeryAmpleSplit decompose_very_ample(const BDivisor& b);

/// The Minkowski-difference class of a split: (conv D_plus, conv D_minus).
VirtualClass to_virtual_class(const VeryAmpleSplit& split);

/// Intersection number of n b-divisors in dimension n.
Integer bdiv_index(std::span<const BDivisor> divisors);

struct RoundtripReport {
    /// L is contained in the sections of its divisor.
    bool contains_source = false;
    /// The sections lie in the completion of L.
    bool within_completion = false;
    bool equivalent_to_source = false;
    Integer bdiv_index;
    Integer mixed_volume;

    bool ok() const
    {
        return contains_source && within_completion && equivalent_to_source && bdiv_index == mixed_volume;
    }
};

/// Checks subspace -> b-divisor -> subspace returns an equivalent subspace and
/// that the b-divisor intersection number of (L, companions...) matches the
/// mixed volume of the Newton polytopes. Needs n - 1 companions.
RoundtripReport isomorphism_roundtrip(const MonomialSubspace& l, std::span<const MonomialSubspace> companions);

} // namespace rspan
