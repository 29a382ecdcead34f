#pragma once

#include <span>

#include "rspan/lattice_geometry.hpp"
#include "rspan/subspaces.hpp"

namespace rspan {

/// A formal Minkowski difference plus - minus of lattice polytopes: an element
/// of the Grothendieck group of Newton polytopes under Minkowski addition.
/// No reduction is attempted; representatives may carry common summands.
class VirtualClass {
public:
    VirtualClass(LatticePolytope plus, LatticePolytope minus);

    static VirtualClass identity(std::size_t dim);
    /// The class of a single polytope (minus part is the origin).
    static VirtualClass of(LatticePolytope p);

    std::size_t dim() const noexcept { return plus_.ambient_dim(); }
    const LatticePolytope& plus() const noexcept { return plus_; }
    const LatticePolytope& minus() const noexcept { return minus_; }

private:
    LatticePolytope plus_;
    LatticePolytope minus_;
};

VirtualClass class_of(const MonomialSubspace& l);

VirtualClass multiply(const VirtualClass& a, const VirtualClass& b);
VirtualClass inverse(const VirtualClass& a);

/// Cross test: (P+, P-) = (Q+, Q-) iff P+ + Q- = Q+ + P-.
bool equals(const VirtualClass& a, const VirtualClass& b);

/// Multilinear extension of the mixed volume: sum over sign patterns of the
/// signed mixed volume of the chosen components. Needs exactly n classes in Z^n.
Integer index(std::span<const VirtualClass> classes);

} // namespace rspan
