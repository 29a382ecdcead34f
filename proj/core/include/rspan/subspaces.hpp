#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rspan/arith.hpp"
#include "rspan/lattice_geometry.hpp"

namespace rspan {

/// The subspace of Laurent polynomials spanned by the monomials x^a, a in the
/// support. The support is nonempty, deduplicated and lexicographically sorted,
/// so structural equality is support equality.
class MonomialSubspace {
public:
    MonomialSubspace(std::size_t dim, std::vector<LatticePoint> support);

    /// The span of the constant function 1.
    static MonomialSubspace unit(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LatticePoint>& support() const noexcept { return support_; }
    bool contains(const LatticePoint& a) const;

    LatticePolytope newton_polytope() const;

    friend bool operator==(const MonomialSubspace&, const MonomialSubspace&) = default;

private:
    std::size_t dim_;
    std::vector<LatticePoint> support_;
};

/// Support of LM is the sumset of the supports.
MonomialSubspace product(const MonomialSubspace& l, const MonomialSubspace& m);
MonomialSubspace power(const MonomialSubspace& l, unsigned k);

/// All monomials integral over L: the lattice points of its Newton polytope.
MonomialSubspace completion(const MonomialSubspace& l);

/// Witness that x^b is integral over L: q*b = decomposition[0] + ... + decomposition[q-1]
/// with every summand in the support, so (x^b)^q lies in L^q.
struct IntegralityCertificate {
    LatticePoint exponent;
    unsigned degree = 0;
    std::vector<LatticePoint> decomposition;

    /// Re-checks the decomposition by addition.
    bool verify(const MonomialSubspace& l) const;
};

/// Searches q = 1..q_max for a certificate by dynamic programming over the
/// q-fold sumsets. nullopt means "none found within the bound", which is
/// inconclusive unless b lies outside the Newton polytope.
std::optional<IntegralityCertificate> is_integral(const LatticePoint& b, const MonomialSubspace& l,
                                                  unsigned q_max = 12);

enum class WitnessStatus { not_requested, found, inconclusive };

struct EquivalenceResult {
    bool equivalent = false;
    WitnessStatus witness_status = WitnessStatus::not_requested;
    /// N with LN = MN, when found.
    std::optional<MonomialSubspace> witness;
    /// The k for which N = completion((LM)^k).
    unsigned witness_power = 0;
};

/// L ~ M iff their Newton polytopes coincide.
bool equivalent(const MonomialSubspace& l, const MonomialSubspace& m);

/// As `equivalent`, and when true searches N = completion((LM)^k), k = 1..k_max,
/// for an explicit product witness.
EquivalenceResult equivalent_with_witness(const MonomialSubspace& l, const MonomialSubspace& m, unsigned k_max = 6);

/// [Z^n : Lambda] for Lambda spanned by the support differences; empty when
/// Lambda has rank below n.
class LatticeIndex {
public:
    static LatticeIndex finite(Integer value) { return LatticeIndex(std::move(value)); }
    static LatticeIndex infinite() { return LatticeIndex(); }

    bool is_finite() const noexcept { return value_.has_value(); }
    const Integer& value() const { return value_.value(); }

    friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;

private:
    LatticeIndex() = default;
    explicit LatticeIndex(Integer v) : value_(std::move(v)) {}
    std::optional<Integer> value_;
};

LatticeIndex kodaira_lattice_index(const MonomialSubspace& l);

/// Self-intersection index split as (mapping degree d) x (degree of the image).
struct DegreeDecomposition {
    Integer index;
    LatticeIndex mapping_degree;
    Rational image_degree;
};

DegreeDecomposition degree_decomposition(const MonomialSubspace& l);

} // namespace rspan
