#pragma once

// Brute-force root counting over finite fields. Nothing here shares code with
// the geometry kernel except for computing the mixed-volume reference that the
// counts are compared against.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rspan/arith.hpp"
#include "rspan/finite_field.hpp"
#include "rspan/subspaces.hpp"

namespace rspan {

/// One Laurent polynomial sum c_t x^{a_t}; coefficients lie in F_p \ {0}.
struct SparseEquation {
    std::vector<LatticePoint> exponents;
    std::vector<std::uint32_t> coefficients;

    friend bool operator==(const SparseEquation&, const SparseEquation&) = default;
};

struct SparseSystem {
    std::size_t dim = 0;
    unsigned p = 0;
    std::uint64_t seed = 0;
    std::vector<SparseEquation> equations;

    friend bool operator==(const SparseSystem&, const SparseSystem&) = default;
};

/// Enumerations larger than this many torus points are refused.
inline constexpr std::uint64_t enumeration_cap = 100'000'000;

/// Draws every coefficient independently and uniformly from F_p \ {0} with a
/// mt19937_64 stream seeded by `seed`, in support order. Identical arguments
/// give identical systems on every platform.
SparseSystem sample_system(std::span<const MonomialSubspace> supports, unsigned p, std::uint64_t seed);

/// Number of common zeros in (F_{p^K}^*)^n, by exhaustive enumeration.
/// `threads` only changes wall time.
std::uint64_t count_torus_solutions(const SparseSystem& system, unsigned k, unsigned threads = 1);

/// (p^K - 1)^n, the number of torus points enumerated at extension degree K.
std::uint64_t torus_size(unsigned p, unsigned k, std::size_t dim);

struct CountReport {
    std::vector<MonomialSubspace> supports;
    unsigned p = 0;
    unsigned trials = 0;
    unsigned k_max = 0;
    std::uint64_t seed = 0;
    /// trial_counts[t][K-1]: count of trial t over F_{p^K}. Trial t uses seed + t.
    std::vector<std::vector<std::uint64_t>> trial_counts;
    /// K -> maximum over trials.
    std::map<unsigned, std::uint64_t> counts_by_extension;
    std::uint64_t generic_count = 0;
    Integer mv_reference;
    std::uint64_t enumerated_points = 0;
};

/// Runs `trials` seeded systems over F_{p^K}, K = 1..k_max, and compares the
/// maximum count with the mixed volume of the support hulls. Any count above
/// the mixed volume raises invariant_breach with the offending system dumped
/// into the message.
CountReport generic_count(std::span<const MonomialSubspace> supports, unsigned p, unsigned trials, unsigned k_max,
                          std::uint64_t seed, unsigned threads = 1);

struct MultiAdditivityReport {
    CountReport product;
    CountReport first;
    CountReport second;
    /// MV(A' + A'', rest) == MV(A', rest) + MV(A'', rest); always checked.
    bool mv_identity = false;
    /// All three generic counts reached their mixed volumes.
    bool saturated = false;
    /// Set only when saturated: count(product) == count(first) + count(second).
    std::optional<bool> count_identity;
};

MultiAdditivityReport verify_multiadditivity(const MonomialSubspace& first, const MonomialSubspace& second,
                                             std::span<const MonomialSubspace> rest, unsigned p, unsigned trials,
                                             unsigned k_max, std::uint64_t seed, unsigned threads = 1);

} // namespace rspan
