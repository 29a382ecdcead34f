#pragma once

// The intersection ring of P^{N_0} x ... x P^{N_k}:
// Z[h_0, ..., h_k] / (h_0^{N_0 + 1}, ..., h_k^{N_k + 1}).

#include <cstdint>
#include <vector>

#include "rspan/arith.hpp"

namespace rspan {

class ChowClass {
public:
    /// The zero class over the given factor dimensions (each at least 1).
    explicit ChowClass(std::vector<unsigned> signature);

    static ChowClass one(std::vector<unsigned> signature);
    /// h_i.
    static ChowClass hyperplane(std::vector<unsigned> signature, std::size_t i);
    /// h_0^{e_0} ... h_k^{e_k}; zero if some e_i exceeds N_i.
    static ChowClass monomial(std::vector<unsigned> signature, const std::vector<unsigned>& exponents);

    const std::vector<unsigned>& signature() const noexcept { return signature_; }
    std::size_t factors() const noexcept { return signature_.size(); }
    /// N_0 + ... + N_k.
    unsigned dimension() const;

    /// Coefficient of the given monomial (zero beyond truncation).
    Integer coefficient(const std::vector<unsigned>& exponents) const;
    void set_coefficient(const std::vector<unsigned>& exponents, Integer c);
    bool is_zero() const;

    /// Coefficient of h_0^{N_0} ... h_k^{N_k}.
    Integer top_degree() const;

    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator*(const Integer& k, ChowClass a);
    ChowClass pow(unsigned e) const;

    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    /// Every exponent vector of the truncated ring, in index order.
    std::vector<std::vector<unsigned>> monomials() const;

private:
    friend ChowClass segre_pullback(const ChowClass& x, std::size_t merged, unsigned ni, unsigned nj);

    std::size_t index_of(const std::vector<unsigned>& exponents) const;
    std::vector<unsigned> exponents_of(std::size_t index) const;

    std::vector<unsigned> signature_;
    std::vector<Integer> coeffs_; // mixed radix, factor 0 fastest
};

/// N_i N_j + N_i + N_j, the dimension of the Segre target of P^{N_i} x P^{N_j}.
unsigned segre_dimension(unsigned ni, unsigned nj);

/// Pulls a class back along the Segre embedding of the factor `merged`:
/// the factor of dimension segre_dimension(ni, nj) is replaced by two factors
/// (ni, nj) at positions merged and merged + 1, and h_merged becomes h_i + h_j.
ChowClass segre_pullback(const ChowClass& x, std::size_t merged, unsigned ni, unsigned nj);

struct SplittingCheck {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    bool ok() const noexcept { return failures == 0; }
};

/// Exhaustive check over a split signature whose factors `first` and
/// first + 1 form the Segre pair:
///  - pullback is multiplicative on every pair of monomials;
///  - for every monomial Z in the classes of the merged ring and every monomial
///    Y of complementary degree in the split ring,
///    top(Y * pullback(h_merged Z)) = top(Y * h_i * pullback(Z)) + top(Y * h_j * pullback(Z)).
SplittingCheck verify_segre_splitting(const std::vector<unsigned>& split_signature, std::size_t first);

} // namespace rspan
