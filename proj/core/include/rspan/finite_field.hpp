#pragma once

#include <cstdint>
#include <vector>

namespace rspan {

/// GF(p^K) = F_p[t] / (modulus), with table-driven multiplication.
///
/// Elements are encoded as integers in [0, p^K): the residue polynomial
/// c_0 + c_1 t + ... + c_{K-1} t^{K-1} is stored as sum c_i p^i. The prime
/// field is embedded as the constants 0..p-1.
///
/// Nonzero elements are also addressed by discrete logarithm with respect to a
/// fixed generator; sums of elements given by logarithm use Zech logarithms,
/// which is what the torus enumeration runs on.
class FiniteField {
public:
    using Element = std::uint32_t;
    /// Returned by zech() when 1 + g^n = 0.
    static constexpr std::uint32_t zero_log = 0xFFFFFFFFu;

    /// Desk-scale caps: p prime <= 101, 1 <= K <= 6, p^K <= 10^5. The modulus
    /// is the monic irreducible of degree K with the smallest encoding
    /// sum_{i<K} c_i p^i.
    static FiniteField make(unsigned p, unsigned k);

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Coefficients c_0..c_K of the modulus, c_K = 1.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    Element generator() const noexcept { return generator_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;
    /// Image of an integer in the prime field.
    Element from_integer(std::int64_t c) const;

    /// Schoolbook polynomial multiplication modulo (p, modulus); does not touch
    /// the logarithm tables.
    Element mul_reference(Element a, Element b) const;

    std::uint32_t log(Element nonzero) const;
    Element exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
    /// log(1 + g^n), or zero_log.
    std::uint32_t zech(std::uint32_t n) const { return zech_[n]; }

private:
    FiniteField() = default;

    unsigned p_ = 0;
    unsigned k_ = 0;
    std::uint32_t q_ = 0;
    std::vector<unsigned> modulus_;
    Element generator_ = 0;
    std::vector<Element> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

bool is_prime(unsigned p);

} // namespace rspan
