#include "rspan/chow_formal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rspan/error.hpp"

namespace rspan {

namespace {

void require_signature(const std::vector<unsigned>& sig)
{
    if (sig.empty())
        fail(ErrorCode::invalid_argument, "chow ring: empty signature");
    std::uint64_t size = 1;
    for (auto n : sig) {
        if (n == 0)
            fail(ErrorCode::invalid_argument, "chow ring: factor dimensions must be positive");
        size *= n + 1;
        if (size > (1u << 20))
            fail(ErrorCode::cap_exceeded, "chow ring: more than 2^20 monomials");
    }
}

void require_same(const ChowClass& a, const ChowClass& b)
{
    if (a.signature() != b.signature())
        fail(ErrorCode::dimension_mismatch, "chow ring: signature mismatch");
}

unsigned degree(const std::vector<unsigned>& e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

} // namespace

ChowClass::ChowClass(std::vector<unsigned> signature) : signature_(std::move(signature))
{
    require_signature(signature_);
    std::size_t size = 1;
    for (auto n : signature_)
        size *= n + 1;
    coeffs_.assign(size, Integer(0));
}

ChowClass ChowClass::one(std::vector<unsigned> signature)
{
    ChowClass c(std::move(signature));
    c.coeffs_[0] = 1;
    return c;
}

ChowClass ChowClass::hyperplane(std::vector<unsigned> signature, std::size_t i)
{
    if (i >= signature.size())
        fail(ErrorCode::invalid_argument, "chow ring: hyperplane index out of range");
    std::vector<unsigned> e(signature.size(), 0);
    e[i] = 1;
    return monomial(std::move(signature), e);
}

ChowClass ChowClass::monomial(std::vector<unsigned> signature, const std::vector<unsigned>& exponents)
{
    ChowClass c(std::move(signature));
    c.set_coefficient(exponents, 1);
    return c;
}

unsigned ChowClass::dimension() const
{
    return degree(signature_);
}

std::size_t ChowClass::index_of(const std::vector<unsigned>& e) const
{
    std::size_t idx = 0;
    std::size_t scale = 1;
    for (std::size_t i = 0; i < signature_.size(); ++i) {
        idx += e[i] * scale;
        scale *= signature_[i] + 1;
    }
    return idx;
}

std::vector<unsigned> ChowClass::exponents_of(std::size_t index) const
{
    std::vector<unsigned> e(signature_.size());
    for (std::size_t i = 0; i < signature_.size(); ++i) {
        e[i] = static_cast<unsigned>(index % (signature_[i] + 1));
        index /= signature_[i] + 1;
    }
    return e;
}

Integer ChowClass::coefficient(const std::vector<unsigned>& exponents) const
{
    if (exponents.size() != signature_.size())
        fail(ErrorCode::dimension_mismatch, "chow ring: exponent vector of wrong length");
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > signature_[i])
            return 0;
    return coeffs_[index_of(exponents)];
}

void ChowClass::set_coefficient(const std::vector<unsigned>& exponents, Integer c)
{
    if (exponents.size() != signature_.size())
        fail(ErrorCode::dimension_mismatch, "chow ring: exponent vector of wrong length");
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > signature_[i])
            return;
    coeffs_[index_of(exponents)] = std::move(c);
}

bool ChowClass::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

Integer ChowClass::top_degree() const
{
    return coeffs_.back();
}

ChowClass& ChowClass::operator+=(const ChowClass& o)
{
    require_same(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o)
{
    require_same(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b)
{
    require_same(a, b);
    ChowClass out(a.signature_);
    const std::size_t k = a.signature_.size();
    struct Term {
        std::size_t index;
        std::vector<unsigned> exponents;
    };
    auto terms = [](const ChowClass& x) {
        std::vector<Term> t;
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
            if (x.coeffs_[i] != 0)
                t.push_back({i, x.exponents_of(i)});
        return t;
    };
    const auto ta = terms(a);
    const auto tb = terms(b);
    // mixed-radix indices add when no exponent overflows
    for (const auto& x : ta)
        for (const auto& y : tb) {
            bool alive = true;
            for (std::size_t f = 0; f < k && alive; ++f)
                alive = x.exponents[f] + y.exponents[f] <= a.signature_[f];
            if (alive)
                out.coeffs_[x.index + y.index] += a.coeffs_[x.index] * b.coeffs_[y.index];
        }
    return out;
}

ChowClass operator*(const Integer& k, ChowClass a)
{
    for (auto& c : a.coeffs_)
        c *= k;
    return a;
}

ChowClass ChowClass::pow(unsigned e) const
{
    ChowClass out = one(signature_);
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

std::vector<std::vector<unsigned>> ChowClass::monomials() const
{
    std::vector<std::vector<unsigned>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.push_back(exponents_of(i));
    return out;
}

unsigned segre_dimension(unsigned ni, unsigned nj)
{
    return ni * nj + ni + nj;
}

ChowClass segre_pullback(const ChowClass& x, std::size_t merged, unsigned ni, unsigned nj)
{
    const auto& sig = x.signature();
    if (merged >= sig.size())
        fail(ErrorCode::invalid_argument, "segre pullback: factor index out of range");
    if (ni == 0 || nj == 0 || sig[merged] != segre_dimension(ni, nj))
        fail(ErrorCode::dimension_mismatch,
             "segre pullback: factor " + std::to_string(merged) + " has dimension " + std::to_string(sig[merged]) +
                 ", expected " + std::to_string(segre_dimension(ni, nj)));

    std::vector<unsigned> split(sig.begin(), sig.begin() + static_cast<std::ptrdiff_t>(merged));
    split.push_back(ni);
    split.push_back(nj);
    split.insert(split.end(), sig.begin() + static_cast<std::ptrdiff_t>(merged) + 1, sig.end());

    const ChowClass h = ChowClass::hyperplane(split, merged) + ChowClass::hyperplane(split, merged + 1);
    std::vector<ChowClass> h_pow{ChowClass::one(split)};
    for (unsigned e = 1; e <= sig[merged]; ++e)
        h_pow.push_back(h_pow.back() * h);
    ChowClass out(split);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        const Integer& c = x.coeffs_[i];
        if (c == 0)
            continue;
        const auto e = x.exponents_of(i);
        std::vector<unsigned> rest(split.size(), 0);
        for (std::size_t f = 0, g = 0; f < sig.size(); ++f, ++g) {
            if (f == merged) {
                ++g;
                continue;
            }
            rest[g] = e[f];
        }
        out += c * (ChowClass::monomial(split, rest) * h_pow[e[merged]]);
    }
    return out;
}

SplittingCheck verify_segre_splitting(const std::vector<unsigned>& split_signature, std::size_t first)
{
    require_signature(split_signature);
    if (first + 1 >= split_signature.size())
        fail(ErrorCode::invalid_argument, "segre splitting: pair index out of range");
    const unsigned ni = split_signature[first];
    const unsigned nj = split_signature[first + 1];

    std::vector<unsigned> merged_sig(split_signature.begin(), split_signature.begin() + static_cast<std::ptrdiff_t>(first));
    merged_sig.push_back(segre_dimension(ni, nj));
    merged_sig.insert(merged_sig.end(), split_signature.begin() + static_cast<std::ptrdiff_t>(first) + 2,
                      split_signature.end());

    SplittingCheck check;
    const ChowClass probe(merged_sig);
    const auto merged_monomials = probe.monomials();
    const ChowClass split_probe(split_signature);
    const auto split_monomials = split_probe.monomials();
    const unsigned top = split_probe.dimension();

    // pullbacks of all monomials, computed once
    std::vector<ChowClass> pulled;
    for (const auto& e : merged_monomials)
        pulled.push_back(segre_pullback(ChowClass::monomial(merged_sig, e), first, ni, nj));

    // multiplicativity on pairs of monomials whose product survives in the split ring;
    // the product of two monomials is a monomial or zero, so its pullback is cached
    const ChowClass zero(split_signature);
    for (std::size_t a = 0; a < merged_monomials.size(); ++a)
        for (std::size_t b = a; b < merged_monomials.size(); ++b) {
            if (degree(merged_monomials[a]) + degree(merged_monomials[b]) > top)
                continue;
            // monomials come in mixed-radix index order
            std::size_t index = 0;
            std::size_t scale = 1;
            bool alive = true;
            for (std::size_t f = 0; f < merged_sig.size(); ++f) {
                const unsigned e = merged_monomials[a][f] + merged_monomials[b][f];
                alive = alive && e <= merged_sig[f];
                index += e * scale;
                scale *= merged_sig[f] + 1;
            }
            const ChowClass& lhs = alive ? pulled[index] : zero;
            ++check.cases;
            if (!(lhs == pulled[a] * pulled[b]))
                ++check.failures;
        }

    // pairing with a monomial y picks the coefficient of the complementary monomial
    auto paired = [&](const std::vector<unsigned>& y, const ChowClass& x) {
        std::vector<unsigned> c(split_signature.size());
        for (std::size_t f = 0; f < c.size(); ++f)
            c[f] = split_signature[f] - y[f];
        return x.coefficient(c);
    };
    const ChowClass hm = ChowClass::hyperplane(merged_sig, first);
    const ChowClass hi = ChowClass::hyperplane(split_signature, first);
    const ChowClass hj = ChowClass::hyperplane(split_signature, first + 1);
    for (std::size_t z = 0; z < merged_monomials.size(); ++z) {
        const unsigned dz = degree(merged_monomials[z]);
        if (dz + 1 > top)
            continue;
        const ChowClass lhs = segre_pullback(hm * ChowClass::monomial(merged_sig, merged_monomials[z]), first, ni, nj);
        const ChowClass rhs_i = hi * pulled[z];
        const ChowClass rhs_j = hj * pulled[z];
        for (const auto& y : split_monomials) {
            if (degree(y) + dz + 1 != top)
                continue;
            ++check.cases;
            if (paired(y, lhs) != paired(y, rhs_i) + paired(y, rhs_j))
                ++check.failures;
        }
    }
    return check;
}

} // namespace rspan
