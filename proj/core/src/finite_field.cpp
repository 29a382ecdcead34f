#include "rspan/finite_field.hpp"

#include <string>

#include "rspan/error.hpp"

namespace rspan {

namespace {

using Poly = std::vector<unsigned>; // coefficients, lowest degree first

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// remainder of a modulo the monic polynomial m
Poly poly_mod(Poly a, const Poly& m, unsigned p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
        trim(a);
    }
    return a;
}

Poly decode(std::uint32_t code, unsigned p, unsigned len)
{
    Poly a(len);
    for (unsigned i = 0; i < len; ++i) {
        a[i] = code % p;
        code /= p;
    }
    return a;
}

std::uint32_t encode(const Poly& a, unsigned p)
{
    std::uint32_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        code = code * p + a[i];
    return code;
}

std::uint32_t ipow(unsigned base, unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return static_cast<std::uint32_t>(r);
}

bool irreducible(const Poly& f, unsigned p)
{
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        for (std::uint32_t code = 0; code < ipow(p, d); ++code) {
            Poly g = decode(code, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace

bool is_prime(unsigned p)
{
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

FiniteField FiniteField::make(unsigned p, unsigned k)
{
    if (!is_prime(p))
        fail(ErrorCode::invalid_argument, "finite field: " + std::to_string(p) + " is not prime");
    if (p > 101 || k < 1 || k > 6)
        fail(ErrorCode::cap_exceeded, "finite field: need p <= 101 and 1 <= K <= 6");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i)
        q *= p;
    if (q > 100000)
        fail(ErrorCode::cap_exceeded, "finite field: p^K exceeds 10^5");

    FiniteField f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = static_cast<std::uint32_t>(q);

    for (std::uint32_t code = 0; code < f.q_; ++code) {
        Poly m = decode(code, p, k);
        m.push_back(1);
        if (irreducible(m, p)) {
            f.modulus_ = std::move(m);
            break;
        }
    }
    if (f.modulus_.empty())
        fail(ErrorCode::invariant_breach, "finite field: no irreducible polynomial found");

    const std::uint32_t group = f.q_ - 1;
    const auto factors = prime_factors(group);
    if (group == 1)
        f.generator_ = 1; // F_2
    for (Element g = 2; g < f.q_ && f.generator_ == 0; ++g) {
        bool primitive = true;
        for (auto r : factors) {
            Element x = 1;
            Element base = g;
            for (std::uint32_t e = group / r; e > 0; e >>= 1) {
                if (e & 1U)
                    x = f.mul_reference(x, base);
                base = f.mul_reference(base, base);
            }
            if (x == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            f.generator_ = g;
    }
    if (f.generator_ == 0)
        fail(ErrorCode::invariant_breach, "finite field: no generator found");

    f.exp_.resize(group);
    f.log_.assign(f.q_, zero_log);
    Element x = 1;
    for (std::uint32_t e = 0; e < group; ++e) {
        if (f.log_[x] != zero_log)
            fail(ErrorCode::invariant_breach, "finite field: generator has order below p^K - 1");
        f.exp_[e] = x;
        f.log_[x] = e;
        x = f.mul_reference(x, f.generator_);
    }
    if (x != 1)
        fail(ErrorCode::invariant_breach, "finite field: g^(p^K - 1) != 1");

    f.zech_.resize(group);
    for (std::uint32_t n = 0; n < group; ++n) {
        Element s = f.add(1, f.exp_[n]);
        f.zech_[n] = s == 0 ? zero_log : f.log_[s];
    }
    return f;
}

FiniteField::Element FiniteField::add(Element a, Element b) const
{
    Element out = 0;
    Element scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

FiniteField::Element FiniteField::neg(Element a) const
{
    Element out = 0;
    Element scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const
{
    return add(a, neg(b));
}

FiniteField::Element FiniteField::mul(Element a, Element b) const
{
    if (a == 0 || b == 0)
        return 0;
    std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
    return exp_[e % (q_ - 1)];
}

FiniteField::Element FiniteField::inv(Element a) const
{
    if (a == 0)
        fail(ErrorCode::invalid_argument, "finite field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const
{
    if (a == 0)
        return e == 0 ? 1 : 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Element FiniteField::from_integer(std::int64_t c) const
{
    std::int64_t r = c % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Element>(r);
}

FiniteField::Element FiniteField::mul_reference(Element a, Element b) const
{
    Poly pa = decode(a, p_, k_);
    Poly pb = decode(b, p_, k_);
    Poly prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    return encode(poly_mod(std::move(prod), modulus_, p_), p_);
}

std::uint32_t FiniteField::log(Element nonzero) const
{
    if (nonzero == 0 || nonzero >= q_)
        fail(ErrorCode::invalid_argument, "finite field: log of zero or out-of-range element");
    return log_[nonzero];
}

} // namespace rspan
