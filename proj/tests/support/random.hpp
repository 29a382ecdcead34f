#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "rspan/subspaces.hpp"

namespace rspan::testing {

/// mt19937_64 with a modulo mapping, so streams match on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long long uniform(long long lo, long long hi)
    {
        return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::vector<LatticePoint> points(std::size_t n, std::size_t count, long long lo, long long hi)
    {
        std::set<LatticePoint> s;
        while (s.size() < count) {
            LatticePoint p(n);
            for (std::size_t i = 0; i < n; ++i)
                p[i] = uniform(lo, hi);
            s.insert(p);
        }
        return {s.begin(), s.end()};
    }

    MonomialSubspace support(std::size_t n, std::size_t count, long long lo, long long hi)
    {
        return MonomialSubspace(n, points(n, count, lo, hi));
    }

    /// Redraws until the Newton polytope is full-dimensional.
    MonomialSubspace full_support(std::size_t n, std::size_t min_count, std::size_t max_count, long long lo, long long hi)
    {
        for (;;) {
            const auto count = static_cast<std::size_t>(uniform(static_cast<long long>(min_count), static_cast<long long>(max_count)));
            MonomialSubspace s = support(n, count, lo, hi);
            if (s.newton_polytope().is_full_dimensional())
                return s;
        }
    }

private:
    std::mt19937_64 gen_;
};

inline long long ll(const Integer& v)
{
    return static_cast<long long>(v);
}

inline std::vector<P2> to_p2(const MonomialSubspace& s)
{
    std::vector<P2> out;
    for (const auto& a : s.support())
        out.push_back({ll(a[0]), ll(a[1])});
    return out;
}

inline std::vector<P3> to_p3(const MonomialSubspace& s)
{
    std::vector<P3> out;
    for (const auto& a : s.support())
        out.push_back({ll(a[0]), ll(a[1]), ll(a[2])});
    return out;
}

} // namespace rspan::testing
