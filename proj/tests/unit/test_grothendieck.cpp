#include <doctest.h>

#include "fixtures.hpp"
#include "random.hpp"
#include "rspan/grothendieck.hpp"

using namespace rspan;

namespace {

LatticePolytope poly(testing::Rng& rng, std::size_t n)
{
    return LatticePolytope::hull(rng.points(n, static_cast<std::size_t>(rng.uniform(1, 5)), -3, 3));
}

VirtualClass random_class(testing::Rng& rng, std::size_t n)
{
    return VirtualClass(poly(rng, n), poly(rng, n));
}

} // namespace

TEST_CASE("class of the unit subspace is the identity")
{
    CHECK(equals(class_of(MonomialSubspace::unit(2)), VirtualClass::identity(2)));
}

TEST_CASE("equality examples")
{
    const auto sq = testing::square2().newton_polytope();
    const auto tri = testing::simplex2().newton_polytope();
    CHECK_FALSE(equals(VirtualClass::of(tri), VirtualClass::of(sq)));
    CHECK(equals(VirtualClass(minkowski_sum(sq, tri), tri), VirtualClass::of(sq)));
}

TEST_CASE("index examples")
{
    const auto sq = testing::square2().newton_polytope();
    const auto tri = testing::simplex2().newton_polytope();
    std::vector<VirtualClass> a{class_of(testing::simplex2()), class_of(testing::simplex2())};
    CHECK(index(a) == 1);

    std::vector<VirtualClass> b{VirtualClass::of(sq), VirtualClass::of(sq)};
    std::vector<VirtualClass> c{VirtualClass(minkowski_sum(sq, tri), tri), VirtualClass::of(sq)};
    CHECK(index(b) == 2);
    CHECK(index(c) == 2);

    std::vector<VirtualClass> d{VirtualClass(sq, tri), VirtualClass::of(tri)};
    CHECK(index(d) == 1);
}

TEST_CASE("group laws")
{
    testing::Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        auto x = random_class(rng, n);
        auto y = random_class(rng, n);
        auto z = random_class(rng, n);
        const auto e = VirtualClass::identity(n);
        CHECK(equals(multiply(x, y), multiply(y, x)));
        CHECK(equals(multiply(multiply(x, y), z), multiply(x, multiply(y, z))));
        CHECK(equals(multiply(x, e), x));
        CHECK(equals(multiply(x, inverse(x)), e));
    }
}

TEST_CASE("index is well defined on classes")
{
    testing::Rng rng(32);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
        std::vector<VirtualClass> cs;
        for (std::size_t i = 0; i < n; ++i)
            cs.push_back(random_class(rng, n));
        const Integer base = index(cs);
        const auto r = poly(rng, n);
        auto shifted = cs;
        shifted[0] = VirtualClass(minkowski_sum(cs[0].plus(), r), minkowski_sum(cs[0].minus(), r));
        CHECK(index(shifted) == base);
    }
}

TEST_CASE("index of a class and its inverse cancel")
{
    testing::Rng rng(33);
    for (int t = 0; t < 30; ++t) {
        auto x = random_class(rng, 2);
        auto y = random_class(rng, 2);
        auto c = random_class(rng, 2);
        std::vector<VirtualClass> a{multiply(x, y), c};
        std::vector<VirtualClass> b{x, c};
        std::vector<VirtualClass> d{y, c};
        CHECK(index(a) == index(b) + index(d));
        std::vector<VirtualClass> inv{inverse(x), c};
        CHECK(index(inv) == -index(b));
    }
}
