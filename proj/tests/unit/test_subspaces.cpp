#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random.hpp"
#include "rspan/error.hpp"
#include "rspan/subspaces.hpp"

using namespace rspan;
using testing::sub;

TEST_CASE("subspace construction")
{
    CHECK_THROWS_AS((MonomialSubspace(2, {})), Error);
    auto l = sub({{1, 0}, {0, 0}, {1, 0}});
    CHECK((l.support() == std::vector<LatticePoint>{{0, 0}, {1, 0}}));
    CHECK((MonomialSubspace::unit(3).support() == std::vector<LatticePoint>{{0, 0, 0}}));
    CHECK_THROWS_AS((MonomialSubspace(2, {{0, 0, 0}})), Error);
}

TEST_CASE("product examples")
{
    CHECK(product(sub({{0}, {1}}), sub({{0}, {1}})) == sub({{0}, {1}, {2}}));
    auto l = testing::square2();
    CHECK(product(l, MonomialSubspace::unit(2)) == l);
    CHECK(product(sub({{0, 0}, {1, 0}}), sub({{0, 0}, {0, 1}})) == testing::square2());
    CHECK(power(sub({{0}, {1}}), 3) == sub({{0}, {1}, {2}, {3}}));
}

TEST_CASE("completion examples")
{
    CHECK(completion(sub({{0}, {3}})) == sub({{0}, {1}, {2}, {3}}));
    CHECK(completion(testing::wide_triangle()) == sub({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}}));
}

TEST_CASE("integrality examples")
{
    auto c = is_integral({1}, sub({{0}, {2}}));
    REQUIRE(c);
    CHECK(c->degree == 2);
    CHECK(c->verify(sub({{0}, {2}})));

    c = is_integral({1, 0}, testing::wide_triangle());
    REQUIRE(c);
    CHECK(c->degree == 2);
    CHECK((c->decomposition == std::vector<LatticePoint>{{0, 0}, {2, 0}}));

    CHECK_FALSE(is_integral({4}, sub({{0}, {2}}), 40));
}

TEST_CASE("certificates are verified by addition")
{
    auto l = sub({{0}, {2}});
    IntegralityCertificate bogus{{1}, 2, {{0}, {0}}};
    CHECK_FALSE(bogus.verify(l));
}

TEST_CASE("equivalence examples")
{
    auto r = equivalent_with_witness(sub({{0}, {2}}), sub({{0}, {1}, {2}}));
    CHECK(r.equivalent);
    REQUIRE(r.witness_status == WitnessStatus::found);
    REQUIRE(r.witness);
    CHECK(product(sub({{0}, {2}}), *r.witness) == product(sub({{0}, {1}, {2}}), *r.witness));

    CHECK_FALSE(equivalent(sub({{0}, {1}}), sub({{0}, {2}})));
    CHECK(equivalent_with_witness(sub({{0}, {1}}), sub({{0}, {2}})).witness_status == WitnessStatus::not_requested);
}

TEST_CASE("witnesses on random equivalent pairs")
{
    testing::Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
        auto l = rng.support(n, static_cast<std::size_t>(rng.uniform(1, 5)), 0, 4);
        // M keeps the vertices and adds random lattice points of the hull
        auto pts = lattice_points(l.newton_polytope());
        std::vector<LatticePoint> m = l.newton_polytope().vertices();
        for (const auto& p : pts)
            if (rng.uniform(0, 1))
                m.push_back(p);
        auto mm = MonomialSubspace(n, m);
        auto r = equivalent_with_witness(l, mm);
        CHECK(r.equivalent);
        REQUIRE(r.witness);
        CHECK(product(l, *r.witness) == product(mm, *r.witness));
    }
}

TEST_CASE("kodaira lattice index examples")
{
    CHECK(kodaira_lattice_index(testing::simplex2()) == LatticeIndex::finite(1));
    CHECK(kodaira_lattice_index(testing::wide_triangle()) == LatticeIndex::finite(4));
    CHECK_FALSE(kodaira_lattice_index(sub({{0, 0}, {1, 1}})).is_finite());
}

TEST_CASE("kodaira lattice index matches the minors oracle")
{
    testing::Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        auto l = rng.support(n, static_cast<std::size_t>(rng.uniform(1, 5)), -3, 3);
        std::vector<std::vector<long long>> rows;
        for (const auto& a : l.support()) {
            std::vector<long long> r;
            for (std::size_t i = 0; i < n; ++i)
                r.push_back(testing::ll(a[i] - l.support().front()[i]));
            rows.push_back(r);
        }
        const long long expect = testing::minors_gcd_index(rows, n);
        const auto got = kodaira_lattice_index(l);
        if (expect == 0)
            CHECK_FALSE(got.is_finite());
        else
            CHECK((got.is_finite() && got.value() == expect));
    }
}

TEST_CASE("degree decomposition examples")
{
    auto d = degree_decomposition(testing::wide_triangle());
    CHECK(d.index == 4);
    CHECK(d.mapping_degree == LatticeIndex::finite(4));
    CHECK(d.image_degree == 1);

    d = degree_decomposition(testing::square2());
    CHECK(d.index == 2);
    CHECK(d.mapping_degree == LatticeIndex::finite(1));
    CHECK(d.image_degree == 2);

    d = degree_decomposition(sub({{0, 0}, {1, 1}}));
    CHECK(d.index == 0);
    CHECK_FALSE(d.mapping_degree.is_finite());
    CHECK(d.image_degree == 0);
}
