#include <doctest.h>

#include "rspan/error.hpp"
#include "rspan/finite_field.hpp"

using namespace rspan;

TEST_CASE("field construction examples")
{
    auto f7 = FiniteField::make(7, 1);
    CHECK(f7.order() == 7);
    CHECK((f7.modulus() == std::vector<unsigned>{0, 1}));

    auto f4 = FiniteField::make(2, 2);
    CHECK((f4.modulus() == std::vector<unsigned>{1, 1, 1}));

    auto f9 = FiniteField::make(3, 2);
    for (FiniteField::Element x = 1; x < 9; ++x)
        CHECK(f9.pow(x, 8) == 1);
}

TEST_CASE("field caps and argument checks")
{
    CHECK_THROWS_AS(FiniteField::make(9, 1), Error);
    CHECK_THROWS_AS(FiniteField::make(103, 1), Error);
    CHECK_THROWS_AS(FiniteField::make(7, 7), Error);
    CHECK_THROWS_AS(FiniteField::make(101, 3), Error);
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("table multiplication agrees with schoolbook multiplication")
{
    for (auto [p, k] : {std::pair{2u, 1u}, {2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {11u, 2u}}) {
        auto f = FiniteField::make(p, k);
        for (FiniteField::Element a = 0; a < f.order(); ++a)
            for (FiniteField::Element b = 0; b < f.order(); b += 3)
                CHECK(f.mul(a, b) == f.mul_reference(a, b));
    }
}

TEST_CASE("field axioms on GF(49)")
{
    auto f = FiniteField::make(7, 2);
    for (FiniteField::Element a = 1; a < f.order(); ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.add(a, f.neg(a)) == 0);
        CHECK(f.exp(f.log(a)) == a);
    }
    for (FiniteField::Element a = 0; a < f.order(); a += 5)
        for (FiniteField::Element b = 0; b < f.order(); b += 7)
            for (FiniteField::Element c = 0; c < f.order(); c += 11)
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
}

TEST_CASE("zech logarithms")
{
    auto f = FiniteField::make(5, 2);
    for (std::uint32_t n = 0; n + 1 < f.order(); ++n) {
        const auto s = f.add(1, f.exp(n));
        if (s == 0)
            CHECK(f.zech(n) == FiniteField::zero_log);
        else
            CHECK(f.exp(f.zech(n)) == s);
    }
}

TEST_CASE("generator has full order")
{
    auto f = FiniteField::make(3, 4);
    FiniteField::Element x = 1;
    for (std::uint32_t e = 1; e < f.order() - 1; ++e) {
        x = f.mul_reference(x, f.generator());
        CHECK(x != 1);
    }
}
