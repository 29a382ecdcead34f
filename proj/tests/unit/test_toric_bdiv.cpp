#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "random.hpp"
#include "rspan/error.hpp"
#include "rspan/toric_bdiv.hpp"

using namespace rspan;
using testing::sub;

namespace {

ToricModel model_of(const MonomialSubspace& l)
{
    return ToricModel::from_base(l.newton_polytope());
}

// A random integral support function on the model: free values on the rays
// are not always realizable, so draw a combination of base support functions
// of polytopes whose fans the model refines, plus a principal part.
ToricDivisor random_divisor(testing::Rng& rng, const ToricModel& m)
{
    ToricDivisor d = ToricDivisor::principal(m, [&] {
        LatticePoint a(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i)
            a[i] = rng.uniform(-3, 3);
        return a;
    }());
    const ToricDivisor base = ToricDivisor::of_base(m);
    return d + Integer(rng.uniform(-2, 2)) * base;
}

} // namespace

TEST_CASE("model construction")
{
    auto m = model_of(testing::simplex2());
    CHECK(m.cones().size() == 3);
    CHECK(m.rays().size() == 3);
    CHECK_THROWS_AS((ToricModel::from_base(sub({{0, 0}, {1, 1}}).newton_polytope())), Error);
    CHECK_THROWS_AS((ToricModel::from_base(sub({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}).newton_polytope())),
                    Error);
}

TEST_CASE("translated bases give equal fans")
{
    auto p = testing::square2().newton_polytope();
    auto a = ToricModel::from_base(p);
    auto b = ToricModel::from_base(p.translated({5, -2}));
    CHECK(a.same_fan(b));
    CHECK(a.same_fan(ToricModel::from_base(p.dilated(3))));
}

TEST_CASE("cones cover test directions")
{
    testing::Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
        auto m = model_of(rng.full_support(n, n + 1, n + 3, 0, 3));
        for (int d = 0; d < 40; ++d) {
            LatticePoint u(n);
            for (std::size_t i = 0; i < n; ++i)
                u[i] = rng.uniform(-2, 2);
            if (u.is_zero())
                continue;
            std::vector<LatticePoint> one{u};
            CHECK(m.cone_containing(one).has_value());
        }
    }
}

TEST_CASE("domination examples")
{
    auto sq = model_of(testing::square2());
    auto tri = model_of(testing::simplex2());
    CHECK(dominates(sq, sq));
    CHECK_FALSE(dominates(tri, sq));
    auto both = common_refinement(tri, sq);
    CHECK(dominates(both, tri));
    CHECK(dominates(both, sq));
    CHECK(common_refinement(sq, sq).same_fan(sq));
}

TEST_CASE("common refinement is associative up to fan equality")
{
    testing::Rng rng(42);
    for (int t = 0; t < 10; ++t) {
        auto a = model_of(rng.full_support(2, 3, 4, 0, 3));
        auto b = model_of(rng.full_support(2, 3, 4, 0, 3));
        auto c = model_of(rng.full_support(2, 3, 4, 0, 3));
        CHECK(common_refinement(common_refinement(a, b), c).same_fan(common_refinement(a, common_refinement(b, c))));
    }
}

TEST_CASE("divisor of a subspace")
{
    auto d = divisor_of_subspace(testing::simplex2());
    CHECK(d.model().cones().size() == 3);
    CHECK((d.functionals() == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}}));
    CHECK(divisor_of_subspace(testing::wide_triangle()) == divisor_of_subspace(completion(testing::wide_triangle())));
    CHECK_THROWS_AS((divisor_of_subspace(sub({{0, 0}, {2, 2}}))), Error);
}

TEST_CASE("facet agreement is enforced")
{
    auto m = model_of(testing::square2());
    std::vector<LatticePoint> bad(m.cones().size(), LatticePoint{0, 0});
    bad[0] = {5, 7};
    CHECK_THROWS_AS(ToricDivisor(m, bad), Error);
}

TEST_CASE("sections")
{
    auto back = subspace_of_divisor(divisor_of_subspace(testing::wide_triangle()));
    REQUIRE(back);
    CHECK(*back == completion(testing::wide_triangle()));

    auto m = model_of(testing::square2());
    auto p = subspace_of_divisor(ToricDivisor::principal(m, {2, -1}));
    REQUIRE(p);
    CHECK((p->support() == std::vector<LatticePoint>{{2, -1}}));

    // -D_Q has no sections for a full-dimensional Q
    CHECK_FALSE(subspace_of_divisor(Integer(-1) * ToricDivisor::of_base(m)).has_value());
}

TEST_CASE("pullback")
{
    auto d = divisor_of_subspace(testing::square2());
    CHECK(pullback(d, d.model()) == d);
    auto fine = common_refinement(d.model(), model_of(testing::simplex2()));
    auto e = divisor_of_subspace(testing::square2());
    CHECK(pullback(d + e, fine).functionals() == (pullback(d, fine) + pullback(e, fine)).functionals());
    CHECK_THROWS_AS(pullback(divisor_of_subspace(testing::square2()), model_of(testing::simplex2())), Error);
}

TEST_CASE("b-divisor equality")
{
    auto d = divisor_of_subspace(testing::square2());
    auto fine = common_refinement(d.model(), model_of(testing::simplex2()));
    CHECK(bdiv_equal(BDivisor(d), BDivisor(pullback(d, fine))));
    CHECK_FALSE(bdiv_equal(BDivisor(divisor_of_subspace(testing::simplex2())), BDivisor(d)));
    CHECK(bdiv_equal(BDivisor(divisor_of_subspace(testing::wide_triangle())),
                     BDivisor(divisor_of_subspace(completion(testing::wide_triangle())))));
}

TEST_CASE("convexity")
{
    auto m = model_of(testing::square2());
    CHECK(is_strictly_convex(ToricDivisor::of_base(m)));
    CHECK_FALSE(is_strictly_convex(ToricDivisor::zero(m)));
    CHECK_FALSE(is_strictly_convex(Integer(-1) * ToricDivisor::of_base(m)));
    CHECK(is_very_ample_by_sections(ToricDivisor::of_base(m)));
    CHECK_FALSE(is_very_ample_by_sections(Integer(-1) * ToricDivisor::of_base(m)));
}

TEST_CASE("intersection numbers")
{
    std::vector<BDivisor> a{BDivisor(divisor_of_subspace(testing::simplex2())), BDivisor(divisor_of_subspace(testing::simplex2()))};
    CHECK(bdiv_index(a) == 1);
    std::vector<BDivisor> b{BDivisor(divisor_of_subspace(testing::wide_triangle())),
                            BDivisor(divisor_of_subspace(testing::wide_triangle()))};
    CHECK(bdiv_index(b) == 4);

    auto d = divisor_of_subspace(testing::square2());
    auto fine = common_refinement(d.model(), model_of(testing::wide_triangle()));
    std::vector<BDivisor> coarse{BDivisor(d), BDivisor(divisor_of_subspace(testing::simplex2()))};
    std::vector<BDivisor> refined{BDivisor(pullback(d, fine)), BDivisor(divisor_of_subspace(testing::simplex2()))};
    CHECK(bdiv_index(coarse) == bdiv_index(refined));
}

TEST_CASE("principal divisors are numerically trivial")
{
    auto m = model_of(testing::square2());
    std::vector<BDivisor> v{BDivisor(ToricDivisor::principal(m, {3, -1})), BDivisor(divisor_of_subspace(testing::square2()))};
    CHECK(bdiv_index(v) == 0);
}

TEST_CASE("very ample decomposition")
{
    auto m = model_of(testing::square2());
    auto split = decompose_very_ample(BDivisor(ToricDivisor::of_base(m)));
    CHECK(split.multiplier == 0);
    CHECK(split.minus == ToricDivisor::zero(m));

    split = decompose_very_ample(BDivisor(ToricDivisor::principal(m, {1, 2})));
    CHECK(split.multiplier == 1);
    CHECK(split.minus == ToricDivisor::of_base(m));
    CHECK(split.plus == ToricDivisor::principal(m, {1, 2}) + ToricDivisor::of_base(m));

    testing::Rng rng(43);
    for (int t = 0; t < 20; ++t) {
        auto model = model_of(rng.full_support(2, 3, 5, 0, 3));
        auto d = random_divisor(rng, common_refinement(model, model_of(testing::square2())));
        auto s = decompose_very_ample(BDivisor(d));
        CHECK(is_strictly_convex(s.plus));
        if (s.multiplier > 0)
            CHECK(is_strictly_convex(s.minus));
        CHECK(s.plus - s.minus == d);
    }
}

TEST_CASE("roundtrip examples")
{
    std::vector<MonomialSubspace> none;
    auto r = isomorphism_roundtrip(sub({{0}, {2}}), none);
    CHECK(r.ok());

    std::vector<MonomialSubspace> comp{testing::simplex2()};
    r = isomorphism_roundtrip(testing::simplex2(), comp);
    CHECK(r.ok());
    CHECK(r.bdiv_index == 1);
}

TEST_CASE("convexity and the sections criterion agree on the corpus")
{
    std::size_t n = 0;
    for (const auto* c : {&testing::plane_corpus(), &testing::space_corpus()})
        for (const auto& raw : *c)
            for (const auto& s : raw) {
                auto d = divisor_of_subspace(testing::to_subspace(s));
                CHECK(is_strictly_convex(d));
                CHECK(is_very_ample_by_sections(d));
                CHECK(is_strictly_convex(Integer(2) * d) == is_very_ample_by_sections(Integer(2) * d));
                ++n;
            }
    CHECK(n == 75);
}

TEST_CASE("the sections criterion also accepts globally generated divisors")
{
    auto m = model_of(testing::square2());
    auto p = ToricDivisor::principal(m, {1, 2});
    CHECK_FALSE(is_strictly_convex(p));
    CHECK(is_very_ample_by_sections(p));

    auto d = divisor_of_subspace(testing::square2());
    auto fine = pullback(d, common_refinement(d.model(), model_of(testing::simplex2())));
    CHECK_FALSE(is_strictly_convex(fine));
    CHECK(is_very_ample_by_sections(fine));
}
