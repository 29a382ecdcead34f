#include "rspan/toric_bdiv.hpp"

#include <algorithm>
#include <string>

#include "rspan/error.hpp"
#include "rspan/integer_linalg.hpp"

namespace rspan {

namespace {

bool has_ray(const VertexCone& c, const LatticePoint& r)
{
    return std::find(c.rays.begin(), c.rays.end(), r) != c.rays.end();
}

std::vector<LatticePoint> shared_rays(const VertexCone& a, const VertexCone& b)
{
    std::vector<LatticePoint> out;
    for (const auto& r : a.rays)
        if (has_ray(b, r))
            out.push_back(r);
    return out;
}

// Cones sigma, tau meet along a common facet.
bool is_wall(const VertexCone& a, const VertexCone& b, std::size_t n)
{
    const auto s = shared_rays(a, b);
    return linalg::rank(s) + 1 == n;
}

void require_same_base(const ToricDivisor& a, const ToricDivisor& b, const char* what)
{
    if (a.dim() != b.dim())
        fail(ErrorCode::dimension_mismatch, what);
    if (!(a.model().base() == b.model().base()))
        fail(ErrorCode::precondition_violated, std::string(what) + ": divisors live on different models");
}

} // namespace

ToricModel::ToricModel(LatticePolytope base) : base_(std::move(base))
{
    cones_ = base_.normal_cones();
    for (const auto& c : cones_)
        rays_.insert(rays_.end(), c.rays.begin(), c.rays.end());
    canonicalize(rays_);
}

ToricModel ToricModel::from_base(LatticePolytope base)
{
    if (base.ambient_dim() == 0 || base.ambient_dim() > 3)
        fail(ErrorCode::invalid_argument, "toric model: ambient dimension must be 1, 2 or 3");
    if (!base.is_full_dimensional())
        fail(ErrorCode::degenerate_polytope, "toric model: base polytope is not full-dimensional");
    return ToricModel(std::move(base));
}

std::optional<std::size_t> ToricModel::cone_containing(std::span<const LatticePoint> rays) const
{
    for (std::size_t i = 0; i < cones_.size(); ++i) {
        bool all = true;
        for (const auto& r : rays)
            if (!cones_[i].contains(r)) {
                all = false;
                break;
            }
        if (all)
            return i;
    }
    return std::nullopt;
}

bool ToricModel::same_fan(const ToricModel& other) const
{
    return dim() == other.dim() && dominates(*this, other) && dominates(other, *this);
}

ToricDivisor::ToricDivisor(ToricModel model, std::vector<LatticePoint> functionals)
    : model_(std::move(model)), functionals_(std::move(functionals))
{
    const auto& cones = model_.cones();
    if (functionals_.size() != cones.size())
        fail(ErrorCode::invalid_argument, "toric divisor: need one functional per maximal cone");
    require_dim(functionals_, model_.dim(), "toric divisor");
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            for (const auto& r : shared_rays(cones[i], cones[j]))
                if (dot(functionals_[i], r) != dot(functionals_[j], r))
                    fail(ErrorCode::invalid_argument,
                         "toric divisor: functionals disagree on shared ray " + r.to_string());
}

ToricDivisor ToricDivisor::zero(const ToricModel& model)
{
    return principal(model, origin(model.dim()));
}

ToricDivisor ToricDivisor::principal(const ToricModel& model, const LatticePoint& a)
{
    return ToricDivisor(model, std::vector<LatticePoint>(model.cones().size(), a));
}

ToricDivisor ToricDivisor::of_base(const ToricModel& model)
{
    std::vector<LatticePoint> f;
    for (const auto& c : model.cones())
        f.push_back(c.vertex);
    return ToricDivisor(model, std::move(f));
}

Integer ToricDivisor::evaluate(const LatticePoint& u) const
{
    const auto& cones = model_.cones();
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (cones[i].contains(u))
            return dot(functionals_[i], u);
    fail(ErrorCode::invariant_breach, "toric divisor: " + u.to_string() + " lies in no cone");
}

bool ToricDivisor::is_principal() const
{
    return std::all_of(functionals_.begin(), functionals_.end(),
                       [&](const LatticePoint& a) { return a == functionals_.front(); });
}

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b)
{
    require_same_base(a, b, "divisor sum");
    std::vector<LatticePoint> f;
    for (std::size_t i = 0; i < a.functionals_.size(); ++i)
        f.push_back(a.functionals_[i] + b.functionals_[i]);
    return ToricDivisor(a.model_, std::move(f));
}

ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b)
{
    require_same_base(a, b, "divisor difference");
    std::vector<LatticePoint> f;
    for (std::size_t i = 0; i < a.functionals_.size(); ++i)
        f.push_back(a.functionals_[i] - b.functionals_[i]);
    return ToricDivisor(a.model_, std::move(f));
}

ToricDivisor operator*(const Integer& k, const ToricDivisor& d)
{
    std::vector<LatticePoint> f;
    for (const auto& a : d.functionals_)
        f.push_back(k * a);
    return ToricDivisor(d.model_, std::move(f));
}

bool operator==(const ToricDivisor& a, const ToricDivisor& b)
{
    return a.model_.base() == b.model_.base() && a.functionals_ == b.functionals_;
}

bool dominates(const ToricModel& finer, const ToricModel& coarser)
{
    if (finer.dim() != coarser.dim())
        fail(ErrorCode::dimension_mismatch, "dominates: models of different dimensions");
    return refines(finer.base(), coarser.base());
}

ToricModel common_refinement(const ToricModel& a, const ToricModel& b)
{
    if (a.dim() != b.dim())
        fail(ErrorCode::dimension_mismatch, "common refinement: models of different dimensions");
    return ToricModel::from_base(minkowski_sum(a.base(), b.base()));
}

ToricDivisor pullback(const ToricDivisor& d, const ToricModel& finer)
{
    if (!dominates(finer, d.model()))
        fail(ErrorCode::precondition_violated, "pullback: target model does not dominate the source model");
    std::vector<LatticePoint> f;
    for (const auto& tau : finer.cones()) {
        const auto idx = d.model().cone_containing(tau.rays);
        if (!idx)
            fail(ErrorCode::invariant_breach, "pullback: fine cone lies in no coarse cone");
        f.push_back(d.functionals()[*idx]);
    }
    return ToricDivisor(finer, std::move(f));
}

ToricDivisor divisor_of_subspace(const MonomialSubspace& l)
{
    LatticePolytope p = l.newton_polytope();
    if (!p.is_full_dimensional())
        fail(ErrorCode::degenerate_polytope, "divisor of subspace: Newton polytope is not full-dimensional");
    return ToricDivisor::of_base(ToricModel::from_base(std::move(p)));
}

std::optional<MonomialSubspace> subspace_of_divisor(const ToricDivisor& d)
{
    const std::size_t n = d.dim();
    const auto& rays = d.model().rays();
    std::vector<Integer> h;
    for (const auto& r : rays)
        h.push_back(d.evaluate(r));

    // sections lie in the hull of the functionals, hence in their bounding box
    const auto [lo, hi] = convex_hull(d.functionals()).bounding_box();

    std::vector<LatticePoint> sections;
    std::vector<Integer> x(lo.coords());
    for (;;) {
        LatticePoint b(x);
        bool ok = true;
        for (std::size_t j = 0; j < rays.size() && ok; ++j)
            ok = dot(b, rays[j]) >= h[j];
        if (ok)
            sections.push_back(std::move(b));
        std::size_t i = n;
        for (;;) {
            if (i == 0)
                goto done;
            --i;
            if (++x[i] <= hi[i])
                break;
            x[i] = lo[i];
        }
    }
done:
    if (sections.empty())
        return std::nullopt;
    return MonomialSubspace(n, std::move(sections));
}

bool is_strictly_convex(const ToricDivisor& d)
{
    const auto& cones = d.model().cones();
    const std::size_t n = d.dim();
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = 0; j < cones.size(); ++j) {
            if (i == j || !is_wall(cones[i], cones[j], n))
                continue;
            const LatticePoint diff = d.functionals()[j] - d.functionals()[i];
            for (const auto& r : cones[i].rays)
                if (!has_ray(cones[j], r) && dot(diff, r) <= 0)
                    return false;
        }
    return true;
}

bool is_very_ample_by_sections(const ToricDivisor& d)
{
    const auto l = subspace_of_divisor(d);
    if (!l)
        return false;
    const LatticePolytope p = l->newton_polytope();
    const auto& cones = d.model().cones();
    for (std::size_t i = 0; i < cones.size(); ++i) {
        LatticePoint interior(d.dim());
        for (const auto& r : cones[i].rays)
            interior += r;
        const SupportData s = support_data(p, interior);
        if (s.face.vertices().size() != 1)
            return false;
        const LatticePoint& b = s.face.vertices().front();
        // the whole cone must select the same vertex, else the map is not regular here
        for (const auto& r : cones[i].rays)
            if (dot(b, r) != support_data(p, r).value)
                return false;
        if (b != d.functionals()[i])
            return false;
    }
    return true;
}

bool bdiv_equal(const BDivisor& a, const BDivisor& b)
{
    if (a.dim() != b.dim())
        fail(ErrorCode::dimension_mismatch, "bdiv_equal: b-divisors of different dimensions");
    const ToricModel m = common_refinement(a.representative().model(), b.representative().model());
    return pullback(a.representative(), m).functionals() == pullback(b.representative(), m).functionals();
}

VeryAmpleSplit decompose_very_ample(const BDivisor& b)
{
    const ToricDivisor& d = b.representative();
    const ToricDivisor dq = ToricDivisor::of_base(d.model());
    const auto& cones = d.model().cones();
    const std::size_t n = d.dim();

    Integer m = 0;
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = 0; j < cones.size(); ++j) {
            if (i == j || !is_wall(cones[i], cones[j], n))
                continue;
            const LatticePoint db = d.functionals()[j] - d.functionals()[i];
            const LatticePoint dqv = dq.functionals()[j] - dq.functionals()[i];
            for (const auto& r : cones[i].rays) {
                if (has_ray(cones[j], r))
                    continue;
                const Integer slack_b = dot(db, r);
                const Integer slack_q = dot(dqv, r);
                if (slack_q <= 0)
                    fail(ErrorCode::invariant_breach, "decompose: base divisor is not strictly convex");
                if (slack_b > 0)
                    continue;
                // need m * slack_q > -slack_b
                const Integer need = (-slack_b) / slack_q + 1;
                m = std::max(m, need);
            }
        }

    ToricDivisor minus = m * dq;
    ToricDivisor plus = d + minus;
    if (!is_strictly_convex(plus))
        fail(ErrorCode::invariant_breach, "decompose: D + m D_Q is not strictly convex");
    if (m > 0 && !is_strictly_convex(minus))
        fail(ErrorCode::invariant_breach, "decompose: m D_Q is not strictly convex");
    return VeryAmpleSplit{std::move(plus), std::move(minus), m};
}

VirtualClass to_virtual_class(const VeryAmpleSplit& split)
{
    return VirtualClass(convex_hull(split.plus.functionals()), convex_hull(split.minus.functionals()));
}

Integer bdiv_index(std::span<const BDivisor> divisors)
{
    if (divisors.empty())
        fail(ErrorCode::invalid_argument, "bdiv_index: no divisors");
    const std::size_t n = divisors.front().dim();
    if (divisors.size() != n)
        fail(ErrorCode::invalid_argument, "bdiv_index: need exactly n b-divisors in dimension n");
    ToricModel common = divisors.front().representative().model();
    for (const auto& b : divisors) {
        if (b.dim() != n)
            fail(ErrorCode::dimension_mismatch, "bdiv_index: b-divisors of different dimensions");
        common = common_refinement(common, b.representative().model());
    }
    std::vector<VirtualClass> classes;
    for (const auto& b : divisors)
        classes.push_back(to_virtual_class(decompose_very_ample(BDivisor(pullback(b.representative(), common)))));
    return index(classes);
}

RoundtripReport isomorphism_roundtrip(const MonomialSubspace& l, std::span<const MonomialSubspace> companions)
{
    const std::size_t n = l.dim();
    if (companions.size() + 1 != n)
        fail(ErrorCode::invalid_argument, "roundtrip: need n - 1 companion subspaces");

    RoundtripReport out;
    const ToricDivisor d = divisor_of_subspace(l);
    const auto back = subspace_of_divisor(d);
    if (!back)
        fail(ErrorCode::invariant_breach, "roundtrip: divisor of a nonzero subspace has no sections");
    out.contains_source = std::all_of(l.support().begin(), l.support().end(),
                                      [&](const LatticePoint& a) { return back->contains(a); });
    const MonomialSubspace closure = completion(l);
    out.within_completion = std::all_of(back->support().begin(), back->support().end(),
                                        [&](const LatticePoint& a) { return closure.contains(a); });
    out.equivalent_to_source = equivalent(*back, l);

    std::vector<BDivisor> bdivs{BDivisor(d)};
    std::vector<LatticePolytope> hulls{l.newton_polytope()};
    for (const auto& c : companions) {
        if (c.dim() != n)
            fail(ErrorCode::dimension_mismatch, "roundtrip: companion of a different dimension");
        bdivs.emplace_back(divisor_of_subspace(c));
        hulls.push_back(c.newton_polytope());
    }
    out.bdiv_index = bdiv_index(bdivs);
    out.mixed_volume = mixed_volume(hulls);
    return out;
}

} // namespace rspan
