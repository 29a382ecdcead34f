#include "rspan/subspaces.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rspan/error.hpp"
#include "rspan/integer_linalg.hpp"

namespace rspan {

MonomialSubspace::MonomialSubspace(std::size_t dim, std::vector<LatticePoint> support)
    : dim_(dim), support_(std::move(support))
{
    if (dim_ == 0)
        fail(ErrorCode::invalid_argument, "subspace: ambient dimension must be at least 1");
    if (support_.empty())
        fail(ErrorCode::invalid_argument, "subspace: support must be nonempty");
    require_dim(support_, dim_, "subspace");
    canonicalize(support_);
}

MonomialSubspace MonomialSubspace::unit(std::size_t dim)
{
    return MonomialSubspace(dim, {origin(dim)});
}

bool MonomialSubspace::contains(const LatticePoint& a) const
{
    return std::binary_search(support_.begin(), support_.end(), a);
}

LatticePolytope MonomialSubspace::newton_polytope() const
{
    return convex_hull(support_);
}

MonomialSubspace product(const MonomialSubspace& l, const MonomialSubspace& m)
{
    if (l.dim() != m.dim())
        fail(ErrorCode::dimension_mismatch, "product: subspaces of different dimensions");
    std::vector<LatticePoint> sums;
    sums.reserve(l.support().size() * m.support().size());
    for (const auto& a : l.support())
        for (const auto& b : m.support())
            sums.push_back(a + b);
    return MonomialSubspace(l.dim(), std::move(sums));
}

MonomialSubspace power(const MonomialSubspace& l, unsigned k)
{
    MonomialSubspace out = MonomialSubspace::unit(l.dim());
    for (unsigned i = 0; i < k; ++i)
        out = product(out, l);
    return out;
}

MonomialSubspace completion(const MonomialSubspace& l)
{
    return MonomialSubspace(l.dim(), lattice_points(l.newton_polytope()));
}

bool IntegralityCertificate::verify(const MonomialSubspace& l) const
{
    if (degree == 0 || decomposition.size() != degree || exponent.dim() != l.dim())
        return false;
    LatticePoint sum = origin(l.dim());
    for (const auto& a : decomposition) {
        if (!l.contains(a))
            return false;
        sum += a;
    }
    return sum == Integer(degree) * exponent;
}

std::optional<IntegralityCertificate> is_integral(const LatticePoint& b, const MonomialSubspace& l, unsigned q_max)
{
    if (b.dim() != l.dim())
        fail(ErrorCode::dimension_mismatch, "is_integral: exponent of wrong dimension");
    if (q_max == 0)
        fail(ErrorCode::invalid_argument, "is_integral: q_max must be positive");

    // levels[q-1] maps each point of the q-fold sumset to the last summand used
    std::vector<std::map<LatticePoint, LatticePoint>> levels;
    levels.emplace_back();
    for (const auto& a : l.support())
        levels.back().emplace(a, a);

    for (unsigned q = 1; q <= q_max; ++q) {
        if (q > 1) {
            std::map<LatticePoint, LatticePoint> next;
            for (const auto& [point, last] : levels.back())
                for (const auto& a : l.support())
                    next.try_emplace(point + a, a);
            levels.push_back(std::move(next));
        }
        LatticePoint target = Integer(q) * b;
        if (levels.back().count(target) == 0)
            continue;

        IntegralityCertificate cert{b, q, {}};
        LatticePoint cur = target;
        for (unsigned level = q; level >= 1; --level) {
            const LatticePoint& a = levels[level - 1].at(cur);
            cert.decomposition.push_back(a);
            cur -= a;
        }
        std::sort(cert.decomposition.begin(), cert.decomposition.end());
        return cert;
    }
    return std::nullopt;
}

bool equivalent(const MonomialSubspace& l, const MonomialSubspace& m)
{
    if (l.dim() != m.dim())
        fail(ErrorCode::dimension_mismatch, "equivalent: subspaces of different dimensions");
    return l.newton_polytope() == m.newton_polytope();
}

EquivalenceResult equivalent_with_witness(const MonomialSubspace& l, const MonomialSubspace& m, unsigned k_max)
{
    EquivalenceResult out;
    out.equivalent = equivalent(l, m);
    if (!out.equivalent)
        return out;
    out.witness_status = WitnessStatus::inconclusive;
    const MonomialSubspace lm = product(l, m);
    MonomialSubspace lm_power = lm;
    for (unsigned k = 1; k <= k_max; ++k) {
        if (k > 1)
            lm_power = product(lm_power, lm);
        MonomialSubspace n = completion(lm_power);
        if (product(l, n) == product(m, n)) {
            out.witness_status = WitnessStatus::found;
            out.witness = std::move(n);
            out.witness_power = k;
            break;
        }
    }
    return out;
}

LatticeIndex kodaira_lattice_index(const MonomialSubspace& l)
{
    std::vector<LatticePoint> diffs;
    for (std::size_t i = 1; i < l.support().size(); ++i)
        diffs.push_back(l.support()[i] - l.support()[0]);
    auto idx = linalg::lattice_index(diffs, l.dim());
    return idx ? LatticeIndex::finite(*idx) : LatticeIndex::infinite();
}

DegreeDecomposition degree_decomposition(const MonomialSubspace& l)
{
    const LatticePolytope p = l.newton_polytope();
    std::vector<LatticePolytope> copies(l.dim(), p);
    DegreeDecomposition out{mixed_volume(copies), kodaira_lattice_index(l), Rational(0)};
    if (out.mapping_degree.is_finite()) {
        out.image_degree = Rational(out.index, out.mapping_degree.value());
        if (denominator(out.image_degree) != 1 || out.image_degree <= 0)
            fail(ErrorCode::invariant_breach, "degree_decomposition: index " + out.index.str() +
                                                  " is not a positive multiple of the mapping degree " +
                                                  out.mapping_degree.value().str());
    } else if (out.index != 0) {
        fail(ErrorCode::invariant_breach, "degree_decomposition: nonzero index for a degenerate Kodaira image");
    }
    return out;
}

} // namespace rspan
