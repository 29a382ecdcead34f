#include "rspan/grothendieck.hpp"

#include <string>
#include <vector>

#include "rspan/error.hpp"

namespace rspan {

VirtualClass::VirtualClass(LatticePolytope plus, LatticePolytope minus)
    : plus_(std::move(plus)), minus_(std::move(minus))
{
    if (plus_.ambient_dim() != minus_.ambient_dim())
        fail(ErrorCode::dimension_mismatch, "virtual class: plus and minus parts of different dimensions");
}

VirtualClass VirtualClass::identity(std::size_t dim)
{
    auto o = LatticePolytope::point(origin(dim));
    return VirtualClass(o, o);
}

VirtualClass VirtualClass::of(LatticePolytope p)
{
    auto o = LatticePolytope::point(origin(p.ambient_dim()));
    return VirtualClass(std::move(p), std::move(o));
}

VirtualClass class_of(const MonomialSubspace& l)
{
    return VirtualClass::of(l.newton_polytope());
}

VirtualClass multiply(const VirtualClass& a, const VirtualClass& b)
{
    if (a.dim() != b.dim())
        fail(ErrorCode::dimension_mismatch, "multiply: classes of different dimensions");
    return VirtualClass(minkowski_sum(a.plus(), b.plus()), minkowski_sum(a.minus(), b.minus()));
}

VirtualClass inverse(const VirtualClass& a)
{
    return VirtualClass(a.minus(), a.plus());
}

bool equals(const VirtualClass& a, const VirtualClass& b)
{
    if (a.dim() != b.dim())
        fail(ErrorCode::dimension_mismatch, "equals: classes of different dimensions");
    return minkowski_sum(a.plus(), b.minus()) == minkowski_sum(b.plus(), a.minus());
}

Integer index(std::span<const VirtualClass> classes)
{
    if (classes.empty())
        fail(ErrorCode::invalid_argument, "index: no classes given");
    const std::size_t n = classes.front().dim();
    if (classes.size() != n)
        fail(ErrorCode::invalid_argument,
             "index: need exactly " + std::to_string(n) + " classes, got " + std::to_string(classes.size()));
    for (const auto& c : classes)
        if (c.dim() != n)
            fail(ErrorCode::dimension_mismatch, "index: classes of different dimensions");

    Integer total = 0;
    std::vector<LatticePolytope> chosen;
    chosen.reserve(n);
    for (std::size_t pattern = 0; pattern < (std::size_t{1} << n); ++pattern) {
        chosen.clear();
        int minus_count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool take_minus = (pattern >> i) & 1U;
            if (take_minus) {
                chosen.push_back(classes[i].minus());
                ++minus_count;
            } else {
                chosen.push_back(classes[i].plus());
            }
        }
        Integer mv = mixed_volume(chosen);
        if (minus_count % 2 == 0)
            total += mv;
        else
            total -= mv;
    }
    return total;
}

} // namespace rspan
