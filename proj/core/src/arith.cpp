#include "rspan/arith.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <boost/integer/common_factor_rt.hpp>

#include "rspan/error.hpp"

namespace rspan {

bool LatticePoint::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other)
{
    if (other.dim() != dim())
        fail(ErrorCode::dimension_mismatch, "point addition: dimensions differ");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other)
{
    if (other.dim() != dim())
        fail(ErrorCode::dimension_mismatch, "point subtraction: dimensions differ");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

LatticePoint& LatticePoint::operator*=(const Integer& k)
{
    for (auto& c : coords_)
        c *= k;
    return *this;
}

bool operator<(const LatticePoint& a, const LatticePoint& b)
{
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::string LatticePoint::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p)
{
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i)
            os << ',';
        os << p[i];
    }
    return os << ')';
}

Integer dot(const LatticePoint& a, const LatticePoint& b)
{
    if (a.dim() != b.dim())
        fail(ErrorCode::dimension_mismatch, "dot product: dimensions differ");
    Integer s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        s += a[i] * b[i];
    return s;
}

LatticePoint primitive(LatticePoint v)
{
    Integer g = 0;
    for (const auto& c : v.coords())
        g = boost::integer::gcd(g, c);
    if (g > 1)
        for (std::size_t i = 0; i < v.dim(); ++i)
            v[i] /= g;
    return v;
}

void canonicalize(std::vector<LatticePoint>& points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

void require_dim(std::span<const LatticePoint> points, std::size_t dim, const char* what)
{
    for (const auto& p : points)
        if (p.dim() != dim)
            fail(ErrorCode::dimension_mismatch,
                 std::string(what) + ": point " + p.to_string() + " is not of dimension " + std::to_string(dim));
}

LatticePoint origin(std::size_t dim)
{
    return LatticePoint(dim);
}

LatticePoint unit_vector(std::size_t dim, std::size_t i)
{
    LatticePoint e(dim);
    e[i] = 1;
    return e;
}

Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::int64_t to_int64(const Integer& v, const char* what)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        fail(ErrorCode::cap_exceeded, std::string(what) + ": value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

} // namespace rspan
