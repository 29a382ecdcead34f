#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rspan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of Z^n; the exponent vector of a Laurent monomial.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::size_t dim) : coords_(dim) {}
    explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticePoint(std::initializer_list<long long> coords)
    {
        coords_.reserve(coords.size());
        for (long long c : coords)
            coords_.emplace_back(c);
    }

    std::size_t dim() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    bool is_zero() const;

    LatticePoint& operator+=(const LatticePoint& other);
    LatticePoint& operator-=(const LatticePoint& other);
    LatticePoint& operator*=(const Integer& k);

    friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
    friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
    friend LatticePoint operator*(const Integer& k, LatticePoint a) { return a *= k; }
    friend LatticePoint operator-(LatticePoint a)
    {
        for (auto& c : a.coords_)
            c = -c;
        return a;
    }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
    /// Lexicographic order; all containers of points in the library are kept in this order.
    friend bool operator<(const LatticePoint& a, const LatticePoint& b);

    std::string to_string() const;

private:
    std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

Integer dot(const LatticePoint& a, const LatticePoint& b);

/// Divides out the gcd of the coordinates. The zero vector is returned unchanged.
LatticePoint primitive(LatticePoint v);

/// Sorts lexicographically and removes duplicates.
void canonicalize(std::vector<LatticePoint>& points);

/// Throws dimension_mismatch unless every point has dimension `dim`.
void require_dim(std::span<const LatticePoint> points, std::size_t dim, const char* what);

LatticePoint origin(std::size_t dim);
LatticePoint unit_vector(std::size_t dim, std::size_t i);

Integer factorial(unsigned n);

/// Converts to int64, throwing cap_exceeded when the value does not fit.
std::int64_t to_int64(const Integer& v, const char* what);

} // namespace rspan
