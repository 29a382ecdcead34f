#include "rspan/integer_linalg.hpp"

#include <utility>

#include <boost/integer/common_factor_rt.hpp>

#include "rspan/error.hpp"

namespace rspan::linalg {

Integer determinant(std::span<const LatticePoint> rows)
{
    const std::size_t n = rows.size();
    if (n == 0)
        return 1;
    std::vector<std::vector<Integer>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].dim() != n)
            fail(ErrorCode::dimension_mismatch, "determinant: matrix is not square");
        m[i] = rows[i].coords();
    }

    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m[swap_with][k] == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            std::swap(m[k], m[swap_with]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<LatticePoint> echelon_form(std::span<const LatticePoint> rows, std::size_t dim)
{
    std::vector<LatticePoint> m(rows.begin(), rows.end());
    for (const auto& r : m)
        if (r.dim() != dim)
            fail(ErrorCode::dimension_mismatch, "echelon_form: row of wrong dimension");

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < dim && pivot_row < m.size(); ++col) {
        for (;;) {
            // smallest nonzero |entry| in this column becomes the pivot
            std::size_t best = m.size();
            for (std::size_t i = pivot_row; i < m.size(); ++i)
                if (m[i][col] != 0 && (best == m.size() || abs(m[i][col]) < abs(m[best][col])))
                    best = i;
            if (best == m.size())
                break;
            std::swap(m[pivot_row], m[best]);
            bool reduced_all = true;
            for (std::size_t i = pivot_row + 1; i < m.size(); ++i) {
                if (m[i][col] == 0)
                    continue;
                Integer q = m[i][col] / m[pivot_row][col];
                m[i] -= q * m[pivot_row];
                if (m[i][col] != 0)
                    reduced_all = false;
            }
            if (reduced_all)
                break;
        }
        if (m[pivot_row][col] == 0)
            continue;
        if (m[pivot_row][col] < 0)
            m[pivot_row] = -m[pivot_row];
        ++pivot_row;
    }
    m.resize(pivot_row);
    return m;
}

std::size_t rank(std::span<const LatticePoint> rows)
{
    if (rows.empty())
        return 0;
    return echelon_form(rows, rows.front().dim()).size();
}

LatticePoint cross(std::span<const LatticePoint> rows, std::size_t dim)
{
    if (rows.size() + 1 != dim)
        fail(ErrorCode::dimension_mismatch, "cross: need exactly dim-1 rows");
    LatticePoint out(dim);
    std::vector<LatticePoint> minor(rows.size(), LatticePoint(dim - 1));
    for (std::size_t skip = 0; skip < dim; ++skip) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::size_t c2 = 0;
            for (std::size_t c = 0; c < dim; ++c)
                if (c != skip)
                    minor[r][c2++] = rows[r][c];
        }
        Integer d = determinant(minor);
        out[skip] = (skip % 2 == 0) ? d : Integer(-d);
    }
    return out;
}

std::vector<LatticePoint> kernel_basis(std::span<const LatticePoint> rows, std::size_t dim)
{
    // reduced row echelon form over Q
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.dim() != dim)
            fail(ErrorCode::dimension_mismatch, "kernel_basis: row of wrong dimension");
        std::vector<Rational> row(dim);
        for (std::size_t c = 0; c < dim; ++c)
            row[c] = r[c];
        m.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < dim && pr < m.size(); ++col) {
        std::size_t sel = pr;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[pr], m[sel]);
        Rational inv = 1 / m[pr][col];
        for (auto& x : m[pr])
            x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == pr || m[i][col] == 0)
                continue;
            Rational f = m[i][col];
            for (std::size_t c = 0; c < dim; ++c)
                m[i][c] -= f * m[pr][c];
        }
        pivot_cols.push_back(col);
        ++pr;
    }

    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;

    std::vector<LatticePoint> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(dim);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -m[i][free];
        Integer l = 1;
        for (const auto& x : v)
            l = boost::integer::lcm(l, denominator(x));
        LatticePoint w(dim);
        for (std::size_t c = 0; c < dim; ++c)
            w[c] = numerator(Rational(v[c] * l));
        basis.push_back(primitive(std::move(w)));
    }
    return basis;
}

std::optional<Integer> lattice_index(std::span<const LatticePoint> rows, std::size_t dim)
{
    auto e = echelon_form(rows, dim);
    if (e.size() < dim)
        return std::nullopt;
    Integer idx = 1;
    for (std::size_t i = 0; i < dim; ++i)
        idx *= e[i][i];
    return abs(idx);
}

} // namespace rspan::linalg
