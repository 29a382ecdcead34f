#include "rspan/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "rspan/error.hpp"
#include "rspan/lattice_geometry.hpp"

namespace rspan {

namespace {

std::uint32_t draw_nonzero(std::mt19937_64& gen, unsigned p)
{
    // rejection sampling keeps the draw exactly uniform on 1..p-1
    const std::uint64_t range = p - 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    for (;;) {
        std::uint64_t x = gen();
        if (x < limit)
            return static_cast<std::uint32_t>(1 + x % range);
    }
}

struct PreparedTerm {
    std::uint32_t log_coeff;
    std::vector<std::uint32_t> exponent_mod; // exponents reduced mod p^K - 1
};

using PreparedEquation = std::vector<PreparedTerm>;

std::vector<PreparedEquation> prepare(const SparseSystem& s, const FiniteField& f)
{
    const std::int64_t m = f.order() - 1;
    std::vector<PreparedEquation> out;
    for (const auto& eq : s.equations) {
        PreparedEquation pe;
        for (std::size_t t = 0; t < eq.exponents.size(); ++t) {
            PreparedTerm term{f.log(f.from_integer(eq.coefficients[t])), {}};
            for (std::size_t i = 0; i < s.dim; ++i) {
                std::int64_t e = to_int64(eq.exponents[t][i], "oracle exponent") % m;
                if (e < 0)
                    e += m;
                term.exponent_mod.push_back(static_cast<std::uint32_t>(e));
            }
            pe.push_back(std::move(term));
        }
        out.push_back(std::move(pe));
    }
    // the equation with the fewest terms is the cheapest filter
    std::stable_sort(out.begin(), out.end(),
                     [](const PreparedEquation& a, const PreparedEquation& b) { return a.size() < b.size(); });
    return out;
}

inline std::uint32_t log_sum(std::uint32_t acc, std::uint32_t term, std::uint32_t m, const FiniteField& f)
{
    if (acc == FiniteField::zero_log)
        return term;
    const std::uint32_t d = term >= acc ? term - acc : term + m - acc;
    const std::uint32_t z = f.zech(d);
    if (z == FiniteField::zero_log)
        return FiniteField::zero_log;
    const std::uint64_t s = std::uint64_t{acc} + z;
    return static_cast<std::uint32_t>(s >= m ? s - m : s);
}

// Counts zeros with the first torus coordinate (in log form) in [lo, hi).
// For n = 1 the range applies to the only coordinate.
std::uint64_t count_chunk(const std::vector<PreparedEquation>& eqs, const FiniteField& f, std::size_t n,
                          std::uint32_t lo, std::uint32_t hi)
{
    const std::uint32_t m = f.order() - 1;
    const std::size_t last = n - 1;
    const PreparedEquation& filter = eqs.front();
    const std::size_t nt = filter.size();

    std::vector<std::uint32_t> outer(last, 0);
    if (last > 0)
        outer[0] = lo;
    std::vector<std::uint32_t> cur(nt);
    std::vector<std::uint32_t> step(nt);
    std::vector<std::vector<std::uint32_t>> rest_base(eqs.size());

    std::uint64_t count = 0;
    for (;;) {
        for (std::size_t j = 0; j < eqs.size(); ++j) {
            rest_base[j].resize(eqs[j].size());
            for (std::size_t t = 0; t < eqs[j].size(); ++t) {
                std::uint64_t b = eqs[j][t].log_coeff;
                for (std::size_t i = 0; i < last; ++i)
                    b += std::uint64_t{eqs[j][t].exponent_mod[i]} * outer[i];
                rest_base[j][t] = static_cast<std::uint32_t>(b % m);
            }
        }
        std::uint32_t inner_lo = last == 0 ? lo : 0;
        std::uint32_t inner_hi = last == 0 ? hi : m;
        for (std::size_t t = 0; t < nt; ++t) {
            step[t] = filter[t].exponent_mod[last];
            cur[t] = static_cast<std::uint32_t>((rest_base[0][t] + std::uint64_t{step[t]} * inner_lo) % m);
        }

        for (std::uint32_t e = inner_lo; e < inner_hi; ++e) {
            std::uint32_t acc = FiniteField::zero_log;
            for (std::size_t t = 0; t < nt; ++t) {
                acc = log_sum(acc, cur[t], m, f);
                std::uint32_t next = cur[t] + step[t];
                cur[t] = next >= m ? next - m : next;
            }
            if (acc != FiniteField::zero_log)
                continue;
            bool all_zero = true;
            for (std::size_t j = 1; j < eqs.size() && all_zero; ++j) {
                std::uint32_t a = FiniteField::zero_log;
                for (std::size_t t = 0; t < eqs[j].size(); ++t) {
                    std::uint64_t l = rest_base[j][t] + std::uint64_t{eqs[j][t].exponent_mod[last]} * e;
                    a = log_sum(a, static_cast<std::uint32_t>(l % m), m, f);
                }
                all_zero = a == FiniteField::zero_log;
            }
            if (all_zero)
                ++count;
        }

        // advance the outer odometer; coordinate 0 is confined to [lo, hi)
        std::size_t i = last;
        for (;;) {
            if (i == 0)
                return count;
            --i;
            const std::uint32_t bound = i == 0 ? hi : m;
            if (++outer[i] < bound)
                break;
            if (i == 0)
                return count;
            outer[i] = 0;
        }
    }
}

std::string dump_system(const SparseSystem& s)
{
    std::ostringstream os;
    os << "system (p=" << s.p << ", seed=" << s.seed << "):";
    for (std::size_t j = 0; j < s.equations.size(); ++j) {
        os << "\n  f" << j << " =";
        for (std::size_t t = 0; t < s.equations[j].exponents.size(); ++t)
            os << (t ? " + " : " ") << s.equations[j].coefficients[t] << "*x^" << s.equations[j].exponents[t];
    }
    return os.str();
}

} // namespace

SparseSystem sample_system(std::span<const MonomialSubspace> supports, unsigned p, std::uint64_t seed)
{
    if (supports.empty())
        fail(ErrorCode::invalid_argument, "sample_system: no supports");
    const std::size_t n = supports.front().dim();
    if (supports.size() != n)
        fail(ErrorCode::invalid_argument, "sample_system: need exactly n supports in dimension n");
    for (const auto& s : supports)
        if (s.dim() != n)
            fail(ErrorCode::dimension_mismatch, "sample_system: supports of different dimensions");
    if (!is_prime(p))
        fail(ErrorCode::invalid_argument, "sample_system: p is not prime");

    std::mt19937_64 gen(seed);
    SparseSystem sys{n, p, seed, {}};
    for (const auto& s : supports) {
        SparseEquation eq;
        for (const auto& a : s.support()) {
            eq.exponents.push_back(a);
            eq.coefficients.push_back(draw_nonzero(gen, p));
        }
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

std::uint64_t torus_size(unsigned p, unsigned k, std::size_t dim)
{
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i)
        q *= p;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > enumeration_cap)
            return enumeration_cap + 1;
        total *= q - 1;
    }
    return total;
}

std::uint64_t count_torus_solutions(const SparseSystem& system, unsigned k, unsigned threads)
{
    if (system.equations.size() != system.dim || system.dim == 0)
        fail(ErrorCode::invalid_argument, "count_torus_solutions: need n equations in n variables");
    if (torus_size(system.p, k, system.dim) > enumeration_cap)
        fail(ErrorCode::cap_exceeded, "count_torus_solutions: (p^K - 1)^n exceeds 10^8");
    const FiniteField f = FiniteField::make(system.p, k);
    const auto eqs = prepare(system, f);
    const std::uint32_t m = f.order() - 1;

    threads = std::max(1u, std::min(threads, m));
    if (threads == 1)
        return count_chunk(eqs, f, system.dim, 0, m);

    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t{m} * w / threads);
        const std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t{m} * (w + 1) / threads);
        workers.emplace_back([&, w, lo, hi] { partial[w] = count_chunk(eqs, f, system.dim, lo, hi); });
    }
    for (auto& t : workers)
        t.join();
    std::uint64_t total = 0;
    for (auto c : partial)
        total += c;
    return total;
}

CountReport generic_count(std::span<const MonomialSubspace> supports, unsigned p, unsigned trials, unsigned k_max,
                          std::uint64_t seed, unsigned threads)
{
    if (supports.empty())
        fail(ErrorCode::invalid_argument, "generic_count: no supports");
    const std::size_t n = supports.front().dim();
    if (k_max == 0 || trials == 0)
        fail(ErrorCode::invalid_argument, "generic_count: trials and K_max must be positive");
    for (unsigned k = 1; k <= k_max; ++k) {
        (void)FiniteField::make(p, k); // validates the field caps up front
        if (torus_size(p, k, n) > enumeration_cap)
            fail(ErrorCode::cap_exceeded, "generic_count: (p^K - 1)^n exceeds 10^8 at K = " + std::to_string(k));
    }

    CountReport report;
    report.supports.assign(supports.begin(), supports.end());
    report.p = p;
    report.trials = trials;
    report.k_max = k_max;
    report.seed = seed;

    std::vector<LatticePolytope> hulls;
    for (const auto& s : supports)
        hulls.push_back(s.newton_polytope());
    report.mv_reference = mixed_volume(hulls);

    for (unsigned t = 0; t < trials; ++t) {
        const SparseSystem sys = sample_system(supports, p, seed + t);
        std::vector<std::uint64_t> counts;
        for (unsigned k = 1; k <= k_max; ++k) {
            const std::uint64_t c = count_torus_solutions(sys, k, threads);
            report.enumerated_points += torus_size(p, k, n);
            if (Integer(c) > report.mv_reference) {
                fail(ErrorCode::invariant_breach, "generic_count: " + std::to_string(c) + " torus solutions over F_" +
                                                      std::to_string(p) + "^" + std::to_string(k) +
                                                      " exceed the mixed volume " + report.mv_reference.str() +
                                                      "; " + dump_system(sys));
            }
            counts.push_back(c);
            auto& best = report.counts_by_extension[k];
            best = std::max(best, c);
            report.generic_count = std::max(report.generic_count, c);
        }
        report.trial_counts.push_back(std::move(counts));
    }
    return report;
}

MultiAdditivityReport verify_multiadditivity(const MonomialSubspace& first, const MonomialSubspace& second,
                                             std::span<const MonomialSubspace> rest, unsigned p, unsigned trials,
                                             unsigned k_max, std::uint64_t seed, unsigned threads)
{
    auto with_head = [&](const MonomialSubspace& head) {
        std::vector<MonomialSubspace> v{head};
        v.insert(v.end(), rest.begin(), rest.end());
        return v;
    };
    MultiAdditivityReport out;
    out.product = generic_count(with_head(product(first, second)), p, trials, k_max, seed, threads);
    out.first = generic_count(with_head(first), p, trials, k_max, seed, threads);
    out.second = generic_count(with_head(second), p, trials, k_max, seed, threads);
    out.mv_identity = out.product.mv_reference == out.first.mv_reference + out.second.mv_reference;
    auto saturated = [](const CountReport& r) { return Integer(r.generic_count) == r.mv_reference; };
    out.saturated = saturated(out.product) && saturated(out.first) && saturated(out.second);
    if (out.saturated)
        out.count_identity = out.product.generic_count == out.first.generic_count + out.second.generic_count;
    return out;
}

} // namespace rspan
