#ifndef QIDENT_BAILEY_HPP
#define QIDENT_BAILEY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qident/report.hpp"
#include "qident/series.hpp"

namespace qident {

/* The two explicit Bailey pairs driving everything else.
 *
 * PairA lives in base q^2 relative to a = q^2:
 *   beta_n  = q^{-n} / (-q;q)_{2n}
 *   alpha_n = (-1)^n q^{n(n-1)} (1-q^{4n+2})/(1-q^2)
 *             * sum_{i>=0} q^{i(i+1)/2} sum_{2|j|<=i} (-1)^j q^{-j(j-1)+2nj}
 *
 * PairB lives in base q relative to a = q:
 *   beta_n  = (q)_n (-1)^n q^{n(n-1)/2} / (q)_{2n}
 *   alpha_n = (-1)^n q^{n(n-1)/2} (1-q^{2n+1})/(1-q)
 *             * sum_{i>=0} (-1)^i q^{i(3i+1)/2} (1-q^{2i+1})
 *               sum_{|j|<=i} (-1)^j q^{-j(j-1)/2+nj}
 *
 * The pair relation reads, with b the base power (a = q^b),
 *
 *   beta_n = sum_{r=0}^{n} alpha_r / ((q^{2b};q^b)_{n+r} (q^b;q^b)_{n-r}),
 *
 * and the specialized lemma transforms a pair into the series identity
 *
 *   sum_n (q^b;q^b)_n (-1)^n beta_n q^{b n(n+1)/2}
 *     = (1 - q^b) sum_n (-1)^n q^{b n(n+1)/2} alpha_n.
 *
 * alpha_n and the PairA beta_n carry negative exponents, so everything here
 * runs on Laurent windows.  Per term the window floor is -(n^2 + 4): the
 * i-th inner sum bottoms out at n(n-1)/2 + i^2 - ni >= -n^2/4 for PairB and
 * at n(n-1) + u^2 - 2nu >= -n^2 (u = floor(i/2)) for PairA.  A write below
 * the floor throws; it is never dropped.
 */

enum class BaileyPairId { PairA, PairB };

inline long base_power(BaileyPairId id) { return id == BaileyPairId::PairA ? 2 : 1; }

inline const char* pair_name(BaileyPairId id) { return id == BaileyPairId::PairA ? "A" : "B"; }

// beta_n expanded through q^order.
inline SeriesZ beta_explicit(BaileyPairId id, long n, long order)
{
    if (n < 0) throw std::invalid_argument("beta_explicit: n must be >= 0");
    if (id == BaileyPairId::PairA) {
        // q^{-n} / (-q;q)_{2n} on window [-n, order+1)
        auto s = SeriesZ::from_terms({{-n, Bigint(1)}}, -n, order + 1);
        return div_pochhammer(s, {Bigint(-1), 1, 2 * n, 1});
    }
    auto s = pochhammer<Bigint>({Bigint(1), 1, n, 1}, order);
    if (n % 2 != 0) s = -s;
    s = s.shifted(n * (n - 1) / 2).truncated(order + 1);
    return div_pochhammer(s, {Bigint(1), 1, 2 * n, 1});
}

namespace detail {

inline int sign_of_parity(long v) { return (v % 2 == 0) ? +1 : -1; }

struct LaurentAccumulator {
    long lo;
    long order;  // inclusive top exponent
    std::vector<Bigint> c;

    LaurentAccumulator(long lo_, long order_) : lo(lo_), order(order_)
    {
        c.assign(static_cast<size_t>(order - lo + 1), Bigint(0));
    }

    void add(long exponent, int sign)
    {
        if (exponent > order) return;  // truncation
        if (exponent < lo)
            throw std::logic_error("Laurent window underflow: exponent " +
                                   std::to_string(exponent) + " below floor " + std::to_string(lo));
        auto& v = c[static_cast<size_t>(exponent - lo)];
        if (sign > 0)
            v += 1;
        else
            v -= 1;
    }

    SeriesZ take()
    {
        return SeriesZ(lo, order + 1, std::move(c));
    }
};

}  // namespace detail

/* alpha_n expanded through q^order.  The i-loop runs `slack` iterations past
 * its derived termination point; any admissible term found there would change
 * the result, which the pruning-soundness tests assert never happens. */
inline SeriesZ alpha_explicit(BaileyPairId id, long n, long order, long slack = 0)
{
    if (n < 0) throw std::invalid_argument("alpha_explicit: n must be >= 0");
    detail::LaurentAccumulator acc(-(n * n + 4), order);

    long past_end = -1;
    if (id == BaileyPairId::PairA) {
        for (long i = 0;; ++i) {
            const long u = i / 2;
            // minimal exponent of the i-th term, attained at j = -u
            const long mi = n * (n - 1) + i * (i + 1) / 2 - u * (u + 1) - 2 * n * u;
            // monotone from the first even i with u >= n onwards
            if (past_end < 0 && i % 2 == 0 && u >= n && mi > order) past_end = i;
            if (past_end >= 0 && i >= past_end + slack) break;
            if (mi > order) continue;
            for (long j = -u; j <= u; ++j) {
                const long e0 = n * (n - 1) + i * (i + 1) / 2 - j * (j - 1) + 2 * n * j;
                const int s0 = detail::sign_of_parity(n + j);
                acc.add(e0, s0);
                acc.add(e0 + 4 * n + 2, -s0);
            }
        }
        return div_binomial(acc.take(), Bigint(1), 2);
    }

    for (long i = 0;; ++i) {
        // minimal exponent of the i-th term, attained at j = -i
        const long mi = n * (n - 1) / 2 + i * i - n * i;
        // monotone once 2i >= n
        if (past_end < 0 && 2 * i >= n && mi > order) past_end = i;
        if (past_end >= 0 && i >= past_end + slack) break;
        if (mi > order) continue;
        for (long j = -i; j <= i; ++j) {
            const long e0 = n * (n - 1) / 2 + i * (3 * i + 1) / 2 - j * (j - 1) / 2 + n * j;
            const int s0 = detail::sign_of_parity(n + i + j);
            acc.add(e0, s0);
            acc.add(e0 + 2 * i + 1, -s0);
            acc.add(e0 + 2 * n + 1, -s0);
            acc.add(e0 + 2 * i + 1 + 2 * n + 1, s0);
        }
    }
    return div_binomial(acc.take(), Bigint(1), 1);
}

/* Checks the defining pair relation for every n <= n_max on the common
 * window, one report per n.  The right side is assembled by exact division
 * (every denominator has a unit constant term). */
inline std::vector<VerificationReport> verify_pair_definition(BaileyPairId id, long n_max, long order)
{
    if (n_max < 0) throw std::invalid_argument("verify_pair_definition: n_max must be >= 0");
    const long b = base_power(id);
    std::vector<VerificationReport> reports;
    reports.reserve(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        SeriesZ rhs(-(n * n + 4), order + 1);
        for (long r = 0; r <= n; ++r) {
            auto t = alpha_explicit(id, r, order);
            t = div_pochhammer(t, {Bigint(1), 2 * b, n + r, b});  // (a q^b;q^b)_{n+r}, a = q^b
            t = div_pochhammer(t, {Bigint(1), b, n - r, b});      // (q^b;q^b)_{n-r}
            rhs = rhs + t;
        }
        const auto lhs = beta_explicit(id, n, order);
        reports.push_back(compare_series(std::string("pair-def-") + pair_name(id) +
                                             ":n=" + std::to_string(n),
                                         order, lhs, rhs));
    }
    return reports;
}

/* Both sides of the specialized lemma through q^order.  The n-th term of
 * either side has minimal exponent n^2 (for both pairs), which ends the
 * loops.  Both sides are honest power series; the negative part of the
 * returned Laurent windows must vanish, and the comparison covers it. */
inline std::pair<SeriesZ, SeriesZ> bailey_lemma_sides(BaileyPairId id, long order)
{
    const long b = base_power(id);

    SeriesZ lhs(0, order + 1);
    for (long n = 0; n * n <= order; ++n) {
        auto t = beta_explicit(id, n, order);
        for (long i = 1; i <= n; ++i) {
            if (b * i > order - t.min_exp()) break;
            t = mul_binomial(t, Bigint(1), b * i);  // factor of (q^b;q^b)_n
        }
        if (n % 2 != 0) t = -t;
        t = t.shifted(b * n * (n + 1) / 2).truncated(order + 1);
        lhs = lhs + t;
    }

    SeriesZ rhs(-(order + 5), order + 1);
    for (long n = 0;; ++n) {
        // floor of the shifted alpha term: n^2 for PairA (alpha_n bottoms out
        // at -n), n^2 + u^2 - nu for PairB (alpha_n bottoms out at
        // n(n-1)/2 + u^2 - nu, u = floor(n/2))
        const long u = n / 2;
        const long floor_n =
            (id == BaileyPairId::PairA) ? n * n : n * n + u * u - n * u;
        if (floor_n > order) break;
        auto t = alpha_explicit(id, n, order);
        if (n % 2 != 0) t = -t;
        t = t.shifted(b * n * (n + 1) / 2).truncated(order + 1);
        rhs = rhs + t;
    }
    rhs = mul_binomial(rhs, Bigint(1), b);

    return {std::move(lhs), std::move(rhs)};
}

}  // namespace qident

#endif
