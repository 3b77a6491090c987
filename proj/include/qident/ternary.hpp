#ifndef QIDENT_TERNARY_HPP
#define QIDENT_TERNARY_HPP

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qident/series.hpp"

namespace qident {

/* Lattice-sum evaluation of the ternary expansions.
 *
 * Identity 2.8, right side:
 *   sum_{n>=0} q^{n^2} (1-q^{2n+1})
 *     sum_{i>=0} (-1)^i q^{i(3i+1)/2} (1-q^{2i+1})
 *       sum_{|j|<=i} (-1)^j q^{-j(j-1)/2 + nj}
 *
 * Identity 2.7, right side:
 *   sum_{n>=0} q^{2n^2} (1-q^{4n+2})
 *     sum_{i>=0} q^{i(i+1)/2} sum_{2|j|<=i} (-1)^j q^{-j(j-1) + 2nj}
 *
 * and the reindexed form of 2.7 (substituting i -> i + 2|j|):
 *   sum_{n>=0} q^{2n^2} (1-q^{4n+2})
 *     sum_{i>=0, j in Z} (-1)^j q^{i(i+1)/2 + j(j+1) + (2i+1)|j| + 2jn}
 *
 * Enumeration bounds (all re-validated by the wider-box tests):
 *   2.8: over |j| <= i the exponent bottoms out at j = -i, giving
 *        n^2 + i^2 - ni, monotone in i once 2i >= n; over i as well the
 *        floor is n^2 + u^2 - nu at u = floor(n/2), about 3n^2/4, which
 *        ends the n loop.
 *   2.7: over 2|j| <= i the bottom is j = -floor(i/2) = -u, giving
 *        2n^2 + i(i+1)/2 - u(u+1) - 2nu; between parities this dips, but
 *        from any even i with u >= n on it only grows.  The floor for
 *        fixed n is n^2 + (n-u)^2 >= n^2, which ends the n loop.
 *   4.1: negative j = -v contributes v(v + 2i - 2n), minimized at v = n-i
 *        when i < n, so the i-th floor is monotone and the j loops are
 *        cut off directly by exponent; the floor for fixed n is again n^2.
 *
 * Each scan takes a `slack`: the loops run that many indices past their
 * derived termination points, still emitting any term with exponent <= order.
 * Mathematically nothing is out there; the pruning-soundness tests compare
 * slack 0 against slack 10.
 *
 * Visitors receive (n, i, j, exponent, sign) with the prefactor offsets
 * already expanded, one call per signed lattice contribution.
 */

template <class Visit>
void scan_rhs_28(long order, long slack, Visit&& visit)
{
    long past_n = -1;
    for (long n = 0;; ++n) {
        const long un = n / 2;
        const long floor_n = n * n + un * un - n * un;  // min over (i,j), at i = n/2, j = -i
        if (past_n < 0 && floor_n > order) past_n = n;
        if (past_n >= 0 && n >= past_n + slack) break;
        long past_end = -1;
        for (long i = 0;; ++i) {
            const long mi = n * n + i * i - n * i;
            if (past_end < 0 && 2 * i >= n && mi > order) past_end = i;
            if (past_end >= 0 && i >= past_end + slack) break;
            if (mi > order) continue;
            for (long j = -i; j <= i; ++j) {
                const long e0 = n * n + i * (3 * i + 1) / 2 - j * (j - 1) / 2 + n * j;
                const int s0 = ((i + j) % 2 == 0) ? +1 : -1;
                if (e0 <= order) visit(n, i, j, e0, s0);
                if (e0 + 2 * n + 1 <= order) visit(n, i, j, e0 + 2 * n + 1, -s0);
                if (e0 + 2 * i + 1 <= order) visit(n, i, j, e0 + 2 * i + 1, -s0);
                if (e0 + 2 * n + 2 * i + 2 <= order) visit(n, i, j, e0 + 2 * n + 2 * i + 2, s0);
            }
        }
    }
}

template <class Visit>
void scan_rhs_27(long order, long slack, Visit&& visit)
{
    for (long n = 0; n <= isqrt_ll(order) + slack; ++n) {
        long past_end = -1;
        for (long i = 0;; ++i) {
            const long u = i / 2;
            const long mi = 2 * n * n + i * (i + 1) / 2 - u * (u + 1) - 2 * n * u;
            if (past_end < 0 && i % 2 == 0 && u >= n && mi > order) past_end = i;
            if (past_end >= 0 && i >= past_end + slack) break;
            if (mi > order) continue;
            for (long j = -u; j <= u; ++j) {
                const long e0 = 2 * n * n + i * (i + 1) / 2 - j * (j - 1) + 2 * n * j;
                const int s0 = (j % 2 == 0) ? +1 : -1;
                if (e0 <= order) visit(n, i, j, e0, s0);
                if (e0 + 4 * n + 2 <= order) visit(n, i, j, e0 + 4 * n + 2, -s0);
            }
        }
    }
}

template <class Visit>
void scan_rewrite_41(long order, long slack, Visit&& visit)
{
    for (long n = 0; n <= isqrt_ll(order) + slack; ++n) {
        long past_end = -1;
        for (long i = 0;; ++i) {
            const long base = 2 * n * n + i * (i + 1) / 2;
            const long mi = (i < n) ? base - (n - i) * (n - i) : base;
            if (past_end < 0 && mi > order) past_end = i;
            if (past_end >= 0 && i >= past_end + slack) break;
            if (mi > order) continue;
            // j >= 0: exponent strictly increasing in j
            long past_j = -1;
            for (long j = 0;; ++j) {
                const long e0 = base + j * (j + 1) + (2 * i + 1) * j + 2 * j * n;
                if (past_j < 0 && e0 > order) past_j = j;
                if (past_j >= 0 && j >= past_j + slack) break;
                if (e0 > order) continue;
                const int s0 = (j % 2 == 0) ? +1 : -1;
                visit(n, i, j, e0, s0);
                if (e0 + 4 * n + 2 <= order) visit(n, i, j, e0 + 4 * n + 2, -s0);
            }
            // j = -v, v >= 1: exponent base + v(v + 2i - 2n), rising once v + i >= n
            long past_v = -1;
            for (long v = 1;; ++v) {
                const long e0 = base + v * (v + 2 * i - 2 * n);
                if (past_v < 0 && v + i >= n && e0 > order) past_v = v;
                if (past_v >= 0 && v >= past_v + slack) break;
                if (e0 > order) continue;
                const int s0 = (v % 2 == 0) ? +1 : -1;
                visit(n, i, -v, e0, s0);
                if (e0 + 4 * n + 2 <= order) visit(n, i, -v, e0 + 4 * n + 2, -s0);
            }
        }
    }
}

namespace detail {

struct PowerAccumulator {
    long order;
    std::vector<Bigint> c;

    explicit PowerAccumulator(long order_) : order(order_)
    {
        if (order < 0) throw std::invalid_argument("order must be >= 0");
        c.assign(static_cast<size_t>(order) + 1, Bigint(0));
    }

    void add(long exponent, int sign)
    {
        if (exponent < 0) throw std::logic_error("lattice exponent below zero");
        auto& v = c[static_cast<size_t>(exponent)];
        if (sign > 0)
            v += 1;
        else
            v -= 1;
    }

    SeriesZ take() { return SeriesZ(0, order + 1, std::move(c)); }
};

}  // namespace detail

inline SeriesZ rhs_28(long order, long slack = 0)
{
    detail::PowerAccumulator acc(order);
    scan_rhs_28(order, slack, [&](long, long, long, long e, int s) { acc.add(e, s); });
    return acc.take();
}

inline SeriesZ rhs_27(long order, long slack = 0)
{
    detail::PowerAccumulator acc(order);
    scan_rhs_27(order, slack, [&](long, long, long, long e, int s) { acc.add(e, s); });
    return acc.take();
}

inline SeriesZ rewrite_41(long order, long slack = 0)
{
    detail::PowerAccumulator acc(order);
    scan_rewrite_41(order, slack, [&](long, long, long, long e, int s) { acc.add(e, s); });
    return acc.take();
}

enum class LatticeFormId { Rhs27, Rhs28 };

/* Splits a lattice expansion along the proof's diagonal: triples with j = i
 * for 2.8, triples with i = 2j for 2.7 (which forces j >= 0).  The diagonal
 * exponents of 2.8 are n^2 + ni + i^2 + i plus offsets, the x^2+xy+y^2 shape.
 * Coefficients of both components are signed lattice-point counts, offsets
 * included. */
struct ComponentExpansion {
    SeriesZ diagonal;
    SeriesZ off_diagonal;
};

inline ComponentExpansion split_components(LatticeFormId id, long order)
{
    detail::PowerAccumulator diag(order);
    detail::PowerAccumulator off(order);
    if (id == LatticeFormId::Rhs28) {
        scan_rhs_28(order, 0, [&](long, long i, long j, long e, int s) {
            (j == i ? diag : off).add(e, s);
        });
    } else {
        scan_rhs_27(order, 0, [&](long, long i, long j, long e, int s) {
            (i == 2 * j ? diag : off).add(e, s);
        });
    }
    return {diag.take(), off.take()};
}

// Exponents hit by at least one lattice contribution (signs ignored); a
// nonzero series coefficient is only possible on this support.
inline std::vector<char> lattice_support_28(long order)
{
    std::vector<char> hit(static_cast<size_t>(order) + 1, 0);
    scan_rhs_28(order, 0, [&](long, long, long, long e, int) { hit[static_cast<size_t>(e)] = 1; });
    return hit;
}

inline std::vector<char> lattice_support_27(long order)
{
    std::vector<char> hit(static_cast<size_t>(order) + 1, 0);
    scan_rhs_27(order, 0, [&](long, long, long, long e, int) { hit[static_cast<size_t>(e)] = 1; });
    return hit;
}

/* f(x,y,z) = a x^2 + b y^2 + c z^2 + r yz + s zx + t xy. */
struct TernaryForm {
    long a = 0, b = 0, c = 0, r = 0, s = 0, t = 0;

    __int128 value(long long x, long long y, long long z) const
    {
        using I = __int128;
        return I(a) * x * x + I(b) * y * y + I(c) * z * z + I(r) * y * z + I(s) * z * x +
               I(t) * x * y;
    }

    // Sylvester's criterion on the doubled Gram matrix.
    bool positive_definite() const
    {
        using I = __int128;
        const I m1 = 2 * I(a);
        const I m2 = 4 * I(a) * b - I(t) * t;
        const I m3 = det_doubled();
        return m1 > 0 && m2 > 0 && m3 > 0;
    }

    bool primitive() const
    {
        long g = 0;
        for (long v : {a, b, c, r, s, t}) g = std::gcd(g, v < 0 ? -v : v);
        return g == 1;
    }

    __int128 det_doubled() const
    {
        using I = __int128;
        return 2 * I(a) * (4 * I(b) * c - I(r) * r) - I(t) * (2 * I(t) * c - I(r) * s) +
               I(s) * (I(t) * r - 2 * I(b) * s);
    }
};

namespace detail {

inline __int128 isqrt_i128(__int128 v)
{
    if (v < 0) return -1;
    auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Largest m >= 0 with m^2 * den <= num (num, den > 0): per-variable box bound
// from v_i^2 <= 2X adj_ii / det on the doubled Gram matrix.
inline long long box_bound(__int128 num, __int128 den)
{
    if (num <= 0) return 0;
    __int128 m = isqrt_i128(num / den);
    while ((m + 1) * (m + 1) * den <= num) ++m;
    while (m > 0 && m * m * den > num) --m;
    return static_cast<long long>(m);
}

struct FormBounds {
    long long bx, by;
    __int128 det;
};

inline FormBounds form_bounds(const TernaryForm& f, long long cap)
{
    using I = __int128;
    const I det = f.det_doubled();
    const I adj_xx = 4 * I(f.b) * f.c - I(f.r) * f.r;
    const I adj_yy = 4 * I(f.a) * f.c - I(f.s) * f.s;
    return {box_bound(2 * I(cap) * adj_xx, det), box_bound(2 * I(cap) * adj_yy, det), det};
}

/* z-interval on which c z^2 + beta z + gamma <= cap (c > 0); empty if none.
 * Estimated with doubles, then pinned down with the exact predicate. */
inline std::optional<std::pair<long long, long long>> z_interval(long long c, __int128 beta,
                                                                 __int128 gamma, __int128 cap)
{
    const __int128 disc = beta * beta - 4 * c * (gamma - cap);
    if (disc < 0) return std::nullopt;
    const auto sd = static_cast<long double>(isqrt_i128(disc));
    const auto bd = static_cast<long double>(beta);
    auto lo = static_cast<long long>(std::floor((-bd - sd) / (2.0L * c)));
    auto hi = static_cast<long long>(std::ceil((-bd + sd) / (2.0L * c)));
    const auto ok = [&](long long z) { return __int128(c) * z * z + beta * z + gamma <= cap; };
    while (ok(lo - 1)) --lo;
    while (lo <= hi && !ok(lo)) ++lo;
    while (ok(hi + 1)) ++hi;
    while (hi >= lo && !ok(hi)) --hi;
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

}  // namespace detail

// Number of integer triples with f(x,y,z) = n, x,y,z ranging over all of Z.
inline long long represent_count(const TernaryForm& f, long long n)
{
    if (!f.positive_definite()) throw std::domain_error("represent_count: form is not positive definite");
    if (n < 0) return 0;
    const auto bounds = detail::form_bounds(f, n);
    long long count = 0;
    for (long long x = -bounds.bx; x <= bounds.bx; ++x) {
        for (long long y = -bounds.by; y <= bounds.by; ++y) {
            // c z^2 + (r y + s x) z + (a x^2 + b y^2 + t x y) = n, solved exactly
            const __int128 beta = __int128(f.r) * y + __int128(f.s) * x;
            const __int128 gamma =
                __int128(f.a) * x * x + __int128(f.b) * y * y + __int128(f.t) * x * y;
            const __int128 disc = beta * beta - 4 * f.c * (gamma - n);
            if (disc < 0) continue;
            const __int128 sd = detail::isqrt_i128(disc);
            if (sd * sd != disc) continue;
            if ((-beta + sd) % (2 * f.c) == 0) ++count;
            if (sd != 0 && (-beta - sd) % (2 * f.c) == 0) ++count;
        }
    }
    return count;
}

// Flags n in [0, X] that are represented by f; exhaustive over the ellipsoid.
inline std::vector<char> representable_mask(const TernaryForm& f, long long X)
{
    if (!f.positive_definite())
        throw std::domain_error("representable_mask: form is not positive definite");
    if (X < 0) throw std::invalid_argument("representable_mask: negative bound");
    std::vector<char> mask(static_cast<size_t>(X) + 1, 0);
    mask[0] = 1;
    const auto bounds = detail::form_bounds(f, X);
    // f(-x,-y,-z) = f(x,y,z): half the lattice suffices for marking
    for (long long x = 0; x <= bounds.bx; ++x) {
        const long long ylo = (x == 0) ? 0 : -bounds.by;
        for (long long y = ylo; y <= bounds.by; ++y) {
            const __int128 beta = __int128(f.r) * y + __int128(f.s) * x;
            const __int128 gamma =
                __int128(f.a) * x * x + __int128(f.b) * y * y + __int128(f.t) * x * y;
            auto zr = detail::z_interval(f.c, beta, gamma, X);
            if (!zr) continue;
            long long zlo = zr->first;
            if (x == 0 && y == 0 && zlo < 0) zlo = 0;
            for (long long z = zlo; z <= zr->second; ++z) {
                const __int128 v = __int128(f.c) * z * z + beta * z + gamma;
                if (v >= 0) mask[static_cast<size_t>(static_cast<long long>(v))] = 1;
            }
        }
    }
    return mask;
}

// #{0 <= n <= X : n represented by f}; n = 0 always counts, via (0,0,0).
inline long long representable_upto(const TernaryForm& f, long long X)
{
    const auto mask = representable_mask(f, X);
    long long count = 0;
    for (long long n = 0; n <= X; ++n) count += mask[static_cast<size_t>(n)];
    return count;
}

// Legendre: n is a sum of three squares iff n is not of the form 4^a (8b+7).
inline bool is_sum_three_squares(long long n)
{
    if (n < 0) return false;
    while (n > 0 && n % 4 == 0) n /= 4;
    return n % 8 != 7;
}

// Flags n in [0, X] of the form x^2 + xy + y^2 (search box |x|,|y| <= ceil(2 sqrt X)).
inline std::vector<char> loeschian_mask(long long X)
{
    if (X < 0) throw std::invalid_argument("loeschian_mask: negative bound");
    std::vector<char> mask(static_cast<size_t>(X) + 1, 0);
    long long bound = 2 * isqrt_ll(X);
    while (bound * bound < 4 * X) ++bound;
    for (long long x = -bound; x <= bound; ++x)
        for (long long y = -bound; y <= bound; ++y) {
            const long long v = x * x + x * y + y * y;
            if (v >= 0 && v <= X) mask[static_cast<size_t>(v)] = 1;
        }
    return mask;
}

// #{1 <= n <= X : n = x^2 + xy + y^2}.
inline long long loeschian_upto(long long X)
{
    const auto mask = loeschian_mask(X);
    long long count = 0;
    for (long long n = 1; n <= X; ++n) count += mask[static_cast<size_t>(n)];
    return count;
}

}  // namespace qident

#endif
