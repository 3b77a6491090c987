#ifndef QIDENT_GENFUN_HPP
#define QIDENT_GENFUN_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qident/series.hpp"

namespace qident {

/* The two coefficient families and the q-series they come from.
 *
 *   B(n):    sum_{n>=0} (q)_n q^{n^2} / (q^{n+1};q)_n
 *   Bbar(n): sum_{n>=0} (q^2;q^2)_n (-1)^n q^{n^2} / (-q;q)_{2n}
 *          = sum_{n>=0} (q)_n (-1)^n q^{n^2} / (-q^{n+1};q)_n   (termwise)
 *
 * plus the bivariate per-k generating function
 *
 *   G_k(a, q) = (q)_k q^{k^2} / (a q^{k+1};q)_k
 *
 * whose a^m q^n coefficient is the signed profile-k partition count (see
 * partitions.hpp).  Outer sums admit the k-th (n-th) term while its minimal
 * exponent k^2 (n^2) is <= order; every further factor has non-negative
 * valuation, so the bound is exact.
 */

// Term of the B sum: (q)_k q^{k^2} / (q^{k+1};q)_k, through q^order.
inline SeriesZ b_sum_term(long k, long order)
{
    auto s = pochhammer<Bigint>({Bigint(1), 1, k, 1}, order);
    s = s.shifted(k * k).truncated(order + 1);
    return div_pochhammer(s, {Bigint(1), k + 1, k, 1});
}

// Term of the Bbar sum: (q)_k (-1)^k q^{k^2} / (-q^{k+1};q)_k.
inline SeriesZ bbar_sum_term(long k, long order)
{
    auto s = pochhammer<Bigint>({Bigint(1), 1, k, 1}, order);
    if (k % 2 != 0) s = -s;
    s = s.shifted(k * (k + 1) / 2 + k * (k - 1) / 2).truncated(order + 1);
    return div_pochhammer(s, {Bigint(-1), k + 1, k, 1});
}

// sum_{n>=0} (q^2;q^2)_n (-1)^n q^{n^2} / (-q;q)_{2n}, through q^order.
inline SeriesZ lhs_27(long order)
{
    SeriesZ acc(0, order + 1);
    for (long n = 0; n * n <= order; ++n) {
        auto t = pochhammer<Bigint>({Bigint(1), 2, n, 2}, order);
        if (n % 2 != 0) t = -t;
        t = t.shifted(n * n).truncated(order + 1);
        t = div_pochhammer(t, {Bigint(-1), 1, 2 * n, 1});
        acc = acc + t;
    }
    return acc;
}

// sum_{n>=0} (q)_n q^{n^2} / (q^{n+1};q)_n, through q^order.
inline SeriesZ lhs_28(long order)
{
    SeriesZ acc(0, order + 1);
    for (long n = 0; n * n <= order; ++n) acc = acc + b_sum_term(n, order);
    return acc;
}

// sum_{n>=0} (q)_n (-1)^n q^{n(n+1)/2 + n(n-1)/2} / (-q^{n+1};q)_n.
inline SeriesZ middle_37(long order)
{
    SeriesZ acc(0, order + 1);
    for (long n = 0; n * n <= order; ++n) acc = acc + bbar_sum_term(n, order);
    return acc;
}

/* G_k(a, q) over the polynomial-in-a domain; the a^m q^n coefficient counts
 * the profile-k partitions of n with m parts in (k, 2k], signed. */
inline SeriesA genfun_k(long k, long order)
{
    if (k < 0) throw std::invalid_argument("genfun_k: k must be >= 0");
    if (k * k > order) return SeriesA(0, order + 1);  // support starts at q^{k^2}
    auto s = pochhammer<PolyA>({PolyA(1), 1, k, 1}, order);
    s = s.shifted(k * k).truncated(order + 1);
    return div_pochhammer(s, {PolyA::marker(), k + 1, k, 1});
}

/* The signed monomial list of f_k(x) = (x;x)_k x^{2(1+...+(k-1))+k}, one
 * entry per choice of extra parts, duplicates preserved (opposite-signed
 * monomials at the same exponent are kept, not cancelled).  Each subset S of
 * {1..k} contributes exponent k^2 + sum(S); the represented partition has
 * 2k - 1 + |S| parts, and the sign is +1 iff that count is odd. */
struct SignedMonomial {
    long exponent = 0;
    int sign = +1;

    bool operator==(const SignedMonomial&) const = default;
};

inline std::vector<SignedMonomial> f_poly(long k)
{
    if (k < 0) throw std::invalid_argument("f_poly: k must be >= 0");
    if (k == 0) return {SignedMonomial{0, +1}};
    if (k > 30) throw std::invalid_argument("f_poly: 2^k monomials is not a reasonable request");
    std::vector<SignedMonomial> out;
    out.reserve(1u << k);
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        long exponent = k * k;
        long extra = 0;
        for (long j = 1; j <= k; ++j)
            if (mask & (1ul << (j - 1))) {
                exponent += j;
                ++extra;
            }
        const long parts = 2 * k - 1 + extra;
        out.push_back({exponent, (parts % 2 != 0) ? +1 : -1});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const SignedMonomial& a, const SignedMonomial& b) {
                         return a.exponent < b.exponent;
                     });
    return out;
}

struct CoefficientTable {
    enum class Name { B, Bbar };

    Name name = Name::B;
    std::vector<Bigint> values;  // indexed by n from 0; values[0] = 1

    long max_n() const { return static_cast<long>(values.size()) - 1; }
};

namespace detail {

inline CoefficientTable table_from_series(CoefficientTable::Name name, const SeriesZ& s)
{
    CoefficientTable t;
    t.name = name;
    t.values.reserve(static_cast<size_t>(s.order()));
    for (long n = 0; n < s.order(); ++n) t.values.push_back(s.known_coefficient(n));
    if (t.values.empty() || !(t.values[0] == 1))
        throw std::logic_error("coefficient table must start with 1");
    return t;
}

}  // namespace detail

/* B(0..order).  Computed as the sum over k of G_k specialized at a = 1;
 * specialization commutes with the series arithmetic, so each term is built
 * directly in the integer domain (it is the k-th term of the B sum). */
inline CoefficientTable b_table(long order)
{
    return detail::table_from_series(CoefficientTable::Name::B, lhs_28(order));
}

// Bbar(0..order), via a = -1 and the (-1)^k weight.
inline CoefficientTable bbar_table(long order)
{
    return detail::table_from_series(CoefficientTable::Name::Bbar, middle_37(order));
}

// The same tables through the bivariate domain: compute G_k over polynomials
// in a, then specialize.  Slower; used to cross-check the derived views.
inline std::vector<Bigint> b_table_via_grading(long order)
{
    SeriesA acc(0, order + 1);
    for (long k = 0; k * k <= order; ++k) acc = acc + genfun_k(k, order);
    std::vector<Bigint> out;
    for (long n = 0; n <= order; ++n) out.push_back(acc.known_coefficient(n).eval_at_unit(+1));
    return out;
}

inline std::vector<Bigint> bbar_table_via_grading(long order)
{
    SeriesA acc(0, order + 1);
    for (long k = 0; k * k <= order; ++k) {
        auto g = genfun_k(k, order);
        acc = acc + (k % 2 != 0 ? -g : g);
    }
    std::vector<Bigint> out;
    for (long n = 0; n <= order; ++n) out.push_back(acc.known_coefficient(n).eval_at_unit(-1));
    return out;
}

}  // namespace qident

#endif
