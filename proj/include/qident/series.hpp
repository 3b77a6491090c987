#ifndef QIDENT_SERIES_HPP
#define QIDENT_SERIES_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qident/bigint.hpp"
#include "qident/poly_a.hpp"

namespace qident {

namespace detail {

template <class C>
inline bool coeff_is_zero(const C& c)
{
    return c.is_zero();
}

inline bool coeff_is_zero(const Bigint& c) { return bigint_is_zero(c); }

}  // namespace detail

/* Exact truncated series in q with a finite Laurent window.
 *
 * A value with window [min_exp, order) stands for a series whose support is
 * contained in [min_exp, +inf): coefficients are stored exactly on the
 * window, are identically zero below it, and are untracked from `order` on.
 * Nothing is ever rounded.
 *
 * Values are immutable once built; every operation returns a new series and
 * computes the widest window on which the result is still exact.  For a
 * product that window is
 *
 *     [x.min + y.min, min(x.order + y.min, y.order + x.min)),
 *
 * since an untracked coefficient of x (exponent >= x.order) first reaches
 * exponent x.order + y.min of the product, and symmetrically for y.
 */
template <class Coeff>
class TruncatedSeries {
public:
    TruncatedSeries(long min_exp, long order) : min_(min_exp), order_(order)
    {
        if (min_ > order_) throw std::invalid_argument("TruncatedSeries: min_exp > order");
        c_.assign(static_cast<size_t>(order_ - min_), Coeff());
    }

    // Takes ownership of a prefilled coefficient block (exponent min_exp + index).
    TruncatedSeries(long min_exp, long order, std::vector<Coeff>&& coeffs)
        : min_(min_exp), order_(order), c_(std::move(coeffs))
    {
        if (min_ > order_) throw std::invalid_argument("TruncatedSeries: min_exp > order");
        if (c_.size() != static_cast<size_t>(order_ - min_))
            throw std::invalid_argument("TruncatedSeries: coefficient block does not match window");
    }

    static TruncatedSeries from_terms(const std::vector<std::pair<long, Coeff>>& terms,
                                      long min_exp, long order)
    {
        TruncatedSeries s(min_exp, order);
        for (const auto& [e, v] : terms) {
            if (e < min_exp || e >= order)
                throw std::out_of_range("from_terms: exponent " + std::to_string(e) +
                                        " outside window [" + std::to_string(min_exp) + ", " +
                                        std::to_string(order) + ")");
            s.ref(e) += v;
        }
        return s;
    }

    // The series 1 on window [0, order).
    static TruncatedSeries unit(long order)
    {
        if (order < 1) throw std::invalid_argument("unit: order must be >= 1");
        TruncatedSeries s(0, order);
        s.ref(0) = Coeff(1);
        return s;
    }

    long min_exp() const { return min_; }
    long order() const { return order_; }

    // Exact coefficient of q^n; n must lie in the window (never silently zero).
    const Coeff& coefficient(long n) const
    {
        if (n < min_ || n >= order_)
            throw std::out_of_range("coefficient: exponent " + std::to_string(n) +
                                    " outside window [" + std::to_string(min_) + ", " +
                                    std::to_string(order_) + ")");
        return c_[static_cast<size_t>(n - min_)];
    }

    // Coefficient of q^n for any n < order(); below the window this is 0.
    Coeff known_coefficient(long n) const
    {
        if (n >= order_)
            throw std::out_of_range("known_coefficient: exponent " + std::to_string(n) +
                                    " not tracked (order " + std::to_string(order_) + ")");
        if (n < min_) return Coeff();
        return c_[static_cast<size_t>(n - min_)];
    }

    bool is_zero() const
    {
        for (const auto& v : c_)
            if (!detail::coeff_is_zero(v)) return false;
        return true;
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r(min_, order_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    TruncatedSeries scaled(const Coeff& k) const
    {
        TruncatedSeries r(min_, order_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
        return r;
    }

    // Multiplication by q^s.
    TruncatedSeries shifted(long s) const
    {
        TruncatedSeries r = *this;
        r.min_ += s;
        r.order_ += s;
        return r;
    }

    TruncatedSeries truncated(long new_order) const
    {
        if (new_order > order_) throw std::invalid_argument("truncated: cannot extend the window");
        if (new_order < min_) throw std::invalid_argument("truncated: order below min_exp");
        TruncatedSeries r(min_, new_order);
        std::copy(c_.begin(), c_.begin() + (new_order - min_), r.c_.begin());
        return r;
    }

    // Pads explicit zeros below the window (semantically a no-op).
    TruncatedSeries widened_below(long new_min) const
    {
        if (new_min > min_) throw std::invalid_argument("widened_below: cannot shrink from below");
        TruncatedSeries r(new_min, order_);
        std::copy(c_.begin(), c_.end(), r.c_.begin() + (min_ - new_min));
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        const long rmin = std::min(x.min_, y.min_);
        const long rorder = std::min(x.order_, y.order_);
        TruncatedSeries r(rmin, std::max(rorder, rmin));
        for (long m = rmin; m < rorder; ++m) {
            Coeff v;
            if (m >= x.min_) v += x.c_[static_cast<size_t>(m - x.min_)];
            if (m >= y.min_) v += y.c_[static_cast<size_t>(m - y.min_)];
            r.ref(m) = std::move(v);
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        return x + (-y);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        const long rmin = x.min_ + y.min_;
        long rorder = std::min(x.order_ + y.min_, y.order_ + x.min_);
        if (rorder < rmin) rorder = rmin;
        TruncatedSeries r(rmin, rorder);
        for (long u = x.min_; u < x.order_; ++u) {
            const Coeff& xu = x.c_[static_cast<size_t>(u - x.min_)];
            if (detail::coeff_is_zero(xu)) continue;
            const long vmax = std::min(y.order_, rorder - u);
            for (long v = y.min_; v < vmax; ++v)
                r.ref(u + v) += xu * y.c_[static_cast<size_t>(v - y.min_)];
        }
        return r;
    }

    /* Two series are compared where both are known: on
     * [min(min_exp), min(order)), with coefficients below a window read as
     * zero.  Note this relation depends on the windows involved. */
    bool agrees_with(const TruncatedSeries& y) const
    {
        const long lo = std::min(min_, y.min_);
        const long hi = std::min(order_, y.order_);
        for (long m = lo; m < hi; ++m)
            if (!(known_coefficient(m) == y.known_coefficient(m))) return false;
        return true;
    }

    friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        return x.agrees_with(y);
    }

    // Same window and same stored coefficients.
    bool identical_to(const TruncatedSeries& y) const
    {
        return min_ == y.min_ && order_ == y.order_ && c_ == y.c_;
    }

    Coeff& ref(long n) { return c_[static_cast<size_t>(n - min_)]; }

private:
    long min_;
    long order_;
    std::vector<Coeff> c_;
};

using SeriesZ = TruncatedSeries<Bigint>;
using SeriesA = TruncatedSeries<PolyA>;

// Lowest exponent where the two series differ on the common known window.
template <class Coeff>
std::optional<long> first_mismatch(const TruncatedSeries<Coeff>& x, const TruncatedSeries<Coeff>& y)
{
    const long lo = std::min(x.min_exp(), y.min_exp());
    const long hi = std::min(x.order(), y.order());
    for (long m = lo; m < hi; ++m)
        if (!(x.known_coefficient(m) == y.known_coefficient(m))) return m;
    return std::nullopt;
}

/* Quotient by the binomial 1 - c q^e, e >= 1 (so the divisor's constant term
 * is a unit).  One linear pass: y_m = x_m + c y_{m-e}. */
template <class Coeff>
TruncatedSeries<Coeff> div_binomial(const TruncatedSeries<Coeff>& x, const Coeff& c, long e)
{
    if (e < 1) throw std::invalid_argument("div_binomial: exponent must be >= 1");
    TruncatedSeries<Coeff> y = x;
    for (long m = x.min_exp() + e; m < x.order(); ++m) y.ref(m) += c * y.ref(m - e);
    return y;
}

/* Product with the binomial 1 - c q^e, e >= 1.  The multiplier is an exact
 * polynomial, so the window is unchanged. */
template <class Coeff>
TruncatedSeries<Coeff> mul_binomial(const TruncatedSeries<Coeff>& x, const Coeff& c, long e)
{
    if (e < 1) throw std::invalid_argument("mul_binomial: exponent must be >= 1");
    TruncatedSeries<Coeff> y = x;
    for (long m = x.order() - 1; m >= x.min_exp() + e; --m) y.ref(m) -= c * y.ref(m - e);
    return y;
}

/* A finite q-Pochhammer product prod_{i<count} (1 - coeff q^{start_exp + i*step}).
 * step = 1 gives (Z;q)_n with Z = coeff * q^start_exp; step = b gives the
 * base-q^b symbols such as (q^b;q^b)_n. */
template <class Coeff>
struct PochhammerSpec {
    Coeff coeff;
    long start_exp = 1;
    long count = 0;
    long step = 1;
};

using PochhammerSpecZ = PochhammerSpec<Bigint>;
using PochhammerSpecA = PochhammerSpec<PolyA>;

// The product expanded through q^order (window [0, order+1)); count = 0 gives 1.
template <class Coeff>
TruncatedSeries<Coeff> pochhammer(const PochhammerSpec<Coeff>& spec, long order)
{
    if (spec.start_exp < 0) throw std::invalid_argument("pochhammer: start_exp must be >= 0");
    if (spec.count < 0) throw std::invalid_argument("pochhammer: count must be >= 0");
    if (spec.step < 1) throw std::invalid_argument("pochhammer: step must be >= 1");
    auto s = TruncatedSeries<Coeff>::unit(order + 1);
    for (long i = 0; i < spec.count; ++i) {
        const long e = spec.start_exp + i * spec.step;
        if (e > order) break;  // factors beyond the window only touch untracked exponents
        if (e == 0) {
            s = s.scaled(Coeff(1) - spec.coeff);
        } else {
            s = mul_binomial(s, spec.coeff, e);
        }
    }
    return s;
}

// Repeated division by (1 - c q^{start + t}), t = 0..count-1, step as given.
template <class Coeff>
TruncatedSeries<Coeff> div_pochhammer(TruncatedSeries<Coeff> s, const PochhammerSpec<Coeff>& spec)
{
    if (spec.start_exp < 1) throw std::invalid_argument("div_pochhammer: start_exp must be >= 1");
    if (spec.step < 1) throw std::invalid_argument("div_pochhammer: step must be >= 1");
    for (long i = 0; i < spec.count; ++i) s = div_binomial(s, spec.coeff, spec.start_exp + i * spec.step);
    return s;
}

}  // namespace qident

#endif
