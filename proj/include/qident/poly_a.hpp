#ifndef QIDENT_POLY_A_HPP
#define QIDENT_POLY_A_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qident/bigint.hpp"

namespace qident {

/* Exact integer polynomials in a marker variable a, stored densely from a^0.
 * Exponents of a are never negative; trailing zero coefficients are trimmed
 * so equal values have equal representations. */
class PolyA {
public:
    PolyA() = default;
    PolyA(long v) { c_.emplace_back(v); trim(); }  // NOLINT: implicit by design
    PolyA(Bigint v) { c_.push_back(std::move(v)); trim(); }

    // The marker variable itself (the polynomial a).
    static PolyA marker()
    {
        PolyA p;
        p.c_.assign(2, Bigint(0));
        p.c_[1] = 1;
        return p;
    }

    static PolyA monomial(Bigint coeff, int deg)
    {
        if (deg < 0) throw std::invalid_argument("PolyA: negative exponent");
        PolyA p;
        p.c_.assign(static_cast<size_t>(deg) + 1, Bigint(0));
        p.c_[static_cast<size_t>(deg)] = std::move(coeff);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    // Degree in a; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of a^m (zero outside the stored range).
    Bigint coeff(int m) const
    {
        if (m < 0 || m >= static_cast<int>(c_.size())) return Bigint(0);
        return c_[static_cast<size_t>(m)];
    }

    // Value at a = +1 or a = -1.
    Bigint eval_at_unit(int sign) const
    {
        Bigint v = 0;
        for (size_t m = 0; m < c_.size(); ++m) {
            if (sign > 0 || m % 2 == 0)
                v += c_[m];
            else
                v -= c_[m];
        }
        return v;
    }

    PolyA& operator+=(const PolyA& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t m = 0; m < o.c_.size(); ++m) c_[m] += o.c_[m];
        trim();
        return *this;
    }

    PolyA& operator-=(const PolyA& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t m = 0; m < o.c_.size(); ++m) c_[m] -= o.c_[m];
        trim();
        return *this;
    }

    PolyA operator-() const
    {
        PolyA r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend PolyA operator+(PolyA a, const PolyA& b) { return a += b; }
    friend PolyA operator-(PolyA a, const PolyA& b) { return a -= b; }

    friend PolyA operator*(const PolyA& a, const PolyA& b)
    {
        PolyA r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Bigint(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (bigint_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend bool operator==(const PolyA& a, const PolyA& b) { return a.c_ == b.c_; }

    std::string str() const
    {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t m = 0; m < c_.size(); ++m) {
            if (bigint_is_zero(c_[m])) continue;
            Bigint v = c_[m];
            if (out.empty()) {
                if (mpz_sgn(v.get_mpz_t()) < 0) out += "-";
            } else {
                out += (mpz_sgn(v.get_mpz_t()) < 0) ? " - " : " + ";
            }
            Bigint av = abs(v);
            const bool unit = av == 1;
            if (m == 0) {
                out += av.get_str();
            } else {
                if (!unit) out += av.get_str() + "*";
                out += "a";
                if (m > 1) out += "^" + std::to_string(m);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<Bigint> c_;

    void trim()
    {
        while (!c_.empty() && bigint_is_zero(c_.back())) c_.pop_back();
    }
};

inline std::string to_decimal(const PolyA& p) { return p.str(); }

}  // namespace qident

#endif
