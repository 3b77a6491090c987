#ifndef QIDENT_DENSITY_HPP
#define QIDENT_DENSITY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qident/genfun.hpp"
#include "qident/ternary.hpp"

namespace qident {

/* Empirical arithmetic-density scans.  Counts are over 1 <= n <= X (n = 0 is
 * excluded throughout); ratios are the exact rationals count/X, rounded only
 * when rendered.  The scans report data; they do not grade any conjecture. */

inline const std::vector<long long>& default_checkpoints()
{
    static const std::vector<long long> decades{1000, 10000, 100000, 1000000};
    return decades;
}

// count/X to six decimal places, round half up.
inline std::string render_ratio(long long count, long long X)
{
    if (X <= 0 || count < 0) throw std::invalid_argument("render_ratio: bad arguments");
    const long long scaled = (count * 2000000LL + X) / (2 * X);
    std::string digits = std::to_string(scaled % 1000000);
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    return std::to_string(scaled / 1000000) + "." + digits;
}

struct DensityReport {
    std::string subject;
    std::vector<long long> checkpoints;  // increasing X values
    std::vector<long long> counts;       // #{1 <= n <= X : predicate}

    void validate() const
    {
        if (checkpoints.size() != counts.size())
            throw std::logic_error("density report: ragged columns");
        for (size_t i = 0; i < counts.size(); ++i) {
            if (checkpoints[i] < 1 || counts[i] < 0 || counts[i] > checkpoints[i])
                throw std::logic_error("density report: ratio outside [0,1]");
            if (i > 0 && (checkpoints[i] <= checkpoints[i - 1] || counts[i] < counts[i - 1]))
                throw std::logic_error("density report: counts must be monotone in X");
        }
    }

    std::string ratio_str(size_t i) const { return render_ratio(counts[i], checkpoints[i]); }
};

namespace detail {

inline void require_increasing(const std::vector<long long>& checkpoints)
{
    if (checkpoints.empty()) throw std::invalid_argument("no checkpoints given");
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1) throw std::invalid_argument("checkpoints must be >= 1");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("checkpoints must be strictly increasing");
    }
}

template <class Pred>
DensityReport scan_predicate(std::string subject, const std::vector<long long>& checkpoints,
                             Pred&& pred)
{
    require_increasing(checkpoints);
    DensityReport rep;
    rep.subject = std::move(subject);
    rep.checkpoints = checkpoints;
    long long count = 0;
    long long n = 1;
    for (long long X : checkpoints) {
        for (; n <= X; ++n)
            if (pred(n)) ++count;
        rep.counts.push_back(count);
    }
    rep.validate();
    return rep;
}

}  // namespace detail

// Nonzero-coefficient density of a table; checkpoints must lie inside it.
inline DensityReport nonzero_density(const CoefficientTable& table,
                                     const std::vector<long long>& checkpoints)
{
    detail::require_increasing(checkpoints);
    if (checkpoints.back() > table.max_n())
        throw std::out_of_range("nonzero_density: checkpoint beyond table range");
    const char* subject = table.name == CoefficientTable::Name::B ? "b" : "bbar";
    return detail::scan_predicate(subject, checkpoints, [&](long long n) {
        return !bigint_is_zero(table.values[static_cast<size_t>(n)]);
    });
}

inline DensityReport three_squares_density(const std::vector<long long>& checkpoints)
{
    return detail::scan_predicate("three-squares", checkpoints,
                                  [](long long n) { return is_sum_three_squares(n); });
}

inline DensityReport loeschian_density(const std::vector<long long>& checkpoints)
{
    detail::require_increasing(checkpoints);
    const auto mask = loeschian_mask(checkpoints.back());
    return detail::scan_predicate("loeschian", checkpoints, [&](long long n) {
        return mask[static_cast<size_t>(n)] != 0;
    });
}

// Representability density of an arbitrary positive definite form.
inline DensityReport form_density(const TernaryForm& f, const std::vector<long long>& checkpoints)
{
    detail::require_increasing(checkpoints);
    const auto mask = representable_mask(f, checkpoints.back());
    std::string subject = "form:" + std::to_string(f.a) + "," + std::to_string(f.b) + "," +
                          std::to_string(f.c) + "," + std::to_string(f.r) + "," +
                          std::to_string(f.s) + "," + std::to_string(f.t);
    return detail::scan_predicate(std::move(subject), checkpoints, [&](long long n) {
        return mask[static_cast<size_t>(n)] != 0;
    });
}

/* Running estimate of the upper density of the nonzero set: at each decade
 * X (plus the table end) the largest ratio count(X')/X' seen so far over the
 * emitted X' <= X.  Fractions are compared exactly. */
struct RunningDensityPoint {
    long long X = 0;
    long long sup_num = 0;  // sup so far as the exact fraction sup_num / sup_den
    long long sup_den = 1;
};

inline std::vector<RunningDensityPoint> running_upper_density(const CoefficientTable& table)
{
    const long long top = table.max_n();
    if (top < 1) throw std::invalid_argument("running_upper_density: table too small");
    std::vector<long long> marks;
    for (long long X = 10; X <= top; X *= 10) marks.push_back(X);
    if (marks.empty() || marks.back() != top) marks.push_back(top);

    std::vector<RunningDensityPoint> out;
    long long count = 0;
    long long n = 1;
    long long best_num = 0, best_den = 1;
    for (long long X : marks) {
        for (; n <= X; ++n)
            if (!bigint_is_zero(table.values[static_cast<size_t>(n)])) ++count;
        if (static_cast<__int128>(count) * best_den > static_cast<__int128>(best_num) * X) {
            best_num = count;
            best_den = X;
        }
        out.push_back({X, best_num, best_den});
    }
    return out;
}

}  // namespace qident

#endif
