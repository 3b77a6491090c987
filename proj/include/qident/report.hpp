#ifndef QIDENT_REPORT_HPP
#define QIDENT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qident/series.hpp"

namespace qident {

/* Outcome of one exact equality check.  Failure is data, not an exception:
 * status is PASS iff no mismatching exponent was found. */
struct VerificationReport {
    std::string check_id;
    long order = 0;
    bool pass = false;
    std::optional<long> first_mismatch;
    std::string lhs_at_mismatch;
    std::string rhs_at_mismatch;

    const char* status() const { return pass ? "PASS" : "FAIL"; }
};

template <class Coeff>
VerificationReport compare_series(std::string check_id, long order,
                                  const TruncatedSeries<Coeff>& lhs,
                                  const TruncatedSeries<Coeff>& rhs)
{
    VerificationReport r;
    r.check_id = std::move(check_id);
    r.order = order;
    r.first_mismatch = first_mismatch(lhs, rhs);
    r.pass = !r.first_mismatch.has_value();
    if (r.first_mismatch) {
        r.lhs_at_mismatch = to_decimal(lhs.known_coefficient(*r.first_mismatch));
        r.rhs_at_mismatch = to_decimal(rhs.known_coefficient(*r.first_mismatch));
    }
    return r;
}

inline bool all_pass(const std::vector<VerificationReport>& reports)
{
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace qident

#endif
