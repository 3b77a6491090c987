#ifndef QIDENT_PARTITIONS_HPP
#define QIDENT_PARTITIONS_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "qident/bigint.hpp"

namespace qident {

/* Brute-force enumeration of the partition family behind the B / Bbar
 * coefficient tables.  For a profile parameter k >= 1, a qualifying
 * partition of n has
 *
 *   - every part j < k with multiplicity 2 or 3,
 *   - part k with multiplicity 1 or 2,
 *   - parts in (k, 2k] with unrestricted multiplicity,
 *   - no parts above 2k,
 *
 * and carries two statistics: m, the number of parts in (k, 2k] counted
 * with multiplicity, and a sign that is +1 iff the number of parts <= k
 * (with multiplicity) is odd.  k = 0 admits only the empty partition of 0,
 * with sign +1: the k = 0 term of the generating function is the constant 1,
 * which overrides the odd-minus-even reading (an empty partition has an even
 * number of parts).  Likewise part k must actually appear: the numerator
 * q^{1+1+...+(k-1)+(k-1)+k} carries one mandatory copy of k, even though
 * "appears at most twice" alone would also allow zero copies.
 *
 * This is ground truth for the series routes and is deliberately naive.
 */

struct Partition {
    std::map<long, long> multiplicities;  // part value -> multiplicity, parts positive

    long total() const
    {
        long n = 0;
        for (const auto& [part, mult] : multiplicities) n += part * mult;
        return n;
    }

    long part_count() const
    {
        long c = 0;
        for (const auto& [part, mult] : multiplicities) c += mult;
        return c;
    }

    bool operator==(const Partition&) const = default;
};

struct ProfileEntry {
    Partition partition;
    long m = 0;    // parts in (k, 2k], with multiplicity
    int sign = 1;  // +1 iff the count of parts <= k (with multiplicity) is odd
};

namespace detail {

inline void check_profile(const Partition& p, long k, long n)
{
    if (p.total() != n) throw std::logic_error("oracle: partition total mismatch");
    for (const auto& [part, mult] : p.multiplicities) {
        if (part <= 0 || mult <= 0) throw std::logic_error("oracle: invalid partition entry");
        if (part > 2 * k) throw std::logic_error("oracle: part above 2k");
        if (part < k && (mult < 2 || mult > 3)) throw std::logic_error("oracle: part below k out of range");
        if (part == k && (mult < 1 || mult > 2)) throw std::logic_error("oracle: part k out of range");
    }
}

}  // namespace detail

// All qualifying partitions of n for profile k, with their (m, sign) statistics.
inline std::vector<ProfileEntry> enumerate_profile(long k, long n)
{
    if (k < 0 || n < 0) throw std::invalid_argument("enumerate_profile: negative argument");
    std::vector<ProfileEntry> out;
    if (k == 0) {
        if (n == 0) out.push_back({Partition{}, 0, +1});
        return out;
    }

    // Parts <= k first (each with 2..3 resp. 1..2 copies), then a bounded
    // knapsack over parts in (k, 2k].
    Partition current;
    auto large = [&](auto&& self, long part, long rem, long m) -> void {
        if (part > 2 * k) {
            if (rem != 0) return;
            ProfileEntry e;
            e.partition = current;
            e.m = m;
            long below = 0;
            for (const auto& [p, mult] : current.multiplicities)
                if (p <= k) below += mult;
            e.sign = (below % 2 != 0) ? +1 : -1;
            detail::check_profile(e.partition, k, n);
            out.push_back(std::move(e));
            return;
        }
        for (long mult = 0; mult * part <= rem; ++mult) {
            if (mult > 0) current.multiplicities[part] = mult;
            self(self, part + 1, rem - mult * part, m + mult);
            if (mult > 0) current.multiplicities.erase(part);
        }
    };
    auto small = [&](auto&& self, long part, long rem) -> void {
        if (part == k) {
            for (long mult = 1; mult <= 2; ++mult) {
                if (mult * part > rem) break;
                current.multiplicities[part] = mult;
                large(large, k + 1, rem - mult * part, 0);
                current.multiplicities.erase(part);
            }
            return;
        }
        for (long mult = 2; mult <= 3; ++mult) {
            if (mult * part > rem) break;
            current.multiplicities[part] = mult;
            self(self, part + 1, rem - mult * part);
            current.multiplicities.erase(part);
        }
    };
    small(small, 1, n);
    return out;
}

// Signed count over the profile-k partitions of n with the given m.
inline long abar_count(long k, long m, long n)
{
    long c = 0;
    for (const auto& e : enumerate_profile(k, n))
        if (e.m == m) c += e.sign;
    return c;
}

// Unsigned variant.
inline long a_count(long k, long m, long n)
{
    long c = 0;
    for (const auto& e : enumerate_profile(k, n))
        if (e.m == m) ++c;
    return c;
}

/* B(n): signed count over all k and m.  The minimal qualifying weight for
 * profile k is 2(1+...+(k-1)) + k = k^2, so only k with k^2 <= n contribute. */
inline long b_oracle(long n)
{
    long c = 0;
    for (long k = 0; k * k <= n; ++k)
        for (const auto& e : enumerate_profile(k, n)) c += e.sign;
    return c;
}

// Bbar(n): as b_oracle but each partition weighted by (-1)^{m+k}.
inline long bbar_oracle(long n)
{
    long c = 0;
    for (long k = 0; k * k <= n; ++k)
        for (const auto& e : enumerate_profile(k, n)) {
            const int w = ((e.m + k) % 2 == 0) ? +1 : -1;
            c += w * e.sign;
        }
    return c;
}

}  // namespace qident

#endif
