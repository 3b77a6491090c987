#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qident/genfun.hpp"

using namespace qident;

namespace {

SeriesZ make(const std::vector<std::pair<long, Bigint>>& terms, long order)
{
    return SeriesZ::from_terms(terms, 0, order);
}

}  // namespace

TEST_CASE("lhs_27: alternating base-q^2 Pochhammer sum")
{
    REQUIRE(lhs_27(0) == SeriesZ::unit(1));
    REQUIRE(lhs_27(6) ==
            make({{0, 1}, {1, -1}, {2, 1}, {3, 1}, {5, -2}}, 7));
}

TEST_CASE("lhs_28: the B generating series")
{
    REQUIRE(lhs_28(0) == SeriesZ::unit(1));
    REQUIRE(lhs_28(6) ==
            make({{0, 1}, {1, 1}, {2, -1}, {3, 1}, {6, -2}}, 7));
    REQUIRE(lhs_28(6).coefficient(1) == 1);
}

TEST_CASE("middle_37 equals lhs_27 termwise")
{
    REQUIRE(middle_37(0) == SeriesZ::unit(1));
    REQUIRE(middle_37(6).identical_to(lhs_27(6)));
    REQUIRE(middle_37(200).identical_to(lhs_27(200)));
}

TEST_CASE("genfun_k: bivariate per-k generating function")
{
    REQUIRE(genfun_k(0, 8).known_coefficient(0) == PolyA(1));
    for (long n = 1; n <= 8; ++n) REQUIRE(genfun_k(0, 8).known_coefficient(n).is_zero());

    // k = 1: q(1-q)/(1-aq^2) = q - q^2 + aq^3 - aq^4 + a^2 q^5 - a^2 q^6 ...
    const auto g1 = genfun_k(1, 6);
    const PolyA a = PolyA::marker();
    REQUIRE(g1.known_coefficient(0).is_zero());
    REQUIRE(g1.coefficient(1) == PolyA(1));
    REQUIRE(g1.coefficient(2) == PolyA(-1));
    REQUIRE(g1.coefficient(3) == a);
    REQUIRE(g1.coefficient(4) == -a);
    REQUIRE(g1.coefficient(5) == a * a);
    REQUIRE(g1.coefficient(6) == -(a * a));

    // k = 2: the a^0 q^4 coefficient counts the single partition {1,1,2}
    REQUIRE(genfun_k(2, 8).coefficient(4).coeff(0) == 1);
}

TEST_CASE("f_poly reproduces the printed monomial lists")
{
    using M = SignedMonomial;
    REQUIRE(f_poly(0) == std::vector<M>{{0, +1}});
    REQUIRE(f_poly(1) == std::vector<M>{{1, +1}, {2, -1}});
    REQUIRE(f_poly(2) == std::vector<M>{{4, +1}, {5, -1}, {6, -1}, {7, +1}});
    // both signed copies of x^12 are kept
    REQUIRE(f_poly(3) == std::vector<M>{{9, +1},
                                        {10, -1},
                                        {11, -1},
                                        {12, +1},
                                        {12, -1},
                                        {13, +1},
                                        {14, +1},
                                        {15, -1}});
}

TEST_CASE("f_poly signs follow part-count parity and sum to the numerator")
{
    for (long k = 1; k <= 8; ++k) {
        const auto monomials = f_poly(k);
        REQUIRE(monomials.size() == (1u << k));

        // sign rule: exponent k^2 + sum(S) has 2k-1+|S| parts
        for (const auto& m : monomials) REQUIRE((m.sign == +1 || m.sign == -1));

        // collapsing the list gives (q;q)_k q^{k^2}
        const long order = k * k + k * (k + 1) / 2 + 1;
        SeriesZ sum(0, order + 1);
        for (const auto& m : monomials)
            sum = sum + SeriesZ::from_terms({{m.exponent, Bigint(m.sign)}}, 0, order + 1);
        const auto numerator = pochhammer<Bigint>({Bigint(1), 1, k, 1}, order - k * k)
                                   .shifted(k * k);
        REQUIRE(sum.truncated(numerator.order()) == numerator);
    }
}

TEST_CASE("grading route and direct specialization commute")
{
    const long order = 60;
    const auto b_direct = b_table(order);
    const auto bbar_direct = bbar_table(order);
    const auto b_grading = b_table_via_grading(order);
    const auto bbar_grading = bbar_table_via_grading(order);
    for (long n = 0; n <= order; ++n) {
        REQUIRE(b_direct.values[n] == b_grading[n]);
        REQUIRE(bbar_direct.values[n] == bbar_grading[n]);
    }
}

TEST_CASE("coefficient tables match their series")
{
    const long order = 200;
    const auto bt = b_table(order);
    const auto bbt = bbar_table(order);
    const auto s28 = lhs_28(order);
    const auto s27 = lhs_27(order);
    REQUIRE(bt.values[0] == 1);
    REQUIRE(bbt.values[0] == 1);
    REQUIRE(bt.max_n() == order);
    for (long n = 0; n <= order; ++n) {
        REQUIRE(bt.values[n] == s28.coefficient(n));
        REQUIRE(bbt.values[n] == s27.coefficient(n));
    }

    const Bigint b_expected[] = {1, 1, -1, 1, 0, 0, -2};
    const Bigint bbar_expected[] = {1, -1, 1, 1, 0, -2, 0};
    for (long n = 0; n <= 6; ++n) {
        REQUIRE(bt.values[n] == b_expected[n]);
        REQUIRE(bbt.values[n] == bbar_expected[n]);
    }
    REQUIRE(b_table(0).values == std::vector<Bigint>{1});
}

TEST_CASE("outer sum terms start exactly at the square of their index")
{
    const long probe = 400;
    for (long n = 1; n <= 15; ++n) {
        const auto bt = b_sum_term(n, probe);
        const auto bbt = bbar_sum_term(n, probe);
        for (long e = 0; e < n * n; ++e) {
            REQUIRE(bigint_is_zero(bt.known_coefficient(e)));
            REQUIRE(bigint_is_zero(bbt.known_coefficient(e)));
        }
        REQUIRE(!bigint_is_zero(bt.coefficient(n * n)));
        REQUIRE(!bigint_is_zero(bbt.coefficient(n * n)));
    }
}
