#include <catch2/catch_amalgamated.hpp>

#include "qident/bailey.hpp"
#include "qident/genfun.hpp"

using namespace qident;

TEST_CASE("beta_explicit: both pairs")
{
    REQUIRE(beta_explicit(BaileyPairId::PairA, 0, 10) == SeriesZ::unit(11));
    REQUIRE(beta_explicit(BaileyPairId::PairB, 0, 10) == SeriesZ::unit(11));

    // pair A, n = 1: q^{-1}/((1+q)(1+q^2)) = q^{-1}(1 - q + q^4 - q^5 + ...)
    const auto bA1 = beta_explicit(BaileyPairId::PairA, 1, 4);
    REQUIRE(bA1.min_exp() == -1);
    REQUIRE(bA1.coefficient(-1) == 1);
    REQUIRE(bA1.coefficient(0) == -1);
    REQUIRE(bA1.coefficient(1) == 0);
    REQUIRE(bA1.coefficient(2) == 0);
    REQUIRE(bA1.coefficient(3) == 1);
    REQUIRE(bA1.coefficient(4) == -1);

    // pair B, n = 1 against an independent Pochhammer quotient
    const long order = 6;
    auto oracle = pochhammer<Bigint>({Bigint(1), 1, 1, 1}, order);  // (q)_1
    oracle = -oracle;                                               // (-1)^1, shift n(n-1)/2 = 0
    oracle = div_pochhammer(oracle, {Bigint(1), 1, 2, 1});          // / (q)_2
    REQUIRE(beta_explicit(BaileyPairId::PairB, 1, order) == oracle);
}

TEST_CASE("alpha_explicit: n = 0 telescopes to 1 for both pairs")
{
    REQUIRE(alpha_explicit(BaileyPairId::PairB, 0, 10) == SeriesZ::unit(11).widened_below(-4));
    REQUIRE(alpha_explicit(BaileyPairId::PairA, 0, 10) == SeriesZ::unit(11).widened_below(-4));
}

TEST_CASE("alpha_explicit: pair B at n = 1 is -(2 + q + q^2 - q^3)")
{
    const auto a1 = alpha_explicit(BaileyPairId::PairB, 1, 20);
    REQUIRE(a1.coefficient(0) == -2);
    REQUIRE(a1.coefficient(1) == -1);
    REQUIRE(a1.coefficient(2) == -1);
    REQUIRE(a1.coefficient(3) == 1);
    for (long e = a1.min_exp(); e < a1.order(); ++e)
        if (e < 0 || e > 3) REQUIRE(bigint_is_zero(a1.coefficient(e)));

    // independent route: solve the pair relation for alpha_1 given beta_0, beta_1
    // alpha_1 = (q^2;q)_2 * (beta_1 - alpha_0 / ((q^2;q)_1 (q)_1))
    const long order = 20;
    auto correction = div_pochhammer(alpha_explicit(BaileyPairId::PairB, 0, order),
                                     {Bigint(1), 2, 1, 1});
    correction = div_pochhammer(correction, {Bigint(1), 1, 1, 1});
    auto solved = beta_explicit(BaileyPairId::PairB, 1, order).widened_below(correction.min_exp()) -
                  correction;
    solved = mul_binomial(mul_binomial(solved, Bigint(1), 2), Bigint(1), 3);  // * (q^2;q)_2
    REQUIRE(a1 == solved);
}

TEST_CASE("alpha_explicit i-loop bound: wider loops change nothing")
{
    for (auto id : {BaileyPairId::PairA, BaileyPairId::PairB})
        for (long n = 0; n <= 8; ++n)
            REQUIRE(alpha_explicit(id, n, 120, 10).identical_to(alpha_explicit(id, n, 120)));
}

TEST_CASE("pair relation holds on the common window")
{
    const auto trivial = verify_pair_definition(BaileyPairId::PairB, 0, 50);
    REQUIRE(trivial.size() == 1);
    REQUIRE(trivial[0].pass);

    for (auto id : {BaileyPairId::PairA, BaileyPairId::PairB}) {
        const auto reports = verify_pair_definition(id, 4, 120);
        REQUIRE(reports.size() == 5);
        for (const auto& r : reports) {
            INFO(r.check_id);
            REQUIRE(r.pass);
            REQUIRE(!r.first_mismatch.has_value());
        }
    }
}

TEST_CASE("lemma sides agree and match the coefficient tables")
{
    const auto [lb0, rb0] = bailey_lemma_sides(BaileyPairId::PairB, 0);
    REQUIRE(lb0 == SeriesZ::unit(1));
    REQUIRE(rb0 == SeriesZ::unit(1));

    const auto [lb, rb] = bailey_lemma_sides(BaileyPairId::PairB, 6);
    const auto b6 = lhs_28(6);
    REQUIRE(lb == b6);
    REQUIRE(rb == b6);

    const auto [la, ra] = bailey_lemma_sides(BaileyPairId::PairA, 6);
    const auto bbar6 = lhs_27(6);
    REQUIRE(la == bbar6);
    REQUIRE(ra == bbar6);

    for (auto id : {BaileyPairId::PairA, BaileyPairId::PairB}) {
        const auto [lhs, rhs] = bailey_lemma_sides(id, 150);
        REQUIRE(lhs == rhs);
        // Laurent intermediates notwithstanding, both sides are power series
        for (long e = rhs.min_exp(); e < 0; ++e) REQUIRE(bigint_is_zero(rhs.coefficient(e)));
        REQUIRE(lhs.min_exp() == 0);
    }
}

TEST_CASE("pair B lemma left side equals the squared-Pochhammer form termwise")
{
    const long order = 80;
    // sum_n (q)_n^2 q^{n^2} / (q)_{2n}
    SeriesZ sum(0, order + 1);
    for (long n = 0; n * n <= order; ++n) {
        auto t = pochhammer<Bigint>({Bigint(1), 1, n, 1}, order);
        t = t * pochhammer<Bigint>({Bigint(1), 1, n, 1}, order);
        t = t.truncated(order + 1).shifted(n * n).truncated(order + 1);
        t = div_pochhammer(t, {Bigint(1), 1, 2 * n, 1});
        sum = sum + t;
    }
    const auto [lhs, rhs] = bailey_lemma_sides(BaileyPairId::PairB, order);
    REQUIRE(lhs == sum);
    REQUIRE(rhs == sum);
}
