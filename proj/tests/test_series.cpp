#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qident/series.hpp"

using namespace qident;

namespace {

SeriesZ make(const std::vector<std::pair<long, Bigint>>& terms, long lo, long order)
{
    return SeriesZ::from_terms(terms, lo, order);
}

// Random sparse series for the algebraic-law checks.
SeriesZ random_series(std::mt19937& rng)
{
    std::uniform_int_distribution<long> lo_d(-6, 3);
    std::uniform_int_distribution<long> len_d(0, 14);
    std::uniform_int_distribution<int> coeff_d(-9, 9);
    const long lo = lo_d(rng);
    const long order = lo + len_d(rng);
    SeriesZ s(lo, order);
    for (long e = lo; e < order; ++e)
        if (rng() % 3 == 0) s.ref(e) = coeff_d(rng);
    return s;
}

}  // namespace

TEST_CASE("from_terms builds exactly the requested coefficients")
{
    const auto zero = make({}, 0, 5);
    REQUIRE(zero.min_exp() == 0);
    REQUIRE(zero.order() == 5);
    REQUIRE(zero.is_zero());

    const auto one = make({{0, 1}}, 0, 5);
    REQUIRE(one.coefficient(0) == 1);
    REQUIRE(one.coefficient(4) == 0);

    const auto laurent = make({{-1, 1}, {3, -2}}, -2, 6);
    REQUIRE(laurent.coefficient(-2) == 0);
    REQUIRE(laurent.coefficient(-1) == 1);
    REQUIRE(laurent.coefficient(3) == -2);

    REQUIRE_THROWS_AS(make({{7, 1}}, 0, 5), std::out_of_range);
    REQUIRE_THROWS_AS(make({{-1, 1}}, 0, 5), std::out_of_range);
}

TEST_CASE("addition is coefficient-wise on the common window")
{
    const auto a = make({{0, 1}, {1, -1}}, 0, 5);  // 1 - q
    const auto b = make({{1, 1}}, 0, 5);           // q
    REQUIRE((a + b).identical_to(make({{0, 1}}, 0, 5)));

    const auto zero = make({}, 0, 5);
    REQUIRE((zero + a).identical_to(a));

    // Laurent cancellation: q^-1 + (-q^-1 + q^2) = q^2
    const auto c = make({{-1, 1}}, -1, 5);
    const auto d = make({{-1, -1}, {2, 1}}, -1, 5);
    REQUIRE((c + d).identical_to(make({{2, 1}}, -1, 5)));

    // window of a sum is the intersection of known regions
    const auto wide = make({{-3, 4}}, -3, 9);
    const auto sum = a + wide;
    REQUIRE(sum.min_exp() == -3);
    REQUIRE(sum.order() == 5);
}

TEST_CASE("multiplication: Cauchy product with the truncation rule")
{
    // (1 - q) * (1 + q + q^2 + ...) = 1
    const auto geo = div_binomial(SeriesZ::unit(8), Bigint(1), 1);
    const auto lhs = make({{0, 1}, {1, -1}}, 0, 8) * geo;
    REQUIRE(lhs == SeriesZ::unit(8));

    const auto x = make({{0, 1}, {2, 5}, {3, -1}}, 0, 7);
    REQUIRE((x * SeriesZ::unit(7)).identical_to(x));

    // (1-q)(1-q^2) = 1 - q - q^2 + q^3
    const auto p = make({{0, 1}, {1, -1}}, 0, 9) * make({{0, 1}, {2, -1}}, 0, 9);
    REQUIRE(p == make({{0, 1}, {1, -1}, {2, -1}, {3, 1}}, 0, 9));

    SECTION("result window follows min(x.order + y.min, y.order + x.min)")
    {
        const auto u = make({{-2, 1}}, -2, 4);
        const auto v = make({{1, 1}}, 1, 9);
        const auto w = u * v;
        REQUIRE(w.min_exp() == -1);
        REQUIRE(w.order() == 5);  // min(4 + 1, 9 - 2)
        REQUIRE(w.coefficient(-1) == 1);
    }
}

TEST_CASE("div_binomial: linear-pass quotients")
{
    const auto geometric = div_binomial(SeriesZ::unit(6), Bigint(1), 1);
    REQUIRE(geometric.identical_to(make({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, 0, 6)));

    const auto exact = div_binomial(make({{0, 1}, {1, -1}}, 0, 6), Bigint(1), 1);
    REQUIRE(exact.identical_to(make({{0, 1}}, 0, 6)));

    const auto alt = div_binomial(SeriesZ::unit(7), Bigint(-1), 2);
    REQUIRE(alt.identical_to(make({{0, 1}, {2, -1}, {4, 1}, {6, -1}}, 0, 7)));

    REQUIRE_THROWS_AS(div_binomial(SeriesZ::unit(4), Bigint(1), 0), std::invalid_argument);
    REQUIRE_THROWS_AS(div_binomial(SeriesZ::unit(4), Bigint(1), -2), std::invalid_argument);
}

TEST_CASE("pochhammer products")
{
    REQUIRE(pochhammer<Bigint>({Bigint(1), 1, 0, 1}, 10) == SeriesZ::unit(11));
    REQUIRE(pochhammer<Bigint>({Bigint(1), 1, 2, 1}, 10) ==
            make({{0, 1}, {1, -1}, {2, -1}, {3, 1}}, 0, 11));
    REQUIRE(pochhammer<Bigint>({Bigint(-1), 1, 2, 1}, 10) ==
            make({{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 0, 11));
}

TEST_CASE("coefficient access never silently reads outside the window")
{
    const auto zero = make({}, 0, 5);
    REQUIRE(zero.coefficient(3) == 0);
    REQUIRE(make({{0, 1}, {1, -2}}, 0, 5).coefficient(1) == -2);
    REQUIRE_THROWS_AS(zero.coefficient(7), std::out_of_range);
    REQUIRE_THROWS_AS(make({{-1, 1}}, -1, 5).coefficient(-2), std::out_of_range);
}

TEST_CASE("ring laws on the tracked window")
{
    std::mt19937 rng(20240811);
    for (int round = 0; round < 300; ++round) {
        const auto a = random_series(rng);
        const auto b = random_series(rng);
        const auto c = random_series(rng);
        REQUIRE((a + b).identical_to(b + a));
        REQUIRE(((a + b) + c).identical_to(a + (b + c)));
        REQUIRE((a * b) == (b * a));
        REQUIRE(((a * b) * c) == (a * (b * c)));
        REQUIRE((a * (b + c)) == (a * b + a * c));
    }
}

TEST_CASE("div_binomial inverts multiplication by the binomial")
{
    std::mt19937 rng(7);
    for (int round = 0; round < 200; ++round) {
        const auto x = random_series(rng);
        const long e = 1 + static_cast<long>(rng() % 4);
        const Bigint c = (rng() % 2 == 0) ? 1 : -1;
        REQUIRE(mul_binomial(div_binomial(x, c, e), c, e).identical_to(x));
        REQUIRE(div_binomial(mul_binomial(x, c, e), c, e).identical_to(x));
    }
}

TEST_CASE("recomputing at higher order and re-truncating is the identity")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff_d(-9, 9);
    const long lo_order = 12;
    const long hi_order = 33;
    for (int round = 0; round < 100; ++round) {
        // inputs are exact Laurent polynomials, so both orders are honest
        SeriesZ a(-3, 5);
        SeriesZ b(-2, 6);
        for (long e = a.min_exp(); e < a.order(); ++e) a.ref(e) = coeff_d(rng);
        for (long e = b.min_exp(); e < b.order(); ++e) b.ref(e) = coeff_d(rng);
        const auto wide = [&](const SeriesZ& s, long order) {
            SeriesZ w(s.min_exp(), order);
            for (long e = s.min_exp(); e < s.order(); ++e) w.ref(e) = s.coefficient(e);
            return w;
        };
        const auto lo = div_binomial(wide(a, lo_order) * wide(b, lo_order), Bigint(1), 2);
        const auto hi = div_binomial(wide(a, hi_order) * wide(b, hi_order), Bigint(1), 2);
        REQUIRE(hi.truncated(lo.order()).identical_to(lo));
    }
}

TEST_CASE("pochhammer equals the fold of mul over its binomial factors")
{
    const long order = 25;
    for (long count : {0L, 1L, 3L, 6L}) {
        for (long step : {1L, 2L}) {
            const auto direct = pochhammer<Bigint>({Bigint(1), 1, count, step}, order);
            auto fold = SeriesZ::unit(order + 1);
            for (long i = 0; i < count; ++i) {
                const long e = 1 + i * step;
                if (e > order) break;
                fold = fold * make({{0, 1}, {e, -1}}, 0, order + 1);
            }
            REQUIRE(direct.identical_to(fold));
        }
    }
}

TEST_CASE("series over the polynomial domain")
{
    const PolyA a = PolyA::marker();
    REQUIRE((a * a).coeff(2) == 1);
    REQUIRE((a - a).is_zero());
    REQUIRE(PolyA(3).eval_at_unit(-1) == 3);
    REQUIRE((a * PolyA(-2)).eval_at_unit(-1) == 2);
    REQUIRE((PolyA(1) + a).str() == "1 + a");
    REQUIRE((PolyA(-1) * a * a).str() == "-a^2");

    // 1/(1 - a q^2) = 1 + a q^2 + a^2 q^4 + ...
    const auto s = div_binomial(SeriesA::unit(7), a, 2);
    REQUIRE(s.coefficient(0) == PolyA(1));
    REQUIRE(s.coefficient(2) == a);
    REQUIRE(s.coefficient(4) == a * a);
    REQUIRE(s.coefficient(5).is_zero());
    REQUIRE(s.coefficient(6) == a * a * a);
}
