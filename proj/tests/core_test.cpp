#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rotalg/angle.hpp"
#include "rotalg/rational.hpp"
#include "rotalg/theta.hpp"

using namespace rotalg;

namespace {

// Independent CF oracle: run the classical algorithm on long double values.
// Only trustworthy for a handful of terms, which is all the frozen expected
// values below need.
std::vector<long long> cf_oracle(long double x, int depth) {
    std::vector<long long> out;
    for (int i = 0; i < depth; ++i) {
        long long a = static_cast<long long>(std::floor(x));
        out.push_back(a);
        x = 1.0L / (x - a);
    }
    return out;
}

}  // namespace

TEST_CASE("rational arithmetic canonical form") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(7, 3)).mod1() == Rational(1, 3));
    CHECK((Rational(-1, 3)).mod1() == Rational(2, 3));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK_THROWS_AS(Rational(1, 0), ParameterError);
}

TEST_CASE("theta golden continued fraction is all ones, period 1") {
    Theta g = Theta::golden();
    auto cf = cf_expand(g, 12);
    REQUIRE(cf.terms.size() == 12);
    CHECK(cf.terms[0] == 0);
    for (std::size_t i = 1; i < cf.terms.size(); ++i) CHECK(cf.terms[i] == 1);
    CHECK(cf.exact);
    CHECK(cf.preperiod == 1);
    REQUIRE(cf.period.size() == 1);
    CHECK(cf.period[0] == 1);

    auto oracle = cf_oracle(g.value_ld(), 10);
    for (int i = 0; i < 10; ++i) CHECK(cf.terms[i] == oracle[i]);
}

TEST_CASE("theta sqrt(2)-1 continued fraction is all twos") {
    Theta s = Theta::quadratic(-1, 1, 2, 1);
    auto cf = cf_expand(s, 8);
    CHECK(cf.terms[0] == 0);
    for (std::size_t i = 1; i < cf.terms.size(); ++i) CHECK(cf.terms[i] == 2);
    CHECK(cf.preperiod == 1);
    REQUIRE(cf.period.size() == 1);
    CHECK(cf.period[0] == 2);
}

TEST_CASE("rational theta rejected at construction") {
    CHECK_THROWS_AS(Theta::quadratic(1, 0, 5, 2), ParameterError);
    // d = 4 is a perfect square -> rational
    CHECK_THROWS_AS(Theta::quadratic(0, 1, 4, 3), ParameterError);
    CHECK_THROWS_AS(Theta::quadratic(3, 1, 5, 2), ParameterError);  // >= 1
    CHECK_THROWS_AS(Theta::quadratic(-3, 1, 5, 2), ParameterError); // <= 0
}

TEST_CASE("square part of d folds into q") {
    // (0 + 1*sqrt(8))/5 = (0 + 2*sqrt(2))/5
    Theta t = Theta::quadratic(0, 1, 8, 5);
    CHECK(t.d() == 2);
    CHECK(t.q() == 2);
    CHECK(t.equals(Theta::quadratic(0, 2, 2, 5)));
}

TEST_CASE("golden convergents match the recursion oracle") {
    Theta g = Theta::golden();
    auto cs = convergents(g, 8);
    std::vector<std::pair<long long, long long>> expected = {
        {0, 1}, {1, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 8}, {8, 13}, {13, 21}};
    REQUIRE(cs.size() == expected.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK(cs[i].first == expected[i].first);
        CHECK(cs[i].second == expected[i].second);
    }
}

TEST_CASE("convergents: determinant identity and quadratic approximation") {
    for (Theta t : {Theta::golden(), Theta::quadratic(-1, 1, 2, 1),
                    Theta::quadratic(1, 1, 7, 4)}) {
        auto cs = convergents(t, 14);
        for (std::size_t k = 1; k < cs.size(); ++k) {
            long long det =
                cs[k].first * cs[k - 1].second - cs[k - 1].first * cs[k].second;
            CHECK(std::llabs(det) == 1);
            if (k >= 2) CHECK(cs[k].second > cs[k - 1].second);
            long double err = std::fabs(t.value_ld() -
                                        static_cast<long double>(cs[k].first) / cs[k].second);
            CHECK(err < 1.0L / (static_cast<long double>(cs[k].second) * cs[k].second));
        }
    }
}

TEST_CASE("golden: |theta - 3/5| < 1/25") {
    CHECK(std::fabs(Theta::golden().value() - 3.0 / 5.0) < 1.0 / 25.0);
}

TEST_CASE("cf reconstruction reproduces the quadratic value") {
    // Rebuild the numeric value from preperiod + period by evaluating a long
    // unrolled expansion; the tail contributes less than 1/q_k^2.
    for (Theta t : {Theta::golden(), Theta::quadratic(-1, 1, 2, 1),
                    Theta::quadratic(1, 2, 3, 6), Theta::quadratic(0, 1, 61, 9)}) {
        auto cs = convergents(t, 16);
        auto [h, k] = cs.back();
        long double rebuilt = static_cast<long double>(h) / k;
        double bound = std::max(1.0 / (static_cast<double>(k) * k), 1e-17);
        CHECK(std::fabs(static_cast<double>(t.value_ld() - rebuilt)) < bound);
    }
}

TEST_CASE("decimal theta: depth cap raises precision-exhausted") {
    Theta d = Theta::decimal("0.6180339887", 12);
    auto cf = cf_expand(d, 12);
    CHECK(cf.terms[0] == 0);
    for (std::size_t i = 1; i < 12; ++i) CHECK(cf.terms[i] == 1);
    CHECK_FALSE(cf.exact);
    CHECK_THROWS_AS(cf_expand(d, 13), PrecisionError);
    // digits run out before a generous cap
    Theta shallow = Theta::decimal("0.5", 40);
    CHECK_THROWS_AS(cf_expand(shallow, 40), PrecisionError);
}

TEST_CASE("theta parse grammar") {
    CHECK(Theta::parse("golden").equals(Theta::golden()));
    CHECK(Theta::parse("quad:(-1,1,2,1)").equals(Theta::quadratic(-1, 1, 2, 1)));
    Theta d = Theta::parse("dec:0.6180339887:depth=40");
    CHECK(d.is_decimal());
    CHECK(d.cf_depth_cap() == 40);
    CHECK_THROWS_AS(Theta::parse("bogus"), ParameterError);
    CHECK_THROWS_AS(Theta::parse("dec:0.0"), ParameterError);
}

TEST_CASE("one_minus is exact and involutive") {
    Theta g = Theta::golden();
    Theta og = g.one_minus();
    CHECK(std::fabs(og.value() + g.value() - 1.0) < 1e-15);
    CHECK(og.one_minus().equals(g));
    Theta d = Theta::decimal("0.381966", 10);
    CHECK(std::fabs(d.one_minus().value() - 0.618034) < 1e-12);
}

TEST_CASE("floor_scaled is exact for large multiples") {
    Theta g = Theta::golden();
    for (long long k : {1LL, 2LL, 3LL, 1000LL, 832040LL, -5LL, -832040LL}) {
        long double prod = static_cast<long double>(k) * g.value_ld();
        long long m = g.floor_scaled(k);
        CHECK(static_cast<long double>(m) <= prod);
        CHECK(prod < static_cast<long double>(m + 1));
        long double f = g.frac_scaled(k);
        CHECK(f >= 0.0L);
        CHECK(f < 1.0L);
    }
}

TEST_CASE("rotate: group action on AngleZT") {
    Theta g = Theta::golden();
    AngleZT x = AngleZT::of(1, 2, 0);
    CHECK(rotate(x, 3, g) == AngleZT::of(1, 2, 3));
    CHECK(rotate(x, 0, g) == x);
    CHECK(rotate(rotate(AngleZT::of(0, 1, 0), 1, g), -1, g) == AngleZT::of(0, 1, 0));
    // free action: rotate(x, n) == x forces n = 0
    for (long long n : {-3LL, -1LL, 1LL, 7LL}) CHECK(rotate(x, n, g) != x);
}

TEST_CASE("AngleZT equality reduces a mod 1") {
    CHECK(AngleZT(Rational(3, 2), 1) == AngleZT(Rational(1, 2), 1));
    CHECK(AngleZT(Rational(-1, 2), 0) == AngleZT(Rational(1, 2), 0));
    Theta g = Theta::golden();
    double t = AngleZT(Rational(1, 2), 2).turns(g);
    double expect = std::fmod(0.5 + 2.0 * g.value(), 1.0);
    CHECK(std::fabs(t - expect) < 1e-14);
}
