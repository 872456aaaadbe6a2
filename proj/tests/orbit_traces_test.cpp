#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rotalg/orbit_traces.hpp"
#include "rotalg/rng.hpp"

using namespace rotalg;

namespace {

const Theta kGolden = Theta::golden();
const AngleZT kMinusOne = AngleZT::of(1, 2, 0);  // z = -1 is half a turn

ZeroSet random_exact_zeroset(std::uint64_t seed) {
    ZeroSet y;
    int n = 1 + static_cast<int>(uniform01(seed, 0) * 4);
    for (int i = 0; i < n; ++i) {
        long long num = static_cast<long long>(uniform01(seed, 3 * i + 1) * 7);
        long long den = 7 + static_cast<long long>(uniform01(seed, 3 * i + 2) * 5);
        long long b = static_cast<long long>(uniform01(seed, 3 * i + 3) * 9) - 4;
        AngleZT p(Rational(num, den), b);
        if (std::find(y.exact_points.begin(), y.exact_points.end(), p) ==
            y.exact_points.end())
            y.exact_points.push_back(p);
    }
    return y;
}

}  // namespace

TEST_CASE("partition: one orbit class with exponents [0,3]") {
    ZeroSet y = ZeroSet::of({kMinusOne, rotate(kMinusOne, 3, kGolden)});
    auto part = partition_orbits(y, kGolden, 8);
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0].exponents == std::vector<long long>{0, 3});
    CHECK_FALSE(part.classes[0].within_horizon);
    CHECK(part.classes[0].rep.zt == kMinusOne);
}

TEST_CASE("partition: distinct a-components give distinct classes") {
    ZeroSet y = ZeroSet::of({AngleZT::of(1, 2, 0), AngleZT::of(1, 3, 0)});
    auto part = partition_orbits(y, kGolden, 8);
    CHECK(part.classes.size() == 2);
}

TEST_CASE("partition: singleton") {
    auto part = partition_orbits(ZeroSet::of({kMinusOne}), kGolden, 8);
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0].exponents.size() == 1);
}

TEST_CASE("partition is invariant under reordering of the input") {
    ZeroSet y1, y2;
    y1.exact_points = {AngleZT::of(1, 2, 7), AngleZT::of(1, 3, 0), AngleZT::of(1, 2, 0),
                       AngleZT::of(1, 2, 2)};
    y2.exact_points = {AngleZT::of(1, 2, 2), AngleZT::of(1, 2, 0), AngleZT::of(1, 2, 7),
                       AngleZT::of(1, 3, 0)};
    auto p1 = partition_orbits(y1, kGolden, 8);
    auto p2 = partition_orbits(y2, kGolden, 8);
    REQUIRE(p1.classes.size() == p2.classes.size());
    for (std::size_t i = 0; i < p1.classes.size(); ++i)
        CHECK(p1.classes[i].exponents == p2.classes[i].exponents);
}

TEST_CASE("duplicate points rejected") {
    ZeroSet y = ZeroSet::of({kMinusOne, kMinusOne});
    CHECK_THROWS_AS(partition_orbits(y, kGolden, 4), ParameterError);
}

TEST_CASE("is_simple on the fixture table") {
    CHECK(is_simple(ZeroSet::of({kMinusOne}), kGolden, 64) == SimplicityVerdict::simple);
    ZeroSet rel = ZeroSet::of({kMinusOne, rotate(kMinusOne, 5, kGolden)});
    CHECK(is_simple(rel, kGolden, 64) == SimplicityVerdict::not_simple);
    ZeroSet two = ZeroSet::of({AngleZT::of(1, 2, 0), AngleZT::of(1, 3, 0)});
    CHECK(is_simple(two, kGolden, 64) == SimplicityVerdict::simple);
}

TEST_CASE("generic zeros never yield an unconditional simple") {
    ZeroSet y;
    y.generic_points = {GenericAngle(0.123456)};
    CHECK(is_simple(y, kGolden, 32) == SimplicityVerdict::simple_within_horizon);

    // a generic copy of phi^3(-1) collides with the exact class within horizon
    ZeroSet mix;
    mix.exact_points = {kMinusOne};
    double t3 = rotate(kMinusOne, 3, kGolden).turns(kGolden);
    mix.generic_points = {GenericAngle(t3 + 2e-10)};
    CHECK(is_simple(mix, kGolden, 32) == SimplicityVerdict::not_simple);
}

TEST_CASE("decimal theta downgrades the verdict to within-horizon") {
    Theta dec = Theta::decimal("0.6180339887", 20);
    CHECK(is_simple(ZeroSet::of({kMinusOne}), dec, 32) ==
          SimplicityVerdict::simple_within_horizon);
}

TEST_CASE("trace dimension formula") {
    CHECK(trace_dimension(ZeroSet::of({kMinusOne}), kGolden).value == 1);
    ZeroSet y2 = ZeroSet::of({kMinusOne, rotate(kMinusOne, 3, kGolden)});
    CHECK(trace_dimension(y2, kGolden).value == 2);
    ZeroSet y3 = ZeroSet::of({kMinusOne, rotate(kMinusOne, 2, kGolden),
                              rotate(kMinusOne, 7, kGolden), AngleZT::of(1, 3, 0)});
    CHECK(trace_dimension(y3, kGolden).value == 3);
}

TEST_CASE("empty zero set is the invertible-gamma case") {
    auto dim = trace_dimension(ZeroSet{}, kGolden);
    CHECK(dim.value == 1);
    CHECK(dim.note.find("invertible") != std::string::npos);
}

TEST_CASE("arc zero sets: not simple, dimension infinite") {
    ZeroSet y;
    y.arcs = {Arc{0.2, 0.1}};
    CHECK(is_simple(y, kGolden, 16) == SimplicityVerdict::not_simple);
    auto dim = trace_dimension(y, kGolden);
    CHECK(dim.kind == TraceDimension::Kind::infinite);
    // an extremely short arc that no rotate within a tiny horizon can meet
    ZeroSet tiny;
    tiny.arcs = {Arc{0.2, 1e-9}};
    CHECK(trace_dimension(tiny, kGolden, 2).kind == TraceDimension::Kind::unknown);
}

TEST_CASE("simplicity iff trace dimension one (random exact fixtures)") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        ZeroSet y = random_exact_zeroset(s);
        bool simple = is_simple(y, kGolden, 64) == SimplicityVerdict::simple;
        CHECK(simple == (trace_dimension(y, kGolden).value == 1));
    }
}

TEST_CASE("extreme traces of a two-point orbit segment") {
    ZeroSet y = ZeroSet::of({kMinusOne, rotate(kMinusOne, 3, kGolden)});
    auto traces = extreme_traces(y, kGolden);
    REQUIRE(traces.size() == 2);
    CHECK(traces[0].haar_weight == 1.0);
    CHECK(traces[0].atoms.empty());
    REQUIRE(traces[1].atoms.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(traces[1].atoms[i].weight == doctest::Approx(1.0 / 3.0));
        CHECK(traces[1].atoms[i].point.zt ==
              rotate(kMinusOne, static_cast<long long>(i) + 1, kGolden));
    }
}

TEST_CASE("extreme traces: unique trace case is Haar only") {
    auto traces = extreme_traces(ZeroSet::of({kMinusOne}), kGolden);
    REQUIRE(traces.size() == 1);
    CHECK(traces[0].haar_weight == 1.0);
}

TEST_CASE("segment exponents (0,2) give two atoms of weight 1/2") {
    ZeroSet y = ZeroSet::of({kMinusOne, rotate(kMinusOne, 2, kGolden)});
    auto traces = extreme_traces(y, kGolden);
    REQUIRE(traces.size() == 2);
    REQUIRE(traces[1].atoms.size() == 2);
    CHECK(traces[1].atoms[0].weight == 0.5);
    CHECK(traces[1].atoms[1].weight == 0.5);
}

TEST_CASE("extreme trace count equals trace dimension; all invariant") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        ZeroSet y = random_exact_zeroset(s + 1000);
        auto traces = extreme_traces(y, kGolden);
        CHECK(static_cast<int>(traces.size()) == trace_dimension(y, kGolden).value);
        for (const auto& mu : traces) {
            CHECK(std::fabs(mu.total_mass() - 1.0) < 1e-12);
            CHECK(verify_trace_invariance(mu, y, kGolden, 6) <= 1e-10);
        }
    }
}

TEST_CASE("extreme_traces rejects generic points") {
    ZeroSet y;
    y.generic_points = {GenericAngle(0.25)};
    CHECK_THROWS_AS(extreme_traces(y, kGolden), PreconditionError);
}

TEST_CASE("Haar measure is rotation invariant for any zero set") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        ZeroSet y = random_exact_zeroset(s + 50);
        CHECK(verify_trace_invariance(MeasureCombo::haar(), y, kGolden, 10) <= 1e-10);
    }
}

TEST_CASE("an atom at a non-orbit point is caught by some test function") {
    ZeroSet y = ZeroSet::of({kMinusOne});
    MeasureCombo mu;
    mu.atoms = {{PointRef::of(AngleZT::of(0, 1, 0)), 1.0}};
    CHECK(verify_trace_invariance(mu, y, kGolden, 8) > 0.1);
}
