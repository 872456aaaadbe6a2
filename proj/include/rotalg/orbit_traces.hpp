#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotalg/angle.hpp"
#include "rotalg/theta.hpp"

namespace rotalg {

// Closed arc of positive length on the circle, in turns; represents an
// uncountable zero set by its endpoints only.
struct Arc {
    double lo = 0.0;   // in [0, 1)
    double len = 0.0;  // in (0, 1)
};

// The zero set Y of gamma.  Exact points live on the lattice Z + Z*theta,
// generic points carry a decimal coordinate and an orbit tolerance.
struct ZeroSet {
    std::vector<AngleZT> exact_points;
    std::vector<GenericAngle> generic_points;
    std::vector<Arc> arcs;

    static ZeroSet of(std::initializer_list<AngleZT> pts) {
        ZeroSet y;
        y.exact_points.assign(pts);
        return y;
    }
    bool empty() const {
        return exact_points.empty() && generic_points.empty() && arcs.empty();
    }
    bool all_exact() const { return generic_points.empty() && arcs.empty(); }
    // points pairwise distinct (exact equality / eps_orbit separation)
    void validate(const Theta& theta) const;
};

// Either an exact or a generic circle point (measure atoms, class reps).
struct PointRef {
    bool exact = true;
    AngleZT zt;
    GenericAngle g;

    static PointRef of(const AngleZT& p) { return {true, p, {}}; }
    static PointRef of(const GenericAngle& p) { return {false, {}, p}; }
    double turns(const Theta& theta) const { return exact ? zt.turns(theta) : g.t; }
    std::string str() const { return exact ? zt.str() : "g:" + std::to_string(g.t); }
};

struct OrbitClass {
    PointRef rep;                      // base point (smallest exponent)
    std::vector<long long> exponents;  // strictly increasing, starts at 0
    bool within_horizon = false;       // membership decided only up to |n| <= horizon
};

struct OrbitPartition {
    std::vector<OrbitClass> classes;
    int horizon = 0;
};

enum class SimplicityVerdict { simple, not_simple, simple_within_horizon };

struct MeasureAtom {
    PointRef point;
    double weight = 0.0;
};

// haar_weight * Haar + sum of point masses; probability when weights sum to 1.
struct MeasureCombo {
    double haar_weight = 0.0;
    std::vector<MeasureAtom> atoms;

    static MeasureCombo haar() { return {1.0, {}}; }
    double total_mass() const;
};

struct TraceDimension {
    enum class Kind { finite, infinite, unknown } kind = Kind::finite;
    int value = 0;               // meaningful for finite
    bool within_horizon = false;
    std::string note;
};

OrbitPartition partition_orbits(const ZeroSet& y, const Theta& theta, int horizon);

SimplicityVerdict is_simple(const ZeroSet& y, const Theta& theta, int horizon);

TraceDimension trace_dimension(const ZeroSet& y, const Theta& theta, int horizon = 64);

// Haar plus the uniform atomic measures on orbit segments between consecutive
// zeros; list length equals trace_dimension for finite exact Y.
std::vector<MeasureCombo> extreme_traces(const ZeroSet& y, const Theta& theta);

// Max residual |int f(phi^{-1} z) dmu - int f dmu| over the test family:
// the constant 1 and hat-cutoff * e^{2 pi i k t} for k = 0..test_degree,
// where the hat vanishes on Y.
double verify_trace_invariance(const MeasureCombo& mu, const ZeroSet& y,
                               const Theta& theta, int test_degree);

}  // namespace rotalg
