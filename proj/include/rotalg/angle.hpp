#pragma once

#include <cmath>
#include <string>

#include "rotalg/rational.hpp"
#include "rotalg/theta.hpp"

namespace rotalg {

// Exact circle point a + b*theta (in turns), a rational reduced mod 1.
// Since theta is irrational the representation is unique, so orbit questions
// reduce to integer arithmetic on (a, b).
struct AngleZT {
    Rational a;       // in [0, 1)
    long long b = 0;  // coefficient of theta

    AngleZT() = default;
    AngleZT(Rational a_, long long b_) : a(a_.mod1()), b(b_) {}
    static AngleZT of(long long num, long long den, long long b_ = 0) {
        return AngleZT(Rational(num, den), b_);
    }

    friend bool operator==(const AngleZT& x, const AngleZT& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const AngleZT& x, const AngleZT& y) { return !(x == y); }
    friend bool operator<(const AngleZT& x, const AngleZT& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }

    // Numeric position in [0, 1); the integer part of b*theta is removed
    // exactly before any floating arithmetic.
    double turns(const Theta& theta) const {
        long double t = static_cast<long double>(theta.frac_scaled(b)) + a.to_long_double();
        if (t >= 1.0L) t -= 1.0L;
        return static_cast<double>(t);
    }

    std::string str() const {
        if (b == 0) return a.str();
        return a.str() + (b > 0 ? "+" : "") + std::to_string(b) + "t";
    }
};

// phi^n(x) = x + n*theta.
inline AngleZT rotate(const AngleZT& x, long long n, const Theta& /*theta*/) {
    return AngleZT(x.a, x.b + n);
}

// Circle point known only as a decimal, with its own orbit-matching tolerance.
struct GenericAngle {
    double t = 0.0;            // turns, in [0, 1)
    double eps_orbit = 1e-9;

    GenericAngle() = default;
    explicit GenericAngle(double t_, double eps = 1e-9) : t(t_ - std::floor(t_)), eps_orbit(eps) {}
};

// Circular distance in turns.
inline double circ_dist(double x, double y) {
    double d = std::fabs(x - y);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

}  // namespace rotalg
