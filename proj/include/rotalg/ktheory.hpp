#pragma once

#include <string>
#include <vector>

#include "rotalg/orbit_traces.hpp"
#include "rotalg/theta.hpp"

namespace rotalg {

// (theta, gamma) reduced to what classification sees: theta and the zero set.
struct AlgebraSpec {
    Theta theta;
    ZeroSet zeros;
};

struct KGroups {
    int k1_rank = 1;
    int k0_rank = 0;                 // n + 1 for finite Y with n points
    std::string k0_descriptor;       // set for infinite/empty Y
    int kernel_rank = 0;             // rank of C(Y,Z)/Z
    std::string image_lattice;       // "Z+Z*theta"
    std::string positivity;          // "x > 0 iff rho(x) > 0 or x = 0"
    std::string note;
};

KGroups compute_kgroups(const ZeroSet& y, const Theta& theta);

// Element of K0 split as kernel part (integer vector modulo the constant
// vector) plus trace pairing a + b*theta.
struct K0Element {
    std::vector<long long> kernel_part;
    long long pair_a = 0;
    long long pair_b = 0;

    static K0Element unit() { return {{}, 1, 0}; }
    bool kernel_trivial() const;
    K0Element operator+(const K0Element& o) const;
    K0Element scaled(long long n) const;
};

// Positivity in the ordered K0: zero, or rho(x) = a + b*theta > 0 (exact for
// quadratic theta; decimal theta throws PrecisionError near zero).
bool is_positive(const K0Element& x, const Theta& theta);

enum class ClassifyResult { yes, no, unknown };

struct ClassifyVerdict {
    ClassifyResult result = ClassifyResult::unknown;
    std::string witness;
    bool within_depth = false;  // decision rests on a truncated decimal CF
};

// theta1 = +-theta2 mod Z and matching kernel groups; preconditions: both
// specs simple.
ClassifyVerdict classify_isomorphic(const AlgebraSpec& s1, const AlgebraSpec& s2);

// GL(2,Z)-orbit equivalence of the thetas (continued-fraction tail
// equivalence, exact for quadratic kinds) plus the kernel-group comparison.
ClassifyVerdict classify_morita(const AlgebraSpec& s1, const AlgebraSpec& s2,
                                int cf_depth);

}  // namespace rotalg
