#include "rotalg/ktheory.hpp"

#include <algorithm>
#include <cmath>

#include "rotalg/errors.hpp"

namespace rotalg {

KGroups compute_kgroups(const ZeroSet& y, const Theta& theta) {
    KGroups kg;
    kg.image_lattice = "Z+Z*theta";
    kg.positivity = "x > 0 iff rho(x) > 0 or x = 0";
    if (y.empty()) {
        // gamma invertible: the rotation algebra itself
        kg.k1_rank = 2;
        kg.k0_rank = 2;
        kg.k0_descriptor = "Z^2, order isomorphic to Z+Z*theta";
        kg.kernel_rank = 0;
        kg.note = "empty zero set: A_{theta,gamma} = A_theta";
        return kg;
    }
    kg.k1_rank = 1;
    if (y.arcs.empty()) {
        int n = static_cast<int>(y.exact_points.size() + y.generic_points.size());
        kg.k0_rank = n + 1;
        kg.kernel_rank = n - 1;
        return kg;
    }
    // connected components: arcs plus isolated points
    int comps = static_cast<int>(y.arcs.size() + y.exact_points.size() +
                                 y.generic_points.size());
    kg.k0_rank = comps + 1;
    kg.kernel_rank = comps - 1;
    kg.k0_descriptor = "C(Y,Z) + Z with C(Y,Z) of rank " + std::to_string(comps);
    kg.note = "infinite zero set: ranks counted by connected components";
    (void)theta;
    return kg;
}

bool K0Element::kernel_trivial() const {
    // zero in C(Y,Z)/Z means a constant vector
    for (std::size_t i = 1; i < kernel_part.size(); ++i)
        if (kernel_part[i] != kernel_part[0]) return false;
    return true;
}

K0Element K0Element::operator+(const K0Element& o) const {
    K0Element out = *this;
    if (out.kernel_part.size() < o.kernel_part.size())
        out.kernel_part.resize(o.kernel_part.size(), 0);
    for (std::size_t i = 0; i < o.kernel_part.size(); ++i)
        out.kernel_part[i] += o.kernel_part[i];
    out.pair_a += o.pair_a;
    out.pair_b += o.pair_b;
    return out;
}

K0Element K0Element::scaled(long long n) const {
    K0Element out = *this;
    for (auto& v : out.kernel_part) v *= n;
    out.pair_a *= n;
    out.pair_b *= n;
    return out;
}

bool is_positive(const K0Element& x, const Theta& theta) {
    bool zero = x.pair_a == 0 && x.pair_b == 0 && x.kernel_trivial();
    if (zero) return true;
    if (theta.is_decimal()) {
        long double val = static_cast<long double>(x.pair_a) +
                          static_cast<long double>(x.pair_b) * theta.value_ld();
        double tol = std::pow(10.0, -(std::max(theta.decimal_precision(), 5) - 4));
        if (std::fabs(static_cast<double>(val)) < tol)
            throw PrecisionError("sign of a + b*theta below decimal resolution");
        return val > 0;
    }
    // a + b*(p + q*sqrt(d))/r = ((a r + b p) + b q sqrt(d)) / r, r > 0
    long long lin = x.pair_a * theta.r() + x.pair_b * theta.p();
    return sign_quad(lin, x.pair_b * theta.q(), theta.d()) > 0;
}

namespace {

void require_simple(const AlgebraSpec& s, const char* who) {
    if (is_simple(s.zeros, s.theta, 64) == SimplicityVerdict::not_simple)
        throw PreconditionError(std::string(who) + ": spec is not simple");
}

// theta1 = +-theta2 mod Z, both in (0,1): equal or reflections of each other.
// Exact on quadratic forms; decimal pairs compare numerically to their
// resolution, reported as within-depth.
struct ThetaRelation {
    bool related = false;
    bool exact = true;
    std::string how;
};

ThetaRelation theta_pm_relation(const Theta& a, const Theta& b) {
    ThetaRelation rel;
    if (!a.is_decimal() && !b.is_decimal()) {
        if (a.equals(b)) { rel.related = true; rel.how = "theta1 = theta2"; }
        else if (a.equals(b.one_minus())) { rel.related = true; rel.how = "theta1 = -theta2 mod Z"; }
        return rel;
    }
    rel.exact = false;
    double tol = 1e-6;
    if (std::fabs(a.value() - b.value()) < tol) { rel.related = true; rel.how = "theta1 ~ theta2 (decimal)"; }
    else if (std::fabs(a.value() + b.value() - 1.0) < tol) { rel.related = true; rel.how = "theta1 ~ -theta2 mod Z (decimal)"; }
    return rel;
}

// Kernel groups C(Y,Z)/Z compared through the finite rank when both zero sets
// are finite; anything infinite is only compared by its coarse tag.
ClassifyResult compare_kernels(const ZeroSet& y1, const ZeroSet& y2, std::string* why) {
    if (y1.arcs.empty() && y2.arcs.empty()) {
        auto count = [](const ZeroSet& y) {
            return y.exact_points.size() + y.generic_points.size();
        };
        if (count(y1) == count(y2)) {
            *why = "|Y1| = |Y2| = " + std::to_string(count(y1));
            return ClassifyResult::yes;
        }
        *why = "rank mismatch: |Y1| = " + std::to_string(count(y1)) +
               ", |Y2| = " + std::to_string(count(y2));
        return ClassifyResult::no;
    }
    *why = "infinite zero set: kernel comparison not decided";
    return ClassifyResult::unknown;
}

std::vector<long long> minimal_rotation(std::vector<long long> v) {
    if (v.empty()) return v;
    std::vector<long long> best = v;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        if (v < best) best = v;
    }
    return best;
}

}  // namespace

ClassifyVerdict classify_isomorphic(const AlgebraSpec& s1, const AlgebraSpec& s2) {
    require_simple(s1, "classify_isomorphic");
    require_simple(s2, "classify_isomorphic");
    ClassifyVerdict v;
    v.within_depth = s1.theta.is_decimal() || s2.theta.is_decimal();
    auto rel = theta_pm_relation(s1.theta, s2.theta);
    if (!rel.related) {
        v.result = ClassifyResult::no;
        v.witness = "theta relation fails: theta1 != +-theta2 mod Z";
        return v;
    }
    std::string why;
    v.result = compare_kernels(s1.zeros, s2.zeros, &why);
    v.witness = rel.how + "; " + why;
    return v;
}

ClassifyVerdict classify_morita(const AlgebraSpec& s1, const AlgebraSpec& s2,
                                int cf_depth) {
    require_simple(s1, "classify_morita");
    require_simple(s2, "classify_morita");
    ClassifyVerdict v;
    std::string why;
    ClassifyResult kernels = compare_kernels(s1.zeros, s2.zeros, &why);
    if (kernels == ClassifyResult::no) {
        v.result = ClassifyResult::no;
        v.witness = why;
        return v;
    }

    bool dec = s1.theta.is_decimal() || s2.theta.is_decimal();
    v.within_depth = dec;
    if (!dec) {
        // Serret-type criterion: same GL(2,Z) orbit iff the periodic tails
        // agree up to cyclic rotation.
        auto c1 = s1.theta.cf(2), c2 = s2.theta.cf(2);
        auto p1 = minimal_rotation(c1.period), p2 = minimal_rotation(c2.period);
        bool tails = p1 == p2;
        if (!tails) {
            v.result = ClassifyResult::no;
            v.witness = "cf tails differ: periods never merge";
            return v;
        }
        v.result = kernels;  // yes or unknown
        v.witness = "cf tails agree (canonical period match); " + why;
        return v;
    }
    // Decimal thetas: compare expansions to depth; a full-prefix match is
    // evidence of a shared tail but only within the declared depth.
    try {
        auto t1 = s1.theta.cf(cf_depth).terms;
        auto t2 = s2.theta.cf(cf_depth).terms;
        for (std::size_t i = 0; i + 1 < std::min(t1.size(), t2.size()); ++i) {
            // look for a common tail at some shift pair within depth
            for (std::size_t j = 0; j + 1 < t2.size(); ++j) {
                std::size_t len = std::min(t1.size() - i, t2.size() - j);
                if (len < 8) continue;
                bool match = true;
                for (std::size_t k = 0; k < len && match; ++k)
                    match = t1[i + k] == t2[j + k];
                if (match) {
                    v.result = kernels;
                    v.witness = "cf tails agree to depth " + std::to_string(len) +
                                " (within depth); " + why;
                    return v;
                }
            }
        }
        v.result = ClassifyResult::unknown;
        v.witness = "no common cf tail found within depth " + std::to_string(cf_depth);
        return v;
    } catch (const PrecisionError& e) {
        v.result = ClassifyResult::unknown;
        v.witness = std::string("undecidable at depth: ") + e.what();
        return v;
    }
}

}  // namespace rotalg
