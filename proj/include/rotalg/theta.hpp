#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rotalg/errors.hpp"
#include "rotalg/rational.hpp"

namespace rotalg {

// The rotation parameter: an irrational number in (0,1), stored either exactly
// as a quadratic irrational (p + q*sqrt(d))/r or as a capped-precision decimal.
// All orbit and classification decisions that need exactness are only
// unconditional for the quadratic kind; decimal-derived answers are flagged
// "within horizon" by callers.
class Theta {
public:
    enum class Kind { quadratic, decimal };

    struct ContinuedFraction {
        std::vector<long long> terms;     // unrolled partial quotients, a0 = 0
        std::size_t preperiod = 0;        // quadratic kind only
        std::vector<long long> period;    // quadratic kind only, minimal
        bool exact = false;               // true iff (preperiod, period) are meaningful
    };

    static Theta quadratic(long long p, long long q, long long d, long long r);
    static Theta decimal(const std::string& digits, int cf_depth_cap);
    static Theta golden();  // (sqrt(5) - 1)/2

    // Grammar: "golden" | "quad:(p,q,d,r)" | "dec:0.6180339887:depth=40"
    static Theta parse(const std::string& spec);

    Kind kind() const { return kind_; }
    bool is_decimal() const { return kind_ == Kind::decimal; }

    // Canonical quadratic components (q > 0 ... see normalization: r > 0,
    // gcd(p,q,r) = 1, d squarefree).  Only valid for the quadratic kind.
    long long p() const { return p_; }
    long long q() const { return q_; }
    long long d() const { return d_; }
    long long r() const { return r_; }
    int cf_depth_cap() const { return cf_depth_cap_; }
    // number of stored fractional digits (decimal kind)
    int decimal_precision() const { return static_cast<int>(dec_digits_.size()); }

    double value() const { return static_cast<double>(value_ld()); }
    long double value_ld() const;

    // floor(k * theta), computed exactly for the quadratic kind.
    long long floor_scaled(long long k) const;
    // frac(k * theta) in [0,1); the integer part is removed exactly first.
    long double frac_scaled(long long k) const;

    // Continued fraction to `depth` terms.  The quadratic kind computes one
    // preperiod plus one minimal period and unrolls; the decimal kind throws
    // PrecisionError when depth exceeds cf_depth_cap or the digits run out.
    const ContinuedFraction& cf(int depth) const;

    // Convergents p_k/q_k, k = 0..n-1.
    std::vector<std::pair<long long, long long>> convergents(int n) const;

    // 1 - theta, again in (0,1).
    Theta one_minus() const;

    // Exact representation equality (canonical quadratic forms; decimals
    // compare digits and cap).
    bool equals(const Theta& other) const;

    std::string str() const;

private:
    Theta() = default;
    void normalize_quadratic();
    void compute_cf_quadratic() const;
    void compute_cf_decimal(int depth) const;

    Kind kind_ = Kind::quadratic;
    // quadratic: (p + q*sqrt(d)) / r
    long long p_ = 0, q_ = 0, d_ = 0, r_ = 1;
    // decimal: exact rational num/den read off the digit string
    long long dec_num_ = 0, dec_den_ = 1;
    std::string dec_digits_;
    int cf_depth_cap_ = 0;

    mutable ContinuedFraction cf_;
    mutable bool cf_ready_ = false;
    mutable int cf_depth_done_ = 0;
};

// Spec-facing operation wrappers.
Theta::ContinuedFraction cf_expand(const Theta& theta, int depth);
std::vector<std::pair<long long, long long>> convergents(const Theta& theta, int n);

// sign(a + b*sqrt(d)) for nonsquare d >= 2, exact.
int sign_quad(long long a, long long b, long long d);

}  // namespace rotalg
