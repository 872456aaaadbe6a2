#include "rotalg/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rotalg {

namespace {

using i128 = __int128;

long long isqrt_i128(i128 n) {
    if (n < 0) throw ParameterError("isqrt of negative");
    long long s = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
    while (s > 0 && i128(s) * s > n) --s;
    while (i128(s + 1) * (s + 1) <= n) ++s;
    return s;
}

bool is_perfect_square(long long n) {
    if (n < 0) return false;
    long long s = isqrt_i128(n);
    return s * s == n;
}

// Remove square factors: d = s^2 * d0 with d0 squarefree; returns (d0, s).
std::pair<long long, long long> squarefree_part(long long d) {
    long long s = 1;
    for (long long f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            s *= f;
        }
    }
    return {d, s};
}

int sign_ll(i128 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// floor division for long long
long long fdiv(i128 a, i128 b) {
    if (b < 0) { a = -a; b = -b; }
    i128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return static_cast<long long>(q);
}

}  // namespace

int sign_quad(long long a, long long b, long long d) {
    // sign of a + b*sqrt(d), d >= 2 nonsquare
    if (b == 0) return sign_ll(a);
    if (b > 0) {
        if (a >= 0) return 1;
        // a < 0: compare b^2 d with a^2 (equality impossible, d nonsquare)
        return i128(b) * b * d > i128(a) * a ? 1 : -1;
    }
    return -sign_quad(-a, -b, d);
}

Theta Theta::quadratic(long long p, long long q, long long d, long long r) {
    if (q == 0) throw ParameterError("theta must be irrational (q = 0 gives a rational)");
    if (d < 2 || is_perfect_square(d))
        throw ParameterError("theta discriminant must be a nonsquare >= 2");
    if (r == 0) throw ParameterError("theta with zero denominator");
    Theta t;
    t.kind_ = Kind::quadratic;
    t.p_ = p; t.q_ = q; t.d_ = d; t.r_ = r;
    t.normalize_quadratic();
    // strict range check 0 < theta < 1, exact
    long long sp = t.p_, sq = t.q_, sd = t.d_;  // r_ > 0 after normalization
    if (sign_quad(sp, sq, sd) <= 0)
        throw ParameterError("theta must lie in (0,1): value <= 0");
    if (sign_quad(sp - t.r_, sq, sd) >= 0)
        throw ParameterError("theta must lie in (0,1): value >= 1");
    return t;
}

void Theta::normalize_quadratic() {
    auto [d0, s] = squarefree_part(d_);
    d_ = d0;
    q_ *= s;
    if (d_ < 2 || q_ == 0) throw ParameterError("theta reduces to a rational");
    if (r_ < 0) { p_ = -p_; q_ = -q_; r_ = -r_; }
    long long g = std::gcd(std::gcd(std::llabs(p_), std::llabs(q_)), r_);
    if (g > 1) { p_ /= g; q_ /= g; r_ /= g; }
}

Theta Theta::decimal(const std::string& digits, int cf_depth_cap) {
    if (cf_depth_cap < 1) throw ParameterError("cf_depth_cap must be >= 1");
    std::string body = digits;
    if (body.rfind("0.", 0) == 0) body = body.substr(2);
    else if (body.rfind(".", 0) == 0) body = body.substr(1);
    if (body.empty() || body.size() > 18)
        throw ParameterError("decimal theta needs 1..18 fractional digits");
    long long num = 0, den = 1;
    for (char c : body) {
        if (c < '0' || c > '9') throw ParameterError("bad decimal digit in theta");
        num = num * 10 + (c - '0');
        den *= 10;
    }
    if (num == 0 || num >= den) throw ParameterError("decimal theta must lie in (0,1)");
    Theta t;
    t.kind_ = Kind::decimal;
    t.dec_num_ = num;
    t.dec_den_ = den;
    t.dec_digits_ = body;
    t.cf_depth_cap_ = cf_depth_cap;
    return t;
}

Theta Theta::golden() { return quadratic(-1, 1, 5, 2); }

Theta Theta::parse(const std::string& spec) {
    if (spec == "golden") return golden();
    if (spec.rfind("quad:", 0) == 0) {
        long long p, q, d, r;
        if (std::sscanf(spec.c_str(), "quad:(%lld,%lld,%lld,%lld)", &p, &q, &d, &r) != 4)
            throw ParameterError("bad quadratic theta spec: " + spec);
        return quadratic(p, q, d, r);
    }
    if (spec.rfind("dec:", 0) == 0) {
        auto rest = spec.substr(4);
        auto colon = rest.find(':');
        std::string digits = colon == std::string::npos ? rest : rest.substr(0, colon);
        int depth = 24;
        if (colon != std::string::npos) {
            auto opt = rest.substr(colon + 1);
            if (opt.rfind("depth=", 0) != 0)
                throw ParameterError("bad decimal theta option: " + opt);
            depth = std::atoi(opt.c_str() + 6);
        }
        return decimal(digits, depth);
    }
    throw ParameterError("unrecognized theta spec: " + spec);
}

long double Theta::value_ld() const {
    if (kind_ == Kind::decimal)
        return static_cast<long double>(dec_num_) / static_cast<long double>(dec_den_);
    return (static_cast<long double>(p_) +
            static_cast<long double>(q_) * std::sqrt(static_cast<long double>(d_))) /
           static_cast<long double>(r_);
}

long long Theta::floor_scaled(long long k) const {
    if (kind_ == Kind::decimal) {
        i128 n = i128(k) * dec_num_;
        i128 q = n / dec_den_;
        if (n % dec_den_ != 0 && n < 0) --q;
        return static_cast<long long>(q);
    }
    // floor((k p + k q sqrt(d)) / r), r > 0: bracket with doubles, fix exactly.
    long double approx = std::floor(static_cast<long double>(k) * value_ld());
    long long m = static_cast<long long>(approx);
    auto ge = [&](long long mm) {
        // k*theta >= mm  <=>  k p - mm r + k q sqrt(d) >= 0
        return sign_quad(k * p_ - mm * r_, k * q_, d_) >= 0;
    };
    while (!ge(m)) --m;
    while (ge(m + 1)) ++m;
    return m;
}

long double Theta::frac_scaled(long long k) const {
    long long m = floor_scaled(k);
    if (kind_ == Kind::decimal) {
        return static_cast<long double>(i128(k) * dec_num_ - i128(m) * dec_den_) /
               static_cast<long double>(dec_den_);
    }
    return (static_cast<long double>(k * p_ - m * r_) +
            static_cast<long double>(k * q_) * std::sqrt(static_cast<long double>(d_))) /
           static_cast<long double>(r_);
}

void Theta::compute_cf_quadratic() const {
    // x = (P + sqrt(D))/Q with Q | (D - P^2); values are exact throughout.
    i128 P, Q, D;
    if (q_ > 0) { P = p_; Q = r_; }
    else { P = -p_; Q = -r_; }
    D = i128(q_) * q_ * d_;
    if ((D - P * P) % Q != 0) {
        i128 aq = Q < 0 ? -Q : Q;
        P *= aq;
        D *= aq * aq;
        Q *= aq;
    }
    long long sD = isqrt_i128(D);
    auto cmp_sqrtD = [&](i128 t) {  // sign(sqrt(D) - t)
        if (t < 0) return 1;
        return t * t < D ? 1 : -1;  // equality impossible, D nonsquare
    };
    auto floor_state = [&](i128 Pc, i128 Qc) {
        long long a = fdiv(Pc + sD, Qc);
        // fix up: a <= (Pc + sqrt(D))/Qc < a + 1, exact
        auto ge = [&](long long aa) {
            // (Pc + sqrt(D))/Qc >= aa
            i128 t = i128(aa) * Qc - Pc;
            int s = cmp_sqrtD(t);  // sign(sqrt(D) - t)
            return Qc > 0 ? s >= 0 : s <= 0;
        };
        while (!ge(a)) --a;
        while (ge(a + 1)) ++a;
        return a;
    };

    std::vector<long long> terms;
    std::vector<std::pair<long long, long long>> states;  // (P, Q) after a0
    long long a0 = floor_state(P, Q);
    terms.push_back(a0);
    i128 Pc = P, Qc = Q;
    std::size_t preperiod = 0;
    std::vector<long long> period;
    for (;;) {
        // advance: x -> 1/(x - a)
        i128 Pn = terms.back() * Qc - Pc;
        i128 Qn = (D - Pn * Pn) / Qc;
        Pc = Pn;
        Qc = Qn;
        auto state = std::make_pair(static_cast<long long>(Pc), static_cast<long long>(Qc));
        auto it = std::find(states.begin(), states.end(), state);
        if (it != states.end()) {
            preperiod = static_cast<std::size_t>(it - states.begin()) + 1;
            period.assign(terms.begin() + static_cast<std::ptrdiff_t>(preperiod), terms.end());
            break;
        }
        states.push_back(state);
        terms.push_back(floor_state(Pc, Qc));
        if (terms.size() > 4096)
            throw ParameterError("continued fraction period exceeds 4096 terms");
    }
    cf_.terms.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(preperiod));
    cf_.preperiod = preperiod;
    cf_.period = period;
    cf_.exact = true;
    cf_ready_ = true;
}

void Theta::compute_cf_decimal(int depth) const {
    if (depth > cf_depth_cap_)
        throw PrecisionError("continued fraction depth " + std::to_string(depth) +
                             " exceeds cf_depth_cap " + std::to_string(cf_depth_cap_));
    cf_.terms.clear();
    cf_.exact = false;
    long long a = dec_num_, b = dec_den_;  // theta = a/b in (0,1)
    cf_.terms.push_back(0);
    // Euclid; if the rational expansion terminates before `depth`, the digits
    // cannot support further partial quotients.
    long long x = b, y = a;  // expand 1/theta after a0 = 0
    while (static_cast<int>(cf_.terms.size()) < depth) {
        if (y == 0)
            throw PrecisionError("decimal theta digits exhausted at depth " +
                                 std::to_string(cf_.terms.size()));
        cf_.terms.push_back(x / y);
        long long t = x % y;
        x = y;
        y = t;
    }
    cf_depth_done_ = depth;
    cf_ready_ = true;
}

const Theta::ContinuedFraction& Theta::cf(int depth) const {
    if (depth < 1) throw ParameterError("cf depth must be >= 1");
    if (kind_ == Kind::quadratic) {
        if (!cf_ready_) compute_cf_quadratic();
        // unroll the period up to `depth` terms
        if (static_cast<int>(cf_.terms.size()) < depth) {
            while (static_cast<int>(cf_.terms.size()) < depth)
                cf_.terms.push_back(
                    cf_.period[(cf_.terms.size() - cf_.preperiod) % cf_.period.size()]);
        }
        return cf_;
    }
    if (!cf_ready_ || cf_depth_done_ < depth) compute_cf_decimal(depth);
    return cf_;
}

std::vector<std::pair<long long, long long>> Theta::convergents(int n) const {
    if (n < 1) throw ParameterError("convergent count must be >= 1");
    const auto& c = cf(n);
    std::vector<std::pair<long long, long long>> out;
    // h_k = a_k h_{k-1} + h_{k-2}; seeds h_{-1} = 1, h_{-2} = 0, k_{-1} = 0, k_{-2} = 1
    long long hm1 = 1, hm2 = 0, km1 = 0, km2 = 1;
    for (int i = 0; i < n && i < static_cast<int>(c.terms.size()); ++i) {
        i128 h = i128(c.terms[i]) * hm1 + hm2;
        i128 k = i128(c.terms[i]) * km1 + km2;
        constexpr i128 lim = 0x7fffffffffffffffLL;
        if (h > lim || k > lim) throw ParameterError("convergent overflow");
        hm2 = hm1; hm1 = static_cast<long long>(h);
        km2 = km1; km1 = static_cast<long long>(k);
        out.emplace_back(hm1, km1);
    }
    return out;
}

Theta Theta::one_minus() const {
    if (kind_ == Kind::quadratic) return quadratic(r_ - p_, -q_, d_, r_);
    long long v = dec_den_ - dec_num_;
    std::string body;
    for (long long den = dec_den_ / 10; den > 0; den /= 10) {
        body.push_back(static_cast<char>('0' + v / den));
        v %= den;
    }
    return decimal("0." + body, cf_depth_cap_);
}

bool Theta::equals(const Theta& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == Kind::quadratic)
        return p_ == other.p_ && q_ == other.q_ && d_ == other.d_ && r_ == other.r_;
    return dec_num_ == other.dec_num_ && dec_den_ == other.dec_den_;
}

std::string Theta::str() const {
    if (kind_ == Kind::quadratic)
        return "quad:(" + std::to_string(p_) + "," + std::to_string(q_) + "," +
               std::to_string(d_) + "," + std::to_string(r_) + ")";
    return "dec:0." + dec_digits_ + ":depth=" + std::to_string(cf_depth_cap_);
}

Theta::ContinuedFraction cf_expand(const Theta& theta, int depth) {
    return theta.cf(depth);
}

std::vector<std::pair<long long, long long>> convergents(const Theta& theta, int n) {
    return theta.convergents(n);
}

}  // namespace rotalg
