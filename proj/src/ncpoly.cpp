#include "rotalg/ncpoly.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rotalg/rng.hpp"

namespace rotalg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

cplx ExactPhase::eval(const Theta& theta) const {
    long double e = turns.to_long_double() +
                    static_cast<long double>(theta.frac_scaled(tcoef));
    e -= std::floor(e);
    long double a = 2.0L * std::numbers::pi_v<long double> * e;
    return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

Rational ExactPhase::exponent_at(const Rational& theta_pq) const {
    return (turns + Rational(tcoef, 1) * theta_pq).mod1();
}

std::string ExactPhase::str() const {
    return "(" + turns.str() + ", " + std::to_string(tcoef) + "T)";
}

void PhasedCoeff::add(const ExactPhase& ph, cplx z) {
    if (z == cplx(0.0, 0.0)) return;
    auto [it, inserted] = atoms_.emplace(ph, z);
    if (!inserted) {
        it->second += z;
        if (it->second == cplx(0.0, 0.0)) atoms_.erase(it);
    }
}

PhasedCoeff& PhasedCoeff::operator+=(const PhasedCoeff& o) {
    for (const auto& [ph, z] : o.atoms_) add(ph, z);
    return *this;
}

PhasedCoeff PhasedCoeff::times(const PhasedCoeff& o) const {
    PhasedCoeff out;
    for (const auto& [pa, za] : atoms_)
        for (const auto& [pb, zb] : o.atoms_) out.add(pa + pb, za * zb);
    return out;
}

PhasedCoeff PhasedCoeff::times(cplx z) const {
    PhasedCoeff out;
    for (const auto& [ph, za] : atoms_) out.add(ph, za * z);
    return out;
}

PhasedCoeff PhasedCoeff::conj() const {
    PhasedCoeff out;
    for (const auto& [ph, z] : atoms_) out.add(-ph, std::conj(z));
    return out;
}

PhasedCoeff PhasedCoeff::shifted(const ExactPhase& ph) const {
    PhasedCoeff out;
    for (const auto& [pa, z] : atoms_) out.add(pa + ph, z);
    return out;
}

void PhasedCoeff::prune(double tol) {
    for (auto it = atoms_.begin(); it != atoms_.end();) {
        if (std::abs(it->second) <= tol) it = atoms_.erase(it);
        else ++it;
    }
}

cplx PhasedCoeff::eval(const Theta& theta) const {
    cplx s = 0.0;
    for (const auto& [ph, z] : atoms_) s += z * ph.eval(theta);
    return s;
}

cplx PhasedCoeff::eval_at(const Rational& theta_pq) const {
    std::map<Rational, cplx> merged;
    for (const auto& [ph, z] : atoms_) merged[ph.exponent_at(theta_pq)] += z;
    cplx s = 0.0;
    for (const auto& [e, z] : merged) {
        if (z == cplx(0.0, 0.0)) continue;
        double a = kTwoPi * e.to_double();
        s += z * cplx(std::cos(a), std::sin(a));
    }
    return s;
}

std::string PhasedCoeff::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [ph, z] : atoms_) {
        if (!first) os << " + ";
        os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
        if (!(ph == ExactPhase())) os << "*" << ph.str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

NCPolynomial NCPolynomial::monomial(const Theta& theta, long long m, long long n, cplx c) {
    return monomial(theta, m, n, PhasedCoeff(c));
}

NCPolynomial NCPolynomial::monomial(const Theta& theta, long long m, long long n,
                                    const PhasedCoeff& c) {
    NCPolynomial p(theta);
    p.add_term(m, n, c);
    return p;
}

PhasedCoeff NCPolynomial::coeff(long long m, long long n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? PhasedCoeff() : it->second;
}

void NCPolynomial::add_term(long long m, long long n, const PhasedCoeff& c) {
    if (c.empty()) return;
    auto [it, inserted] = terms_.emplace(Key{m, n}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.empty()) terms_.erase(it);
    }
    if (terms_.size() > kMaxTerms)
        throw ParameterError("polynomial exceeds the 10^6 stored-term cap");
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
    if (!theta_.equals(o.theta_)) throw ParameterError("mismatched theta in +");
    NCPolynomial out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const {
    if (!theta_.equals(o.theta_)) throw ParameterError("mismatched theta in -");
    NCPolynomial out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c.times(-1.0));
    return out;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
    if (!theta_.equals(o.theta_)) throw ParameterError("mismatched theta in *");
    // (u^m v^n)(u^m' v^n') = e^{2 pi i theta n m'} u^{m+m'} v^{n+n'}
    NCPolynomial out(theta_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            ExactPhase ph = ExactPhase::of_theta(ka.second * kb.first);
            out.add_term(ka.first + kb.first, ka.second + kb.second,
                         ca.times(cb).shifted(ph));
        }
    }
    return out;
}

NCPolynomial NCPolynomial::scaled(cplx z) const {
    NCPolynomial out(theta_);
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, c.times(z));
    return out;
}

NCPolynomial NCPolynomial::pow(int k) const {
    if (k < 0) throw ParameterError("pow exponent must be >= 0");
    NCPolynomial acc = one(theta_);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

NCPolynomial NCPolynomial::adjoint() const {
    // (c u^m v^n)* = conj(c) e^{2 pi i theta m n} u^{-m} v^{-n}
    NCPolynomial out(theta_);
    for (const auto& [k, c] : terms_) {
        ExactPhase ph = ExactPhase::of_theta(k.first * k.second);
        out.add_term(-k.first, -k.second, c.conj().shifted(ph));
    }
    return out;
}

NCPolynomial NCPolynomial::gauge_expectation() const {
    NCPolynomial out(theta_);
    for (const auto& [k, c] : terms_)
        if (k.first == 0) out.add_term(0, k.second, c);
    return out;
}

PhasedCoeff NCPolynomial::trace_exact() const { return coeff(0, 0); }

bool NCPolynomial::same_terms(const NCPolynomial& o, double tol) const {
    auto diff = *this - o;
    for (const auto& [k, c] : diff.terms_) {
        for (const auto& [ph, z] : c.atoms())
            if (std::abs(z) > tol) return false;
    }
    return true;
}

std::string NCPolynomial::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        for (const auto& [ph, z] : c.atoms()) {
            if (!first) os << "; ";
            os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i ";
            if (!(ph == ExactPhase())) os << ph.str() << " ";
            os << "(" << k.first << "," << k.second << ")";
            first = false;
        }
    }
    return os.str();
}

NCPolynomial NCPolynomial::from_text(const Theta& theta, const std::string& text) {
    NCPolynomial out(theta);
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find(';', pos);
        std::string piece = text.substr(pos, end == std::string::npos ? end : end - pos);
        pos = end == std::string::npos ? text.size() : end + 1;
        double re, im;
        long long m, n;
        long long pnum = 0, pden = 1, ptc = 0;
        // with explicit phase: "re+im i (pnum/pden, tcT) (m,n)"
        if (std::sscanf(piece.c_str(), " %lf%lfi (%lld/%lld, %lldT) (%lld,%lld)",
                        &re, &im, &pnum, &pden, &ptc, &m, &n) == 7 ||
            std::sscanf(piece.c_str(), " %lf%lfi (%lld, %lldT) (%lld,%lld)",
                        &re, &im, &pnum, &ptc, &m, &n) == 6) {
            out.add_term(m, n, PhasedCoeff({re, im}, ExactPhase(Rational(pnum, pden), ptc)));
        } else if (std::sscanf(piece.c_str(), " %lf%lfi (%lld,%lld)", &re, &im, &m, &n) == 4) {
            out.add_term(m, n, PhasedCoeff(cplx{re, im}));
        } else if (!piece.empty() &&
                   piece.find_first_not_of(" \t") != std::string::npos) {
            throw ParameterError("unparseable polynomial term: " + piece);
        } else {
            pden = 1;  // blank piece
        }
    }
    return out;
}

NCPolynomial multiply(const NCPolynomial& p, const NCPolynomial& q) { return p * q; }
NCPolynomial adjoint(const NCPolynomial& p) { return p.adjoint(); }
cplx trace(const NCPolynomial& p) { return p.trace(); }
NCPolynomial gauge_expectation(const NCPolynomial& p) { return p.gauge_expectation(); }

ClockShiftRep::ClockShiftRep(long long q, long long p) : q_(q), p_(p) {
    if (q < 1) throw ParameterError("clock/shift dimension must be >= 1");
    if (std::gcd(std::llabs(p), q) != 1 && !(p == 0 && q == 1))
        throw ParameterError("clock/shift requires gcd(p, q) = 1");
}

cplx ClockShiftRep::root(long long t) const {
    t %= q_;
    if (t < 0) t += q_;
    double a = kTwoPi * static_cast<double>(t) / static_cast<double>(q_);
    return {std::cos(a), std::sin(a)};
}

Eigen::MatrixXcd ClockShiftRep::u_matrix() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(q_, q_);
    for (long long j = 0; j < q_; ++j) m((j + 1) % q_, j) = 1.0;
    return m;
}

Eigen::MatrixXcd ClockShiftRep::v_matrix() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(q_, q_);
    for (long long j = 0; j < q_; ++j) m(j, j) = root(p_ * j % q_);
    return m;
}

bool ClockShiftRep::matches_convergent(const Theta& theta, int depth) const {
    for (auto [h, k] : theta.convergents(depth))
        if (h == p_ && k == q_) return true;
    return false;
}

Eigen::MatrixXcd evaluate(const NCPolynomial& poly, const ClockShiftRep& rep) {
    const long long q = rep.q();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(q, q);
    const Rational theta_pq = rep.theta_pq();
    for (const auto& [k, c] : poly.terms()) {
        cplx amp = c.eval_at(theta_pq);
        if (amp == cplx(0.0, 0.0)) continue;
        // (U^mu V^nu) e_j = w^{p nu j} e_{j+mu}
        long long mu = ((k.first % q) + q) % q;
        long long nu = ((k.second % q) + q) % q;
        long long step = rep.p() % q * nu % q;
        for (long long j = 0; j < q; ++j)
            m((j + mu) % q, j) += amp * rep.root(step * j % q);
    }
    return m;
}

double op_norm(const Eigen::MatrixXcd& m, double tol) {
    if (tol <= 0) throw ParameterError("op_norm tolerance must be positive");
    const Eigen::Index n = m.rows();
    if (n == 0) return 0.0;
    const Eigen::MatrixXcd a = m.adjoint() * m;
    if (a.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    // Block power iteration: a 4-column block survives clustered top singular
    // values that stall the single-vector scheme.
    const Eigen::Index block = std::min<Eigen::Index>(4, n);
    double best = 0.0;
    constexpr int kRestarts = 5;
    constexpr int kItersPerRound = 3000;
    for (int restart = 0; restart < kRestarts; ++restart) {
        Eigen::MatrixXcd b(n, block);
        for (Eigen::Index j = 0; j < block; ++j)
            for (Eigen::Index i = 0; i < n; ++i) {
                std::uint64_t idx = static_cast<std::uint64_t>(2 * (j * n + i));
                b(i, j) = cplx(uniform01(0x9e3779b9u + restart, idx) - 0.5,
                               uniform01(0x9e3779b9u + restart, idx + 1) - 0.5);
            }
        double lambda = 0.0;
        for (int it = 0; it < kItersPerRound; ++it) {
            Eigen::HouseholderQR<Eigen::MatrixXcd> qr(b);
            Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, block);
            b = a * q;
            Eigen::MatrixXcd ritz = q.adjoint() * b;  // block x block, hermitian
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> small(
                (ritz + ritz.adjoint()) / 2.0);
            double next = small.eigenvalues().maxCoeff();
            if (it > 0 && std::abs(next - lambda) <= tol * std::max(next, 1e-300)) {
                best = std::max(best, next);
                return std::sqrt(std::max(best, 0.0));
            }
            lambda = next;
        }
        best = std::max(best, lambda);
    }
    throw ConvergenceError("op_norm power iteration did not converge",
                           std::sqrt(std::max(best, 0.0)));
}

}  // namespace rotalg
