#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <utility>

#include "rotalg/angle.hpp"
#include "rotalg/theta.hpp"

namespace rotalg {

using cplx = std::complex<double>;

// e^{2*pi*i*(turns + tcoef*theta)} with `turns` reduced mod 1.  Keeping the
// exponent symbolic lets equal phases cancel exactly (trace identities,
// defining-relation checks at rational theta) instead of to ~1e-16.
struct ExactPhase {
    Rational turns;          // in [0, 1)
    long long tcoef = 0;     // multiples of theta

    ExactPhase() = default;
    ExactPhase(Rational t, long long c) : turns(t.mod1()), tcoef(c) {}
    static ExactPhase of_theta(long long c) { return ExactPhase(Rational(), c); }

    ExactPhase operator+(const ExactPhase& o) const {
        return ExactPhase(turns + o.turns, tcoef + o.tcoef);
    }
    ExactPhase operator-() const { return ExactPhase(-turns, -tcoef); }
    friend bool operator==(const ExactPhase& a, const ExactPhase& b) {
        return a.turns == b.turns && a.tcoef == b.tcoef;
    }
    friend bool operator<(const ExactPhase& a, const ExactPhase& b) {
        if (a.tcoef != b.tcoef) return a.tcoef < b.tcoef;
        return a.turns < b.turns;
    }

    cplx eval(const Theta& theta) const;
    // Exact rational exponent when theta is specialized to p/q.
    Rational exponent_at(const Rational& theta_pq) const;

    std::string str() const;
};

// A coefficient as a sum of phase atoms z * e^{2*pi*i*phase}.  Sums and
// products keep the phases symbolic; a plain complex is the atom with phase 0.
class PhasedCoeff {
public:
    PhasedCoeff() = default;
    PhasedCoeff(cplx z) { add(ExactPhase(), z); }  // NOLINT: implicit by design
    PhasedCoeff(cplx z, const ExactPhase& ph) { add(ph, z); }

    void add(const ExactPhase& ph, cplx z);
    PhasedCoeff& operator+=(const PhasedCoeff& o);
    PhasedCoeff times(const PhasedCoeff& o) const;
    PhasedCoeff times(cplx z) const;
    PhasedCoeff conj() const;                       // conjugate atoms, negate phases
    PhasedCoeff shifted(const ExactPhase& ph) const;

    bool empty() const { return atoms_.empty(); }
    std::size_t atom_count() const { return atoms_.size(); }
    void prune(double tol = 0.0);

    cplx eval(const Theta& theta) const;
    // Collapse atoms at theta = p/q; equal rational exponents merge exactly.
    cplx eval_at(const Rational& theta_pq) const;

    const std::map<ExactPhase, cplx>& atoms() const { return atoms_; }
    std::string str() const;

private:
    std::map<ExactPhase, cplx> atoms_;
};

// Finite sum c_{m,n} u^m v^n under vu = e^{2*pi*i*theta} uv, canonical form
// (no stored zero coefficients).  Values are immutable in spirit: operations
// return new polynomials.
class NCPolynomial {
public:
    using Key = std::pair<long long, long long>;
    static constexpr std::size_t kMaxTerms = 1'000'000;

    explicit NCPolynomial(Theta theta) : theta_(std::move(theta)) {}
    static NCPolynomial monomial(const Theta& theta, long long m, long long n, cplx c);
    static NCPolynomial monomial(const Theta& theta, long long m, long long n,
                                 const PhasedCoeff& c);
    static NCPolynomial one(const Theta& theta) { return monomial(theta, 0, 0, 1.0); }
    static NCPolynomial u(const Theta& theta) { return monomial(theta, 1, 0, 1.0); }
    static NCPolynomial v(const Theta& theta) { return monomial(theta, 0, 1, 1.0); }

    const Theta& theta() const { return theta_; }
    const std::map<Key, PhasedCoeff>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    PhasedCoeff coeff(long long m, long long n) const;

    NCPolynomial operator+(const NCPolynomial& o) const;
    NCPolynomial operator-(const NCPolynomial& o) const;
    NCPolynomial operator*(const NCPolynomial& o) const;
    NCPolynomial scaled(cplx z) const;
    NCPolynomial pow(int k) const;

    NCPolynomial adjoint() const;
    NCPolynomial gauge_expectation() const;  // kills every term with m != 0
    PhasedCoeff trace_exact() const;         // coefficient of u^0 v^0
    cplx trace() const { return trace_exact().eval(theta_); }

    bool same_terms(const NCPolynomial& o, double tol = 0.0) const;

    // Text form "c (m,n); ..." with c as "re+im i"; exact-phase atoms as
    // "(rat, intT)" multipliers.
    std::string to_text() const;
    static NCPolynomial from_text(const Theta& theta, const std::string& text);

private:
    void add_term(long long m, long long n, const PhasedCoeff& c);
    Theta theta_;
    std::map<Key, PhasedCoeff> terms_;
};

NCPolynomial multiply(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial adjoint(const NCPolynomial& p);
cplx trace(const NCPolynomial& p);
NCPolynomial gauge_expectation(const NCPolynomial& p);

// Finite-dimensional clock/shift pair at theta' = p/q: U the cyclic shift,
// V = diag(w^{p j}) with w = e^{2*pi*i/q}, so that V U = e^{2*pi*i*p/q} U V.
// The diagonal is stored as integer exponents of the primitive root; matrices
// are materialized on demand.
class ClockShiftRep {
public:
    ClockShiftRep(long long q, long long p);
    long long q() const { return q_; }
    long long p() const { return p_; }
    Rational theta_pq() const { return Rational(p_, q_); }

    Eigen::MatrixXcd u_matrix() const;
    Eigen::MatrixXcd v_matrix() const;

    // p/q appears among the convergents of theta (checked to `depth` terms).
    bool matches_convergent(const Theta& theta, int depth = 64) const;

    // q-th root table entry e^{2*pi*i*t/q}.
    cplx root(long long t) const;

private:
    long long q_, p_;
};

// Substitute the clock/shift matrices for u, v; theta is specialized to p/q
// throughout, with coefficient atoms collapsed exactly first.
Eigen::MatrixXcd evaluate(const NCPolynomial& poly, const ClockShiftRep& rep);

// Operator norm via power iteration on M*M with a deterministic restart
// schedule; throws ConvergenceError (carrying the last iterate) if the
// Rayleigh quotient never settles.
double op_norm(const Eigen::MatrixXcd& m, double tol = 1e-9);

}  // namespace rotalg
