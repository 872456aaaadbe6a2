#include "rotalg/orbit_traces.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "rotalg/errors.hpp"

namespace rotalg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
using cpx = std::complex<double>;
}  // namespace

void ZeroSet::validate(const Theta& theta) const {
    for (std::size_t i = 0; i < exact_points.size(); ++i)
        for (std::size_t j = i + 1; j < exact_points.size(); ++j)
            if (exact_points[i] == exact_points[j])
                throw ParameterError("duplicate exact zero point " + exact_points[i].str());
    for (std::size_t i = 0; i < generic_points.size(); ++i) {
        for (std::size_t j = i + 1; j < generic_points.size(); ++j) {
            double eps = std::max(generic_points[i].eps_orbit, generic_points[j].eps_orbit);
            if (circ_dist(generic_points[i].t, generic_points[j].t) <= eps)
                throw ParameterError("generic zero points closer than eps_orbit");
        }
        for (const auto& e : exact_points)
            if (circ_dist(generic_points[i].t, e.turns(theta)) <=
                generic_points[i].eps_orbit)
                throw ParameterError("generic zero point duplicates an exact one");
    }
    for (const auto& a : arcs)
        if (a.len <= 0.0 || a.len >= 1.0)
            throw ParameterError("arc length must lie in (0,1)");
}

double MeasureCombo::total_mass() const {
    double s = haar_weight;
    for (const auto& a : atoms) s += a.weight;
    return s;
}

OrbitPartition partition_orbits(const ZeroSet& y, const Theta& theta, int horizon) {
    if (horizon < 1) throw ParameterError("horizon must be >= 1");
    y.validate(theta);
    OrbitPartition part;
    part.horizon = horizon;

    // Exact points: same orbit iff equal a-component; exponent gap is b - b'.
    std::map<Rational, std::vector<long long>> by_a;
    for (const auto& p : y.exact_points) by_a[p.a].push_back(p.b);
    for (auto& [a, bs] : by_a) {
        std::sort(bs.begin(), bs.end());
        OrbitClass cls;
        cls.rep = PointRef::of(AngleZT(a, bs.front()));
        for (long long b : bs) cls.exponents.push_back(b - bs.front());
        part.classes.push_back(std::move(cls));
    }

    // Generic points match a class when some |n| <= horizon lands within
    // eps_orbit of the representative's orbit; the membership is then only a
    // within-horizon statement.
    for (const auto& g : y.generic_points) {
        bool joined = false;
        for (auto& cls : part.classes) {
            double base = cls.rep.turns(theta);
            for (long long n = -horizon; n <= horizon && !joined; ++n) {
                double target = base + static_cast<double>(theta.frac_scaled(n));
                target -= std::floor(target);
                if (circ_dist(g.t, target) < g.eps_orbit) {
                    cls.exponents.push_back(n);
                    cls.within_horizon = true;
                    joined = true;
                }
            }
            if (joined) {
                std::sort(cls.exponents.begin(), cls.exponents.end());
                if (cls.exponents.front() < 0) {
                    // re-base so the exponent list starts at 0
                    long long shift = cls.exponents.front();
                    for (auto& e : cls.exponents) e -= shift;
                    cls.rep = PointRef::of(g);
                }
                break;
            }
        }
        if (!joined) {
            OrbitClass cls;
            cls.rep = PointRef::of(g);
            cls.exponents = {0};
            cls.within_horizon = true;
            part.classes.push_back(std::move(cls));
        }
    }
    return part;
}

SimplicityVerdict is_simple(const ZeroSet& y, const Theta& theta, int horizon) {
    if (!y.arcs.empty()) return SimplicityVerdict::not_simple;  // m(Y) > 0
    auto part = partition_orbits(y, theta, horizon);
    for (const auto& cls : part.classes)
        if (cls.exponents.size() > 1) return SimplicityVerdict::not_simple;
    if (y.all_exact() && !theta.is_decimal()) return SimplicityVerdict::simple;
    return SimplicityVerdict::simple_within_horizon;
}

TraceDimension trace_dimension(const ZeroSet& y, const Theta& theta, int horizon) {
    TraceDimension out;
    out.within_horizon = theta.is_decimal() || !y.generic_points.empty();
    if (y.empty()) {
        out.kind = TraceDimension::Kind::finite;
        out.value = 1;
        out.note = "gamma invertible: A_{theta,gamma} = A_theta";
        return out;
    }
    if (!y.arcs.empty()) {
        for (const auto& arc : y.arcs) {
            for (long long n = 1; n <= horizon; ++n) {
                double shift = static_cast<double>(theta.frac_scaled(n));
                if (shift < arc.len || 1.0 - shift < arc.len) {
                    out.kind = TraceDimension::Kind::infinite;
                    out.note = "interval zero set: a rotate meets the arc";
                    return out;
                }
            }
        }
        out.kind = TraceDimension::Kind::unknown;
        out.note = "unknown (infinite Y)";
        return out;
    }
    auto part = partition_orbits(y, theta, horizon);
    int dim = 1;
    for (const auto& cls : part.classes)
        dim += static_cast<int>(cls.exponents.size()) - 1;
    out.kind = TraceDimension::Kind::finite;
    out.value = dim;
    return out;
}

std::vector<MeasureCombo> extreme_traces(const ZeroSet& y, const Theta& theta) {
    if (!y.all_exact())
        throw PreconditionError("extreme_traces requires a finite exact zero set");
    auto part = partition_orbits(y, theta, 1);
    std::vector<MeasureCombo> out;
    out.push_back(MeasureCombo::haar());
    for (const auto& cls : part.classes) {
        for (std::size_t i = 1; i < cls.exponents.size(); ++i) {
            long long lo = cls.exponents[i - 1], hi = cls.exponents[i];
            MeasureCombo mu;
            double w = 1.0 / static_cast<double>(hi - lo);
            for (long long e = lo + 1; e <= hi; ++e) {
                MeasureAtom atom;
                atom.point = PointRef::of(rotate(cls.rep.zt, e, theta));
                atom.weight = w;
                mu.atoms.push_back(atom);
            }
            out.push_back(std::move(mu));
        }
    }
    return out;
}

namespace {

// Piecewise-linear cutoff vanishing exactly on the zero positions: a tent
// window of half-width delta_i around each zero, flat 1 elsewhere.
struct HatFunction {
    // nodes (x, value) sorted in [0,1); linear in between, with wraparound.
    // An empty node list means H == 1.
    std::vector<std::pair<double, double>> nodes;

    static HatFunction for_zeros(std::vector<double> zs) {
        HatFunction h;
        if (zs.empty()) return h;
        std::sort(zs.begin(), zs.end());
        const std::size_t n = zs.size();
        for (std::size_t i = 0; i < n; ++i) {
            double gap_prev = i == 0 ? zs.front() + 1.0 - zs.back() : zs[i] - zs[i - 1];
            double gap_next = i + 1 == n ? zs.front() + 1.0 - zs.back() : zs[i + 1] - zs[i];
            if (n == 1) gap_prev = gap_next = 1.0;
            double delta = std::min(0.1, 0.5 * std::min(gap_prev, gap_next));
            double lo = zs[i] - delta, hi = zs[i] + delta;
            h.nodes.emplace_back(lo - std::floor(lo), 1.0);
            h.nodes.emplace_back(zs[i], 0.0);
            h.nodes.emplace_back(hi - std::floor(hi), 1.0);
        }
        std::sort(h.nodes.begin(), h.nodes.end());
        return h;
    }

    HatFunction shifted(double s) const {
        HatFunction out;
        for (auto [x, v] : nodes) {
            double t = x + s;
            out.nodes.emplace_back(t - std::floor(t), v);
        }
        std::sort(out.nodes.begin(), out.nodes.end());
        return out;
    }

    double operator()(double t) const {
        if (nodes.empty()) return 1.0;
        t -= std::floor(t);
        auto it = std::upper_bound(nodes.begin(), nodes.end(), std::make_pair(t, 2.0));
        double x0, v0, x1, v1;
        if (it == nodes.begin() || it == nodes.end()) {
            x0 = nodes.back().first;  v0 = nodes.back().second;
            x1 = nodes.front().first + 1.0;  v1 = nodes.front().second;
            if (t < x0) t += 1.0;
        } else {
            x0 = (it - 1)->first;  v0 = (it - 1)->second;
            x1 = it->first;  v1 = it->second;
        }
        if (x1 == x0) return v0;
        return v0 + (v1 - v0) * (t - x0) / (x1 - x0);
    }

    static cpx segment_integral(double a, double va, double b, double vb, int k) {
        if (k == 0) return cpx(0.5 * (va + vb) * (b - a));
        double w = kTwoPi * k;
        double slope = (vb - va) / (b - a);
        double alpha = va - slope * a;
        auto prim = [&](double t) {
            cpx e(std::cos(w * t), std::sin(w * t));
            return e * (cpx(0.0, -1.0) * (alpha + slope * t) / w + slope / (w * w));
        };
        return prim(b) - prim(a);
    }

    // closed-form circle integral of H(t) e^{2 pi i k t}
    cpx fourier(int k) const {
        if (nodes.empty()) return k == 0 ? cpx(1.0) : cpx(0.0);
        cpx total = 0.0;
        const std::size_t n = nodes.size();
        for (std::size_t i = 0; i < n; ++i) {
            double a = nodes[i].first, va = nodes[i].second;
            double b, vb;
            if (i + 1 < n) { b = nodes[i + 1].first; vb = nodes[i + 1].second; }
            else { b = nodes[0].first + 1.0; vb = nodes[0].second; }
            if (b <= a) continue;
            total += segment_integral(a, va, b, vb, k);
        }
        return total;
    }
};

}  // namespace

double verify_trace_invariance(const MeasureCombo& mu, const ZeroSet& y,
                               const Theta& theta, int test_degree) {
    if (test_degree < 1) throw ParameterError("test_degree must be >= 1");
    std::vector<double> zs;
    for (const auto& p : y.exact_points) zs.push_back(p.turns(theta));
    for (const auto& g : y.generic_points) zs.push_back(g.t);
    HatFunction hat = HatFunction::for_zeros(zs);
    const double th = static_cast<double>(theta.frac_scaled(1));
    HatFunction hat_shift = hat.shifted(th);  // nodes of t -> H(t - theta)

    // the constant 1 (unit of the unitization): both integrals are the total
    // mass, so this residual is zero whenever the arithmetic is
    double worst = std::fabs(mu.total_mass() - mu.total_mass());
    for (int k = 0; k <= test_degree; ++k) {
        // test function f = H(t) e^{2 pi i k t}
        cpx haar_plain = hat.fourier(k);
        // f(t - theta) = e^{-2 pi i k theta} H(t - theta) e^{2 pi i k t}
        cpx rot(std::cos(kTwoPi * k * th), -std::sin(kTwoPi * k * th));
        cpx haar_shifted = rot * hat_shift.fourier(k);
        cpx residual = mu.haar_weight * (haar_shifted - haar_plain);
        for (const auto& atom : mu.atoms) {
            double t = atom.point.turns(theta);
            auto eval = [&](double x) {
                return hat(x) * cpx(std::cos(kTwoPi * k * x), std::sin(kTwoPi * k * x));
            };
            residual += atom.weight * (eval(t - th) - eval(t));
        }
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

}  // namespace rotalg
