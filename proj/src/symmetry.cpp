#include "weylsector/symmetry.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "weylsector/errors.hpp"

namespace weylsector {

namespace {

// Best rational approximation with denominator <= max_den via continued fractions;
// empty when none is within tolerance.
std::optional<Rational> recognize_rational(double x, std::int64_t max_den = 1'000'000) {
    if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
    const double tol = 1e-12 * std::max(1.0, std::abs(x));
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = x;
    for (int iter = 0; iter < 64; ++iter) {
        double a = std::floor(r);
        auto ai = static_cast<std::int64_t>(a);
        std::int64_t p2 = ai * p1 + p0;
        std::int64_t q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        if (std::abs(static_cast<double>(p2) / static_cast<double>(q2) - x) <= tol) return Rational(p2, q2);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = r - a;
        if (frac == 0.0) break;
        r = 1.0 / frac;
    }
    return std::nullopt;
}

}  // namespace

Automorphism adjoint_automorphism(const Rational& u0, const Rational& b0) {
    return Automorphism::adjoint_by(WeylLabel(u0, b0));
}

Automorphism adjoint_automorphism(const WeylLabel& by) { return Automorphism::adjoint_by(by); }

double admissible_time(const Rational& shift, double mass, const GaugeStructure& s, std::size_t dim) {
    if (!(mass > 0.0)) throw InputError("mass must be positive");
    return shift.to_double() * mass * s.dim(dim).xi / s.dim(dim).kappa;
}

Automorphism free_evolution(double t, double mass, const GaugeStructure& s) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw InputError("mass must be positive");
    if (!std::isfinite(t)) throw InputError("time must be finite");
    Automorphism::FreeMotion step;
    step.time = t;
    step.mass = mass;
    for (std::size_t i = 0; i < s.dims(); ++i) {
        const auto& d = s.dim(i);
        double x = t * d.kappa / (mass * d.xi);
        auto r = recognize_rational(x);
        if (!r) {
            std::ostringstream msg;
            msg.precision(12);
            msg << "free evolution with t=" << t << " gives the irrational label shift " << x << " in dimension "
                << i << "; pick t = r*m*xi/kappa for rational r, e.g. t=" << admissible_time(Rational(1, 2), mass, s, i)
                << " for r=1/2";
            throw InputError(msg.str());
        }
        step.shift.push_back(*r);
    }
    return Automorphism::free_motion(std::move(step));
}

BreakingVerdict is_broken(const Automorphism& beta, const GaugeStructure& s) {
    BreakingVerdict v;
    v.sector_shift = sector_shift(beta, s);
    for (const auto& c : s.center_generators()) {
        auto turns = beta.act(c.label).turns;
        if (c.continuous) {
            // The phase on V(t·ξ) is t·turns; pick t so that it is half a turn.
            if (!turns.is_zero() && !v.witness) v.witness = c.label.scaled(Rational(1, 2) / turns);
        } else if (!turns.is_integer() && !v.witness) {
            v.witness = c.label;
        }
        for (double theta : {0.0, 0.25, 0.5, 0.75}) {
            ThetaState state(s, std::vector<double>(s.gauge_generators().size(), theta));
            auto gen = AlgebraElement::generator(c.label);
            v.order_parameter_samples.push_back({c.label, theta, expect(state, gen), expect(state, beta(gen))});
        }
    }
    v.broken = v.witness.has_value();
    return v;
}

std::pair<Complex, Complex> order_parameter(const ThetaState& state, const Automorphism& beta,
                                            const AlgebraElement& a) {
    return {expect(state, a), expect(state, beta(a))};
}

WardReport ward_obstruction(const ThetaState& state, const AlgebraElement& q, const GaugeStructure& s) {
    if (!(state.structure() == s)) throw InputError("state belongs to a different structure");
    require_dims(q, s);
    WardReport r;
    r.self_adjoint = is_self_adjoint(q);
    if (!r.self_adjoint) throw InputError("Q must be self-adjoint (Q = Q* to 1e-10)");
    r.observable = is_observable(q, s);
    if (!r.observable) throw InputError("Q is not observable: it contains an intertwiner outside the observable lattice");

    bool trivial = true;
    for (const auto& kv : q.terms()) {
        auto shift = sector_shift(adjoint_automorphism(kv.first), s);
        trivial = trivial && shift.is_zero();
        r.term_shifts.emplace_back(kv.first, std::move(shift));
        for (const auto& c : s.center_generators()) {
            TurnPhase phase(adjoint_action_turns(kv.first, c.label));
            trivial = trivial && phase.is_trivial();
            r.central_phases.push_back({kv.first, c.label, phase});
        }
    }
    for (const auto& c : s.center_generators()) {
        auto v = AlgebraElement::generator(c.label);
        auto value = expect(state, commutator(q, v) * adjoint(v));
        trivial = trivial && std::abs(value) <= kEqualityTolerance;
        r.anomalies.push_back({c.label, value});
    }
    r.fixes_all_sectors = trivial;
    return r;
}

}  // namespace weylsector
