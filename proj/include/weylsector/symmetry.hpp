#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "weylsector/automorphism.hpp"
#include "weylsector/gauge_structure.hpp"
#include "weylsector/gns.hpp"

namespace weylsector {

/// β(A) = W(u0,b0)·A·W(u0,b0)^{-1}. With (λ, 0) this is the one-parameter group
/// that fixes every U(n) and multiplies V(β) by e^{-iλβ}.
Automorphism adjoint_automorphism(const Rational& u0, const Rational& b0);
Automorphism adjoint_automorphism(const WeylLabel& by);

/// Time evolution for H = p²/2m: α_t(U(α)V(β)) = e^{itα²/2m}·U(α)V(β + tα/m).
/// The label shift t·κ/(m·ξ) must be rational in every dimension; otherwise an
/// InputError suggests an admissible t (see admissible_time).
Automorphism free_evolution(double t, double mass, const GaugeStructure& s);

/// The time t for which free evolution shifts b-labels by `shift`·u in dimension `dim`.
double admissible_time(const Rational& shift, double mass, const GaugeStructure& s, std::size_t dim = 0);

struct OrderParameterSample {
    WeylLabel center;
    double theta_turns = 0.0;
    Complex before;  // ω_θ(V)
    Complex after;   // ω_θ(β(V))
};

struct BreakingVerdict {
    bool broken = false;
    std::optional<WeylLabel> witness;  // a central label acquiring a nontrivial phase
    SectorShift sector_shift;
    std::vector<OrderParameterSample> order_parameter_samples;
};

/// Reports whether β changes the phase of some center generator, i.e. moves every sector to another.
BreakingVerdict is_broken(const Automorphism& beta, const GaugeStructure& s);

/// (ω(A), ω(β(A))).
std::pair<Complex, Complex> order_parameter(const ThetaState& state, const Automorphism& beta, const AlgebraElement& a);

struct CentralPhase {
    WeylLabel term;    // generator of Q
    WeylLabel center;  // center generator V
    TurnPhase phase;   // W(term)·V·W(term)^{-1} = e^{2πi·phase}·V
};

struct CentralAnomaly {
    WeylLabel center;
    Complex value;  // ω_θ([Q,V]·V^{-1})
};

struct WardReport {
    bool observable = false;
    bool self_adjoint = false;
    std::vector<std::pair<WeylLabel, SectorShift>> term_shifts;
    std::vector<CentralPhase> central_phases;
    std::vector<CentralAnomaly> anomalies;
    /// Every term shift is zero, every central phase trivial and every anomaly vanishes:
    /// conjugation by Q's generators cannot move a sector.
    bool fixes_all_sectors = false;
};

/// Checks that an observable self-adjoint Q cannot generate a center-moving
/// symmetry. Throws InputError when Q is not self-adjoint or not observable.
WardReport ward_obstruction(const ThetaState& state, const AlgebraElement& q, const GaugeStructure& s);

}  // namespace weylsector
