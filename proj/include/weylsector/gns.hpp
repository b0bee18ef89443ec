#pragma once

// Gauge-invariant states ω_θ on the field algebra and their GNS vectors.
//
// ω_θ(W(u,b)) = 0 for u ≠ 0 and e^{2πi·Σ b_i·τ_i} for u = 0, where τ_i is the
// sector label θ in a gauge dimension and p̄·ξ/2π in a fully observable one.
// GNS vectors live in the dense span of U(u)Ψ₀; distinct frequencies are
// orthonormal, so the space is non-separable but every vector is finite.

#include <map>
#include <optional>
#include <vector>

#include "weylsector/gauge_structure.hpp"
#include "weylsector/weyl_algebra.hpp"

namespace weylsector {

class ThetaState {
public:
    /// One θ (in turns) per gauge direction. `pbar` optionally sets the
    /// momentum parameter of fully observable dimensions (indexed by dimension).
    ThetaState(GaugeStructure s, std::vector<double> theta_turns, std::vector<double> pbar = {});
    ThetaState(GaugeStructure s, double theta_turns);

    /// State with ω(V(β)) = e^{iβ·p̄_i} in every dimension; θ_i = p̄_i·ξ_i/2π.
    static ThetaState from_pbar(GaugeStructure s, std::vector<double> pbar);

    const GaugeStructure& structure() const { return structure_; }
    /// Per-dimension parameter τ_i (unreduced turns).
    const std::vector<double>& turns() const { return turns_; }
    double turns(std::size_t dim) const { return turns_.at(dim); }
    /// Sector label per gauge direction, reduced to [0, 1).
    std::vector<double> theta_turns() const;
    double pbar(std::size_t dim) const;

    bool operator==(const ThetaState&) const = default;

private:
    GaugeStructure structure_;
    std::vector<double> turns_;
};

class GnsVector {
public:
    using AmplitudeMap = std::map<WeylLabel, Complex>;  // keys carry u-components only

    GnsVector(ThetaState state, AmplitudeMap amplitudes);

    /// The cyclic vector Ψ₀.
    static GnsVector cyclic(const ThetaState& state);

    const ThetaState& state() const { return state_; }
    const AmplitudeMap& amplitudes() const { return amps_; }
    Complex amplitude(const WeylLabel& frequency) const;
    bool is_zero() const { return amps_.empty(); }

    GnsVector operator+(const GnsVector& o) const;
    GnsVector operator-(const GnsVector& o) const;
    GnsVector scaled(Complex s) const;

private:
    ThetaState state_;
    AmplitudeMap amps_;
};

Complex expect(const ThetaState& state, const AlgebraElement& a);
GnsVector apply(const AlgebraElement& a, const GnsVector& v);
/// Σ conj(v[u])·w[u]. Throws InputError for vectors of different states.
Complex inner(const GnsVector& v, const GnsVector& w);
double norm_squared(const GnsVector& v);

/// (2L)^{-1}∫_{-L}^{L}|ψ(x)|²dx for ψ(x) = Σ a_u e^{i·u·κ·x}, composite trapezoid
/// with `samples` intervals per dimension (a box in several dimensions). The
/// finite-L average approaches inner(v, v) as O(1/L).
double ergodic_mean_check(const GnsVector& v, double half_length, int samples);

/// Re ω(A*A). Throws NumericalError if it is below −1e-10.
double positivity_check(const ThetaState& state, const AlgebraElement& a);

struct NonregularityRow {
    Rational lambda;
    Complex value;  // ω(U(λκ)·A)
};

/// ω(U(λκ)·A) for each λ, with U acting in dimension `dim`.
std::vector<NonregularityRow> nonregularity_scan(const ThetaState& state, const AlgebraElement& a,
                                                 const std::vector<Rational>& lambdas, std::size_t dim = 0);

}  // namespace weylsector
