#pragma once

// Energy spectra per θ sector.
//
// Circle: E_n = (n + t)²/2m exactly. Bloch electron: the Hamiltonian
// p²/2m + W(x) restricted to quasi-momentum t (turns) in the plane-wave basis
// e^{i·2π(n+t)x/a}, n ∈ [−N, N], diagonalized densely.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "weylsector/gauge_structure.hpp"
#include "weylsector/rational.hpp"
#include "weylsector/weyl_algebra.hpp"

namespace weylsector {

inline constexpr int kDefaultTruncation = 64;
inline constexpr int kDefaultThetaGrid = 64;
/// Gaps at or below this are reported as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// Periodic potential W(x) = Σ_m w_m e^{i·2πm·x/a}, with w_{-m} = conj(w_m).
class PotentialSpec {
public:
    /// `fourier` must hold both signs; Hermitian symmetry is validated.
    PotentialSpec(double period, std::map<int, Complex> fourier);

    /// Fills m < 0 from m > 0 by conjugation. w_0 must be real.
    static PotentialSpec from_nonnegative(double period, const std::map<int, Complex>& coeffs);
    static PotentialSpec free(double period) { return PotentialSpec(period, {}); }

    /// Text lines `m re(w_m) im(w_m)` with m >= 0; '#' starts a comment.
    static PotentialSpec load(const std::filesystem::path& file, double period);
    static PotentialSpec parse(const std::string& text, double period);

    double period() const { return period_; }
    const std::map<int, Complex>& fourier() const { return fourier_; }
    Complex coefficient(int m) const;
    int max_harmonic() const;

private:
    double period_;
    std::map<int, Complex> fourier_;
};

struct SpectrumResult {
    double theta_turns = 0.0;
    std::vector<double> levels;  // ascending
    double gap = 0.0;            // E₁ − E₀
    int truncation = 0;          // 0 for closed form
    double residual_max = 0.0;
};

/// Levels (n + t)²/2m for |n| <= n_range, sorted.
SpectrumResult circle_spectrum(double theta_turns, double mass, int n_range);

/// (2N+1)×(2N+1) Hermitian matrix in the basis n = −N..N.
Eigen::MatrixXcd bloch_hamiltonian(double theta_turns, const PotentialSpec& v, double mass, int n_trunc);

/// Lowest `bands` eigenvalues per θ. Throws NumericalError when the solver fails
/// or an eigenpair residual exceeds 1e-9·‖H‖₂.
std::vector<SpectrumResult> bloch_bands(const std::vector<double>& theta_grid, const PotentialSpec& v, double mass,
                                        int n_trunc, int bands);

/// k equally spaced points in [0, 1).
std::vector<double> theta_grid(int k);

struct GapReport {
    bool broken = false;
    SectorShift sector_shift;
    std::optional<WeylLabel> witness;
    double theta_turns = 0.0;
    double ground_energy = 0.0;
    double gap = 0.0;
    std::string conclusion;
};

/// Joins the breaking verdict of conjugation by U(λκ) with the sector's spectrum.
/// Without a potential the circle uses its closed form and other structures the
/// free Bloch solver with period ξ.
GapReport gap_report(const GaugeStructure& s, double theta_turns, const std::optional<PotentialSpec>& potential,
                     double mass, const Rational& lambda, int n_trunc = kDefaultTruncation);

}  // namespace weylsector
