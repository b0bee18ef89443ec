#include "weylsector/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "weylsector/errors.hpp"
#include "weylsector/symmetry.hpp"

namespace weylsector {

// ---------------------------------------------------------------- potential

PotentialSpec::PotentialSpec(double period, std::map<int, Complex> fourier) : period_(period) {
    if (!(period > 0.0) || !std::isfinite(period)) throw InputError("potential period must be positive");
    for (const auto& [m, w] : fourier) {
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw InputError("non-finite Fourier coefficient");
        auto it = fourier.find(-m);
        Complex partner = it == fourier.end() ? Complex{} : it->second;
        if (std::abs(partner - std::conj(w)) > 1e-14 * (1.0 + std::abs(w)))
            throw InputError("potential is not Hermitian: w_" + std::to_string(-m) + " != conj(w_" +
                             std::to_string(m) + ")");
        if (w != Complex{}) fourier_[m] = w;
    }
}

PotentialSpec PotentialSpec::from_nonnegative(double period, const std::map<int, Complex>& coeffs) {
    std::map<int, Complex> full;
    for (const auto& [m, w] : coeffs) {
        if (m < 0) throw InputError("only m >= 0 may be given; negative harmonics follow by conjugation");
        if (m == 0 && w.imag() != 0.0) throw InputError("w_0 must be real");
        full[m] = w;
        if (m > 0) full[-m] = std::conj(w);
    }
    return PotentialSpec(period, std::move(full));
}

PotentialSpec PotentialSpec::parse(const std::string& text, double period) {
    std::map<int, Complex> coeffs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int m = 0;
        double re = 0.0, im = 0.0;
        if (!(fields >> m)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw InputError("potential line " + std::to_string(lineno) + ": expected 'm re im'");
        }
        if (!(fields >> re >> im)) throw InputError("potential line " + std::to_string(lineno) + ": expected 'm re im'");
        std::string extra;
        if (fields >> extra) throw InputError("potential line " + std::to_string(lineno) + ": trailing input");
        if (coeffs.contains(m)) throw InputError("potential line " + std::to_string(lineno) + ": duplicate m");
        coeffs[m] = {re, im};
    }
    return from_nonnegative(period, coeffs);
}

PotentialSpec PotentialSpec::load(const std::filesystem::path& file, double period) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open potential file " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), period);
}

Complex PotentialSpec::coefficient(int m) const {
    auto it = fourier_.find(m);
    return it == fourier_.end() ? Complex{} : it->second;
}

int PotentialSpec::max_harmonic() const {
    int h = 0;
    for (const auto& kv : fourier_) h = std::max(h, std::abs(kv.first));
    return h;
}

// ---------------------------------------------------------------- spectra

namespace {

double gap_of(const std::vector<double>& levels) { return levels.size() < 2 ? 0.0 : levels[1] - levels[0]; }

}  // namespace

SpectrumResult circle_spectrum(double theta_turns, double mass, int n_range) {
    if (n_range < 1) throw InputError("n_range must be >= 1");
    if (!(mass > 0.0)) throw InputError("mass must be positive");
    SpectrumResult r;
    r.theta_turns = theta_turns;
    for (int n = -n_range; n <= n_range; ++n) {
        double k = n + theta_turns;
        r.levels.push_back(k * k / (2.0 * mass));
    }
    std::sort(r.levels.begin(), r.levels.end());
    r.gap = gap_of(r.levels);
    return r;
}

Eigen::MatrixXcd bloch_hamiltonian(double theta_turns, const PotentialSpec& v, double mass, int n_trunc) {
    if (!(mass > 0.0)) throw InputError("mass must be positive");
    if (n_trunc < v.max_harmonic())
        throw InputError("truncation N=" + std::to_string(n_trunc) + " is below the highest harmonic " +
                         std::to_string(v.max_harmonic()));
    const int dim = 2 * n_trunc + 1;
    const double a = v.period();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const int n = i - n_trunc;
        const double k = 2.0 * std::numbers::pi * (n + theta_turns) / a;
        h(i, i) = k * k / (2.0 * mass) + v.coefficient(0).real();
        for (const auto& [m, w] : v.fourier()) {
            if (m == 0) continue;
            const int j = i - m;  // H(n, n') = w_{n-n'}
            if (j >= 0 && j < dim) h(i, j) = w;
        }
    }
    return h;
}

std::vector<SpectrumResult> bloch_bands(const std::vector<double>& theta_grid, const PotentialSpec& v, double mass,
                                        int n_trunc, int bands) {
    if (bands < 1 || bands > 2 * n_trunc + 1) throw InputError("bands must lie in [1, 2N+1]");
    std::vector<SpectrumResult> out;
    out.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        auto h = bloch_hamiltonian(theta, v, mass, n_trunc);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
        if (solver.info() != Eigen::Success)
            throw NumericalError("Hermitian eigensolver did not converge at theta=" + std::to_string(theta));
        const auto& evals = solver.eigenvalues();  // ascending
        const auto& evecs = solver.eigenvectors();
        const double h_norm = evals.cwiseAbs().maxCoeff();

        SpectrumResult r;
        r.theta_turns = theta;
        r.truncation = n_trunc;
        for (int b = 0; b < bands; ++b) {
            r.levels.push_back(evals(b));
            double res = (h * evecs.col(b) - evals(b) * evecs.col(b)).norm();
            r.residual_max = std::max(r.residual_max, res);
        }
        if (r.residual_max > 1e-9 * std::max(h_norm, 1e-300))
            throw NumericalError("eigenpair residual " + std::to_string(r.residual_max) + " exceeds contract");
        r.gap = gap_of(r.levels);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<double> theta_grid(int k) {
    if (k < 1) throw InputError("theta grid needs at least one point");
    std::vector<double> g(k);
    for (int i = 0; i < k; ++i) g[i] = static_cast<double>(i) / k;
    return g;
}

GapReport gap_report(const GaugeStructure& s, double theta_turns, const std::optional<PotentialSpec>& potential,
                     double mass, const Rational& lambda, int n_trunc) {
    if (s.dims() != 1)
        throw InputError("gap report needs a one-dimensional structure with a spectrum model; '" + s.name() +
                         "' has " + std::to_string(s.dims()) + " dimensions");
    if (potential && std::abs(potential->period() - s.dim(0).xi) > 1e-12 * s.dim(0).xi)
        throw InputError("potential period does not match the structure's period xi");
    auto verdict = is_broken(adjoint_automorphism(lambda, 0), s);

    GapReport r;
    r.broken = verdict.broken;
    r.sector_shift = verdict.sector_shift;
    r.witness = verdict.witness;
    r.theta_turns = theta_turns;

    SpectrumResult sector;
    if (!potential && s.name() == "circle") {
        sector = circle_spectrum(theta_turns, mass, 2);
    } else {
        auto v = potential ? *potential : PotentialSpec::free(s.dim(0).xi);
        sector = bloch_bands({theta_turns}, v, mass, n_trunc, 2).front();
    }
    r.ground_energy = sector.levels.front();
    r.gap = sector.gap;

    const bool gapped = r.gap > kDegeneracyTolerance * (1.0 + std::abs(r.ground_energy));
    if (!r.broken)
        r.conclusion = "no breaking (inner symmetry)";
    else
        r.conclusion = gapped ? "SSB with gap" : "SSB, degenerate sector edge";
    return r;
}

}  // namespace weylsector
