#include "weylsector/gns.hpp"

#include <cmath>
#include <numbers>

#include "weylsector/errors.hpp"

namespace weylsector {

namespace {

double state_turns(const ThetaState& state, const WeylLabel& label) {
    double x = 0.0;
    for (std::size_t i = 0; i < label.dims(); ++i) x += label.b(i).to_double() * state.turns(i);
    return x;
}

}  // namespace

// ---------------------------------------------------------------- ThetaState

ThetaState::ThetaState(GaugeStructure s, std::vector<double> theta_turns, std::vector<double> pbar)
    : structure_(std::move(s)), turns_(structure_.dims(), 0.0) {
    const auto& gens = structure_.gauge_generators();
    if (theta_turns.size() != gens.size())
        throw InputError("structure '" + structure_.name() + "' has " + std::to_string(gens.size()) +
                         " gauge direction(s), got " + std::to_string(theta_turns.size()) + " theta value(s)");
    if (!pbar.empty() && pbar.size() != structure_.dims())
        throw InputError("pbar needs one value per dimension");
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!std::isfinite(theta_turns[k])) throw InputError("theta must be finite");
        const auto& lat = structure_.dim(gens[k].dim).lattice;
        double step = lat.kind() == ObservableLattice::Kind::Spacing ? lat.step().to_double() : 1.0;
        turns_[gens[k].dim] = theta_turns[k] * step;
    }
    for (std::size_t i = 0; i < pbar.size(); ++i) {
        if (!std::isfinite(pbar[i])) throw InputError("pbar must be finite");
        if (structure_.dim(i).lattice.kind() != ObservableLattice::Kind::All) {
            if (pbar[i] != 0.0) throw InputError("pbar of a gauge dimension is set through theta");
            continue;
        }
        turns_[i] = pbar[i] * structure_.dim(i).xi / (2.0 * std::numbers::pi);
    }
}

ThetaState::ThetaState(GaugeStructure s, double theta_turns)
    : ThetaState(std::move(s), std::vector<double>{theta_turns}) {}

ThetaState ThetaState::from_pbar(GaugeStructure s, std::vector<double> pbar) {
    if (pbar.size() != s.dims()) throw InputError("pbar needs one value per dimension");
    std::vector<double> theta;
    std::vector<double> rest(pbar.size(), 0.0);
    for (const auto& g : s.gauge_generators()) {
        const auto& lat = s.dim(g.dim).lattice;
        double step = lat.kind() == ObservableLattice::Kind::Spacing ? lat.step().to_double() : 1.0;
        theta.push_back(pbar[g.dim] * s.dim(g.dim).xi / (2.0 * std::numbers::pi) / step);
    }
    for (std::size_t i = 0; i < pbar.size(); ++i)
        if (s.dim(i).lattice.kind() == ObservableLattice::Kind::All) rest[i] = pbar[i];
    return ThetaState(std::move(s), std::move(theta), std::move(rest));
}

std::vector<double> ThetaState::theta_turns() const {
    std::vector<double> out;
    for (const auto& g : structure_.gauge_generators()) {
        const auto& lat = structure_.dim(g.dim).lattice;
        if (g.continuous) {
            out.push_back(turns_[g.dim]);
            continue;
        }
        double t = turns_[g.dim] / lat.step().to_double();
        out.push_back(t - std::floor(t));
    }
    return out;
}

double ThetaState::pbar(std::size_t dim) const {
    return turns_.at(dim) * 2.0 * std::numbers::pi / structure_.dim(dim).xi;
}

// ---------------------------------------------------------------- GnsVector

GnsVector::GnsVector(ThetaState state, AmplitudeMap amplitudes) : state_(std::move(state)) {
    for (auto& [f, a] : amplitudes) {
        if (f.u_part() != f) throw InputError("GNS amplitudes are keyed by frequencies (b = 0)");
        if (f.dims() > state_.structure().dims()) throw InputError("frequency " + f.str() + " has too many dimensions");
        if (std::abs(a) > kPruneTolerance) amps_[f] += a;
    }
}

GnsVector GnsVector::cyclic(const ThetaState& state) { return GnsVector(state, {{WeylLabel{}, 1.0}}); }

Complex GnsVector::amplitude(const WeylLabel& frequency) const {
    auto it = amps_.find(frequency);
    return it == amps_.end() ? Complex{} : it->second;
}

GnsVector GnsVector::operator+(const GnsVector& o) const {
    if (!(state_ == o.state_)) throw InputError("adding GNS vectors of different states");
    auto out = amps_;
    for (const auto& [f, a] : o.amps_) out[f] += a;
    return GnsVector(state_, std::move(out));
}

GnsVector GnsVector::operator-(const GnsVector& o) const { return *this + o.scaled(-1.0); }

GnsVector GnsVector::scaled(Complex s) const {
    auto out = amps_;
    for (auto& kv : out) kv.second *= s;
    return GnsVector(state_, std::move(out));
}

// ---------------------------------------------------------------- operations

Complex expect(const ThetaState& state, const AlgebraElement& a) {
    require_dims(a, state.structure());
    Complex sum{};
    for (const auto& [label, c] : a.terms())
        if (label.has_zero_u()) sum += c * unit_from_turns(state_turns(state, label));
    return sum;
}

GnsVector apply(const AlgebraElement& a, const GnsVector& v) {
    require_dims(a, v.state().structure());
    GnsVector::AmplitudeMap out;
    for (const auto& [label, c] : a.terms()) {
        const auto shift = label.u_part();
        const double from_state = state_turns(v.state(), label);
        for (const auto& [f, amp] : v.amplitudes()) {
            // W(u,b)·U(f)Ψ₀ = e^{2πi·b·(f+τ)}·U(u+f)Ψ₀
            double turns = exchange_turns(label, f).frac().to_double() + from_state;
            out[shift + f] += c * amp * unit_from_turns(turns);
        }
    }
    return GnsVector(v.state(), std::move(out));
}

Complex inner(const GnsVector& v, const GnsVector& w) {
    if (!(v.state() == w.state())) throw InputError("inner product of GNS vectors of different states");
    Complex sum{};
    for (const auto& [f, a] : v.amplitudes()) sum += std::conj(a) * w.amplitude(f);
    return sum;
}

double norm_squared(const GnsVector& v) {
    double s = 0.0;
    for (const auto& kv : v.amplitudes()) s += std::norm(kv.second);
    return s;
}

double ergodic_mean_check(const GnsVector& v, double half_length, int samples) {
    if (!(half_length > 0.0)) throw InputError("ergodic mean needs L > 0");
    if (samples < 1) throw InputError("ergodic mean needs at least one sample interval");
    if (v.is_zero()) return 0.0;

    const auto& s = v.state().structure();
    std::size_t dims = 1;
    for (const auto& kv : v.amplitudes()) dims = std::max(dims, kv.first.dims());

    struct Mode {
        std::vector<double> k;  // angular frequency per dimension
        Complex a;
    };
    std::vector<Mode> modes;
    for (const auto& [f, a] : v.amplitudes()) {
        Mode m{std::vector<double>(dims, 0.0), a};
        for (std::size_t i = 0; i < f.dims(); ++i) m.k[i] = f.u(i).to_double() * s.dim(i).kappa;
        modes.push_back(std::move(m));
    }

    const double h = 2.0 * half_length / samples;
    std::vector<int> idx(dims, 0);
    double weighted = 0.0;
    double weights = 0.0;
    while (true) {
        double w = 1.0;
        for (auto k : idx)
            if (k == 0 || k == samples) w *= 0.5;
        Complex psi{};
        for (const auto& m : modes) {
            double phase = 0.0;
            for (std::size_t i = 0; i < dims; ++i) phase += m.k[i] * (-half_length + idx[i] * h);
            psi += m.a * Complex(std::cos(phase), std::sin(phase));
        }
        weighted += w * std::norm(psi);
        weights += w;

        std::size_t d = 0;
        while (d < dims && ++idx[d] > samples) idx[d++] = 0;
        if (d == dims) break;
    }
    return weighted / weights;
}

double positivity_check(const ThetaState& state, const AlgebraElement& a) {
    double value = expect(state, adjoint(a) * a).real();
    if (value < -1e-10)
        throw NumericalError("positivity violated: omega(A*A) = " + std::to_string(value));
    return value;
}

std::vector<NonregularityRow> nonregularity_scan(const ThetaState& state, const AlgebraElement& a,
                                                 const std::vector<Rational>& lambdas, std::size_t dim) {
    if (dim >= state.structure().dims()) throw InputError("nonregularity scan: no dimension " + std::to_string(dim));
    std::vector<NonregularityRow> rows;
    rows.reserve(lambdas.size());
    for (const auto& lambda : lambdas) {
        auto shifted = AlgebraElement::generator(WeylLabel::in_dim(dim, lambda, 0)) * a;
        rows.push_back({lambda, expect(state, shifted)});
    }
    return rows;
}

}  // namespace weylsector
