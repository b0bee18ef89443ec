#include "weylsector/gauge_structure.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "weylsector/errors.hpp"

namespace weylsector {

// ---------------------------------------------------------------- lattice

ObservableLattice ObservableLattice::spacing(const Rational& s) {
    if (s <= Rational{}) throw InputError("observable lattice spacing must be positive, got " + s.str());
    return ObservableLattice(Kind::Spacing, s);
}

bool ObservableLattice::contains(const Rational& u) const {
    switch (kind_) {
        case Kind::All: return true;
        case Kind::Zero: return u.is_zero();
        case Kind::Spacing: return (u / step_).is_integer();
    }
    return false;
}

bool ObservableLattice::dual_contains(const Rational& b) const {
    switch (kind_) {
        case Kind::All: return b.is_zero();
        case Kind::Zero: return true;
        case Kind::Spacing: return (b * step_).is_integer();
    }
    return false;
}

std::string ObservableLattice::str() const {
    switch (kind_) {
        case Kind::All: return "all";
        case Kind::Zero: return "{0}";
        case Kind::Spacing: return step_.str() + "Z";
    }
    return {};
}

// ---------------------------------------------------------------- structure

GaugeStructure::GaugeStructure(std::string name, std::vector<DimensionSpec> dims)
    : name_(std::move(name)), dims_(std::move(dims)) {
    if (name_.empty()) throw InputError("gauge structure needs a name");
    if (dims_.empty()) throw InputError("gauge structure needs at least one dimension");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const auto& d = dims_[i];
        if (!(d.kappa > 0.0) || !(d.xi > 0.0) || !std::isfinite(d.kappa) || !std::isfinite(d.xi))
            throw InputError("dimension " + std::to_string(i) + ": units must be positive and finite");
        if (std::abs(d.kappa * d.xi - 2.0 * std::numbers::pi) > 1e-12 * 2.0 * std::numbers::pi)
            throw InputError("dimension " + std::to_string(i) + ": kappa*xi must equal 2*pi");
        switch (d.lattice.kind()) {
            case ObservableLattice::Kind::All: break;
            case ObservableLattice::Kind::Spacing:
                gauge_.push_back({i, WeylLabel::in_dim(i, 0, Rational(1) / d.lattice.step()), false});
                break;
            case ObservableLattice::Kind::Zero: gauge_.push_back({i, WeylLabel::in_dim(i, 0, 1), true}); break;
        }
    }
    // Gauge generators must be observable and commute with every observable generator.
    for (const auto& g : gauge_) {
        if (!label_observable(g.label)) throw InputError("gauge generator " + g.label.str() + " is not observable");
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            const auto& lat = dims_[i].lattice;
            if (lat.kind() == ObservableLattice::Kind::Spacing &&
                !labels_commute(g.label, WeylLabel::in_dim(i, lat.step(), 0)))
                throw InputError("gauge generator " + g.label.str() + " does not commute with the observables");
            if (lat.kind() == ObservableLattice::Kind::All && i == g.dim)
                throw InputError("gauge generator in a fully observable dimension");
        }
    }
}

bool GaugeStructure::label_observable(const WeylLabel& l) const {
    if (l.dims() > dims_.size()) return false;
    for (std::size_t i = 0; i < l.dims(); ++i)
        if (!dims_[i].lattice.contains(l.u(i))) return false;
    return true;
}

bool GaugeStructure::label_central(const WeylLabel& l) const {
    if (!label_observable(l) || !l.has_zero_u()) return false;
    for (std::size_t i = 0; i < l.dims(); ++i)
        if (!dims_[i].lattice.dual_contains(l.b(i))) return false;
    return true;
}

std::string GaugeStructure::physical(const WeylLabel& l) const {
    auto scaled = [](const Rational& r, const std::string& sym) {
        if (sym.empty()) return r.str();
        if (r == Rational(1)) return sym;
        if (r == Rational(-1)) return "-" + sym;
        return r.str() + "·" + sym;
    };
    std::string out;
    for (std::size_t i = 0; i < l.dims(); ++i) {
        const auto sub = l.dims() > 1 || dims_.size() > 1 ? "_" + (i < dims_.size() ? dims_[i].name : std::to_string(i)) : "";
        const auto& kappa_sym = i < dims_.size() ? dims_[i].kappa_symbol : std::string{};
        const auto& xi_sym = i < dims_.size() ? dims_[i].xi_symbol : std::string("ξ");
        if (!l.u(i).is_zero()) out += "U" + sub + "(" + scaled(l.u(i), kappa_sym) + ")";
        if (!l.b(i).is_zero()) out += "V" + sub + "(" + scaled(l.b(i), xi_sym) + ")";
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- presets

namespace presets {

GaugeStructure circle() {
    return GaugeStructure("circle", {DimensionSpec{"phi", 1.0, 2.0 * std::numbers::pi, "", "2π",
                                                   ObservableLattice::spacing(1)}});
}

GaugeStructure bloch(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw InputError("bloch preset needs a period a > 0");
    return GaugeStructure("bloch", {DimensionSpec{"x", 2.0 * std::numbers::pi / a, a, "2π/a", "a",
                                                  ObservableLattice::spacing(1)}});
}

GaugeStructure two_body() {
    const double two_pi = 2.0 * std::numbers::pi;
    return GaugeStructure("two_body", {DimensionSpec{"rel", 1.0, two_pi, "", "2π", ObservableLattice::all()},
                                       DimensionSpec{"com", 1.0, two_pi, "", "2π", ObservableLattice::zero()}});
}

}  // namespace presets

GaugeStructure preset(std::string_view text) {
    if (text == "circle") return presets::circle();
    if (text == "two_body") return presets::two_body();
    constexpr std::string_view prefix = "bloch:a=";
    if (text.starts_with(prefix)) {
        auto v = text.substr(prefix.size());
        double a = 0.0;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), a);
        if (ec != std::errc() || ptr != v.data() + v.size())
            throw InputError("bad bloch period in preset '" + std::string(text) + "'");
        return presets::bloch(a);
    }
    throw InputError("unknown preset '" + std::string(text) + "' (expected circle, bloch:a=<v> or two_body)");
}

// ---------------------------------------------------------------- shifts

bool SectorShift::is_zero() const {
    for (const auto& t : turns)
        if (!t.is_zero()) return false;
    return true;
}

SectorShift SectorShift::operator+(const SectorShift& o) const {
    if (turns.size() != o.turns.size()) throw InputError("sector shifts over different gauge directions");
    SectorShift out = *this;
    for (std::size_t i = 0; i < turns.size(); ++i) {
        out.turns[i] = turns[i] + o.turns[i];
        if (!continuous[i]) out.turns[i] = out.turns[i].frac();
    }
    return out;
}

std::string SectorShift::str() const {
    if (turns.size() == 1) return turns.front().str();
    std::string out = "[";
    for (std::size_t i = 0; i < turns.size(); ++i) out += (i ? ", " : "") + turns[i].str();
    return out + "]";
}

// ---------------------------------------------------------------- operations

void require_dims(const AlgebraElement& a, const GaugeStructure& s) {
    for (const auto& kv : a.terms())
        if (kv.first.dims() > s.dims())
            throw InputError("element term " + kv.first.str() + " uses more dimensions than structure '" + s.name() +
                             "' has");
}

bool is_observable(const AlgebraElement& a, const GaugeStructure& s) {
    for (const auto& kv : a.terms())
        if (!s.label_observable(kv.first)) return false;
    return true;
}

bool is_gauge_invariant(const AlgebraElement& a, const GaugeStructure& s) {
    for (const auto& kv : a.terms()) {
        if (kv.first.dims() > s.dims()) return false;
        for (const auto& g : s.gauge_generators()) {
            auto turns = adjoint_action_turns(g.label, kv.first);
            // A continuous generator acts by t·turns for every rational t.
            if (g.continuous ? !turns.is_zero() : !turns.is_integer()) return false;
        }
    }
    return true;
}

bool is_central(const AlgebraElement& a, const GaugeStructure& s) {
    for (const auto& kv : a.terms())
        if (!s.label_central(kv.first)) return false;
    return true;
}

AlgebraElement gauge_transform(const AlgebraElement& a, std::span<const Rational> g, const GaugeStructure& s) {
    const auto& gens = s.gauge_generators();
    if (g.size() != gens.size())
        throw InputError("gauge_transform: expected " + std::to_string(gens.size()) + " exponents, got " +
                         std::to_string(g.size()));
    WeylLabel by;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!gens[k].continuous && !g[k].is_integer())
            throw InputError("gauge_transform: exponent of a discrete gauge generator must be an integer");
        by = by + gens[k].label.scaled(g[k]);
    }
    return conjugate_by(by, a);
}

AlgebraElement gauge_transform(const AlgebraElement& a, std::int64_t g, const GaugeStructure& s) {
    std::vector<Rational> exps(s.gauge_generators().size(), Rational(g));
    return gauge_transform(a, exps, s);
}

void require_preserves_observables(const Automorphism& beta, const GaugeStructure& s) {
    for (std::size_t i = 0; i < s.dims(); ++i) {
        const auto& lat = s.dim(i).lattice;
        std::vector<WeylLabel> probes{WeylLabel::in_dim(i, 0, 1)};
        if (lat.kind() == ObservableLattice::Kind::Spacing) probes.push_back(WeylLabel::in_dim(i, lat.step(), 0));
        if (lat.kind() == ObservableLattice::Kind::All) probes.push_back(WeylLabel::in_dim(i, 1, 0));
        for (const auto& p : probes)
            if (!s.label_observable(beta.act(p).label))
                throw InputError("automorphism " + beta.describe() + " does not preserve the observable algebra");
    }
}

SectorShift sector_shift(const Automorphism& beta, const GaugeStructure& s) {
    require_preserves_observables(beta, s);
    SectorShift out;
    for (const auto& c : s.center_generators()) {
        auto img = beta.act(c.label);
        if (img.label != c.label)
            throw InputError("automorphism " + beta.describe() + " does not map the center into itself");
        // β(V) = e^{2πi·r} V moves the sector label by −r.
        auto shift = -img.turns;
        out.turns.push_back(c.continuous ? shift : shift.frac());
        out.continuous.push_back(c.continuous);
    }
    return out;
}

}  // namespace weylsector
