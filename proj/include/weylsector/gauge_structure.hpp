#pragma once

// Which part of the field algebra is observable, which Weyl operators act as
// gauge transformations, and how automorphisms move superselection sectors.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylsector/automorphism.hpp"
#include "weylsector/weyl_algebra.hpp"

namespace weylsector {

/// Set of u-labels whose U(u·κ) is observable in one dimension:
/// all of ℚ, the progression spacing·ℤ, or {0}.
class ObservableLattice {
public:
    enum class Kind { All, Spacing, Zero };

    static ObservableLattice all() { return ObservableLattice(Kind::All, Rational{}); }
    static ObservableLattice zero() { return ObservableLattice(Kind::Zero, Rational{}); }
    static ObservableLattice spacing(const Rational& s);

    Kind kind() const { return kind_; }
    const Rational& step() const { return step_; }

    bool contains(const Rational& u) const;
    /// b such that u·b ∈ ℤ for every observable u.
    bool dual_contains(const Rational& b) const;

    std::string str() const;
    bool operator==(const ObservableLattice&) const = default;

private:
    ObservableLattice(Kind k, Rational s) : kind_(k), step_(s) {}
    Kind kind_;
    Rational step_;
};

struct DimensionSpec {
    std::string name;       // e.g. "phi", "x_rel"
    double kappa = 1.0;     // unit of U labels
    double xi = 0.0;        // unit of V labels; kappa·xi = 2π
    std::string kappa_symbol;  // how κ is printed; empty when κ = 1
    std::string xi_symbol;     // how ξ is printed, e.g. "2π", "a"
    ObservableLattice lattice = ObservableLattice::all();

    bool operator==(const DimensionSpec&) const = default;
};

/// One gauge direction. Discrete generators act through integer powers;
/// a continuous one (lattice {0}) generates V(t·ξ) for every rational t.
struct GaugeGenerator {
    std::size_t dim = 0;
    WeylLabel label;
    bool continuous = false;

    bool operator==(const GaugeGenerator&) const = default;
};

class GaugeStructure {
public:
    /// Validates units (κ·ξ = 2π) and derives the gauge and center generators.
    GaugeStructure(std::string name, std::vector<DimensionSpec> dims);

    const std::string& name() const { return name_; }
    std::size_t dims() const { return dims_.size(); }
    const DimensionSpec& dim(std::size_t i) const { return dims_.at(i); }
    const std::vector<DimensionSpec>& dimensions() const { return dims_; }

    const std::vector<GaugeGenerator>& gauge_generators() const { return gauge_; }
    /// The center of the observable algebra is generated by the gauge generators.
    const std::vector<GaugeGenerator>& center_generators() const { return gauge_; }

    bool label_observable(const WeylLabel& l) const;
    bool label_central(const WeylLabel& l) const;

    /// Physical rendering of a label, e.g. "V(2π)" or "U(1/2·κ)".
    std::string physical(const WeylLabel& l) const;

    bool operator==(const GaugeStructure&) const = default;

private:
    std::string name_;
    std::vector<DimensionSpec> dims_;
    std::vector<GaugeGenerator> gauge_;
};

namespace presets {
/// Particle on a circle: U(n), n ∈ ℤ, and all V(β) observable; center V(2π).
GaugeStructure circle();
/// Electron in a potential of period a: U(2πn/a) and V(β) observable; center V(a).
GaugeStructure bloch(double a);
/// Relative pair fully observable, center-of-mass pair with only V_P observable.
GaugeStructure two_body();
}  // namespace presets

/// "circle", "bloch:a=<v>" or "two_body".
GaugeStructure preset(std::string_view text);

/// Shift of the sector label per gauge direction, in turns. Discrete directions
/// are reduced mod 1; a continuous direction has a real charge and is kept unreduced.
struct SectorShift {
    std::vector<Rational> turns;
    std::vector<bool> continuous;

    bool is_zero() const;
    SectorShift operator+(const SectorShift& o) const;
    bool operator==(const SectorShift&) const = default;
    /// "1/2" for one direction, "[1/2, 0]" otherwise.
    std::string str() const;
};

bool is_observable(const AlgebraElement& a, const GaugeStructure& s);
/// Observability decided through the adjoint action of the gauge generators
/// instead of the lattice; must agree with is_observable.
bool is_gauge_invariant(const AlgebraElement& a, const GaugeStructure& s);
bool is_central(const AlgebraElement& a, const GaugeStructure& s);

/// Adjoint action of Π_k G_k^{g_k}; one exponent per gauge generator.
/// Exponents of discrete generators must be integers.
AlgebraElement gauge_transform(const AlgebraElement& a, std::span<const Rational> g, const GaugeStructure& s);
AlgebraElement gauge_transform(const AlgebraElement& a, std::int64_t g, const GaugeStructure& s);

/// Throws InputError if `beta` does not map the observable algebra into itself.
void require_preserves_observables(const Automorphism& beta, const GaugeStructure& s);

/// Sector shift with the convention that conjugation by U(λκ) moves θ to θ + λ turns.
SectorShift sector_shift(const Automorphism& beta, const GaugeStructure& s);

/// Throws InputError when `a` uses more dimensions than the structure has.
void require_dims(const AlgebraElement& a, const GaugeStructure& s);

}  // namespace weylsector
