#pragma once

// Automorphisms of the field algebra, represented by their exact action on
// generator labels rather than by explicit conjugation. This keeps outer
// automorphisms of the observable algebra (adjoint by an intertwiner) on the
// same footing as inner ones.

#include <string>
#include <variant>
#include <vector>

#include "weylsector/weyl_algebra.hpp"

namespace weylsector {

/// Image of a single generator: β(W(l)) = e^{2πi·turns}·W(label).
struct LabelImage {
    WeylLabel label;
    Rational turns;  // unreduced
};

class Automorphism {
public:
    /// Conjugation by W(by).
    struct Adjoint {
        WeylLabel by;
    };
    /// Free motion: per dimension, b ↦ b + shift·u with phase e^{2πi·shift·u²/2}.
    struct FreeMotion {
        std::vector<Rational> shift;
        double time = 0.0;
        double mass = 1.0;
    };
    using Step = std::variant<Adjoint, FreeMotion>;

    Automorphism() = default;  // identity

    static Automorphism adjoint_by(const WeylLabel& by);
    static Automorphism free_motion(FreeMotion step);

    /// "identity", "adjoint", "free_evolution" or "composition".
    std::string kind() const;
    const std::vector<Step>& steps() const { return steps_; }

    LabelImage act(const WeylLabel& label) const;
    AlgebraElement apply(const AlgebraElement& a) const;
    AlgebraElement operator()(const AlgebraElement& a) const { return apply(a); }

    Automorphism inverse() const;

    /// (*this ∘ inner): `inner` is applied first.
    Automorphism after(const Automorphism& inner) const;

    std::string describe() const;

private:
    std::vector<Step> steps_;  // in application order
};

inline Automorphism compose(const Automorphism& outer, const Automorphism& inner) { return outer.after(inner); }

}  // namespace weylsector
