#pragma once

// Exact *-algebra of Weyl operators with rational labels.
//
// A label (u, b) names the normal-ordered generator W(u,b) = U(u·κ) V(b·ξ)
// with κ·ξ = 2π, so every commutation phase is e^{2πi·r} with r rational.
// Multi-dimensional labels are finitely supported sequences of such pairs;
// dimensions past the stored size are (0,0).

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "weylsector/rational.hpp"

namespace weylsector {

using Complex = std::complex<double>;

inline constexpr double kPruneTolerance = 1e-12;
inline constexpr double kEqualityTolerance = 1e-10;

struct LabelPair {
    Rational u;
    Rational b;

    bool operator==(const LabelPair&) const = default;
    auto operator<=>(const LabelPair&) const = default;
};

class WeylLabel {
public:
    WeylLabel() = default;
    WeylLabel(Rational u, Rational b);
    explicit WeylLabel(std::vector<LabelPair> pairs);

    /// Label that is (u, b) in dimension `dim` and (0,0) elsewhere.
    static WeylLabel in_dim(std::size_t dim, Rational u, Rational b);

    /// Number of stored dimensions (trailing (0,0) pairs are never stored).
    std::size_t dims() const { return pairs_.size(); }
    const std::vector<LabelPair>& pairs() const { return pairs_; }

    Rational u(std::size_t dim) const { return dim < pairs_.size() ? pairs_[dim].u : Rational{}; }
    Rational b(std::size_t dim) const { return dim < pairs_.size() ? pairs_[dim].b : Rational{}; }

    bool is_identity() const { return pairs_.empty(); }
    bool has_zero_u() const;
    /// The label with every b component set to zero.
    WeylLabel u_part() const;

    WeylLabel operator+(const WeylLabel& o) const;
    WeylLabel operator-() const;
    WeylLabel operator-(const WeylLabel& o) const { return *this + (-o); }
    /// Label with every component multiplied by k.
    WeylLabel scaled(const Rational& k) const;

    bool operator==(const WeylLabel&) const = default;
    auto operator<=>(const WeylLabel&) const = default;

    /// Expression syntax: "W(u,b)" in one dimension, "W_0(..)*W_1(..)" otherwise.
    std::string str() const;

private:
    void normalize();
    std::vector<LabelPair> pairs_;
};

/// Σ_i u_i(second)·b_i(first): W(first)·W(second) = e^{2πi·this}·W(first+second).
Rational exchange_turns(const WeylLabel& first, const WeylLabel& second);

/// Σ_i (u1_i·b2_i − u2_i·b1_i); the generators commute iff this is an integer.
Rational symplectic_turns(const WeylLabel& l1, const WeylLabel& l2);

/// A phase e^{2πi·r} stored exactly as r in [0, 1).
class TurnPhase {
public:
    TurnPhase() = default;
    explicit TurnPhase(const Rational& r) : r_(r.frac()) {}

    const Rational& turns() const { return r_; }
    bool is_trivial() const { return r_.is_zero(); }
    Complex value() const;

    TurnPhase operator+(const TurnPhase& o) const { return TurnPhase(r_ + o.r_); }
    TurnPhase operator-() const { return TurnPhase(-r_); }
    bool operator==(const TurnPhase&) const = default;

private:
    Rational r_;
};

/// e^{2πi·turns} for a floating turn count; quarter turns come out exact.
Complex unit_from_turns(double turns);

class AlgebraElement {
public:
    using TermMap = std::map<WeylLabel, Complex>;

    AlgebraElement() = default;
    explicit AlgebraElement(TermMap terms);

    static AlgebraElement zero() { return {}; }
    static AlgebraElement identity();
    static AlgebraElement generator(const WeylLabel& label, Complex coeff = 1.0);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of `label`, zero when absent.
    Complex coeff(const WeylLabel& label) const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const { return scaled(-1.0); }
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(Complex s) const;

    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    /// Exact equality of labels and coefficients; see approx_equal for tolerances.
    bool operator==(const AlgebraElement&) const = default;

private:
    void prune();
    TermMap terms_;
};

inline AlgebraElement operator*(Complex s, const AlgebraElement& a) { return a.scaled(s); }

AlgebraElement make_generator(const Rational& u, const Rational& b);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement adjoint(const AlgebraElement& a);
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
double one_norm(const AlgebraElement& a);

/// Turns of the phase in W(by)·W(on)·W(by)^{-1} = e^{2πi·r}·W(on), r = u·b0 − u0·b (unreduced).
Rational adjoint_action_turns(const WeylLabel& by, const WeylLabel& on);

/// W(by)·A·W(by)^{-1}.
AlgebraElement conjugate_by(const WeylLabel& by, const AlgebraElement& a);

/// True iff the two generators commute as operators.
bool labels_commute(const WeylLabel& l1, const WeylLabel& l2);

/// Coefficients agree within `tol` on every label of either element (absent = 0).
bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol = kEqualityTolerance);

bool is_self_adjoint(const AlgebraElement& a, double tol = kEqualityTolerance);

}  // namespace weylsector
