#include "weylsector/weyl_algebra.hpp"

#include <cmath>
#include <numbers>

namespace weylsector {

// ---------------------------------------------------------------- WeylLabel

WeylLabel::WeylLabel(Rational u, Rational b) : pairs_{{u, b}} { normalize(); }

WeylLabel::WeylLabel(std::vector<LabelPair> pairs) : pairs_(std::move(pairs)) { normalize(); }

WeylLabel WeylLabel::in_dim(std::size_t dim, Rational u, Rational b) {
    std::vector<LabelPair> pairs(dim + 1);
    pairs[dim] = {u, b};
    return WeylLabel(std::move(pairs));
}

void WeylLabel::normalize() {
    while (!pairs_.empty() && pairs_.back().u.is_zero() && pairs_.back().b.is_zero()) pairs_.pop_back();
}

bool WeylLabel::has_zero_u() const {
    for (const auto& p : pairs_)
        if (!p.u.is_zero()) return false;
    return true;
}

WeylLabel WeylLabel::u_part() const {
    auto out = pairs_;
    for (auto& p : out) p.b = Rational{};
    return WeylLabel(std::move(out));
}

WeylLabel WeylLabel::operator+(const WeylLabel& o) const {
    std::vector<LabelPair> out(std::max(dims(), o.dims()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = {u(i) + o.u(i), b(i) + o.b(i)};
    return WeylLabel(std::move(out));
}

WeylLabel WeylLabel::operator-() const {
    auto out = pairs_;
    for (auto& p : out) p = {-p.u, -p.b};
    return WeylLabel(std::move(out));
}

WeylLabel WeylLabel::scaled(const Rational& k) const {
    auto out = pairs_;
    for (auto& p : out) p = {p.u * k, p.b * k};
    return WeylLabel(std::move(out));
}

std::string WeylLabel::str() const {
    auto one = [](const std::string& name, const LabelPair& p) {
        return name + "(" + p.u.str() + "," + p.b.str() + ")";
    };
    if (pairs_.size() <= 1) return one("W", pairs_.empty() ? LabelPair{} : pairs_[0]);
    std::string out;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].u.is_zero() && pairs_[i].b.is_zero()) continue;
        if (!out.empty()) out += "*";
        out += one("W_" + std::to_string(i), pairs_[i]);
    }
    return out;
}

Rational exchange_turns(const WeylLabel& first, const WeylLabel& second) {
    Rational r;
    auto n = std::min(first.dims(), second.dims());
    for (std::size_t i = 0; i < n; ++i) r += second.u(i) * first.b(i);
    return r;
}

Rational symplectic_turns(const WeylLabel& l1, const WeylLabel& l2) {
    return exchange_turns(l2, l1) - exchange_turns(l1, l2);
}

Rational adjoint_action_turns(const WeylLabel& by, const WeylLabel& on) {
    return exchange_turns(by, on) - exchange_turns(on, by);
}

bool labels_commute(const WeylLabel& l1, const WeylLabel& l2) { return symplectic_turns(l1, l2).is_integer(); }

// ---------------------------------------------------------------- phases

Complex unit_from_turns(double turns) {
    double r = turns - std::floor(turns);
    double quarters = 4.0 * r;
    if (quarters == std::round(quarters)) {
        switch (static_cast<int>(quarters) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    double angle = 2.0 * std::numbers::pi * r;
    return {std::cos(angle), std::sin(angle)};
}

Complex TurnPhase::value() const {
    switch (r_.den()) {
        case 1: return {1.0, 0.0};
        case 2: return {-1.0, 0.0};
        case 4: return r_.num() == 1 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
        default: return unit_from_turns(r_.to_double());
    }
}

// ---------------------------------------------------------------- elements

AlgebraElement::AlgebraElement(TermMap terms) : terms_(std::move(terms)) { prune(); }

AlgebraElement AlgebraElement::identity() { return generator(WeylLabel{}); }

AlgebraElement AlgebraElement::generator(const WeylLabel& label, Complex coeff) {
    return AlgebraElement(TermMap{{label, coeff}});
}

void AlgebraElement::prune() {
    std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) <= kPruneTolerance; });
}

Complex AlgebraElement::coeff(const WeylLabel& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Complex{} : it->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    auto out = terms_;
    for (const auto& [label, c] : o.terms_) out[label] += c;
    return AlgebraElement(std::move(out));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    auto out = terms_;
    for (const auto& [label, c] : o.terms_) out[label] -= c;
    return AlgebraElement(std::move(out));
}

AlgebraElement AlgebraElement::scaled(Complex s) const {
    auto out = terms_;
    for (auto& kv : out) kv.second *= s;
    return AlgebraElement(std::move(out));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    TermMap out;
    for (const auto& [la, ca] : terms_) {
        for (const auto& [lb, cb] : o.terms_) {
            auto phase = TurnPhase(exchange_turns(la, lb));
            out[la + lb] += phase.value() * ca * cb;
        }
    }
    return AlgebraElement(std::move(out));
}

AlgebraElement make_generator(const Rational& u, const Rational& b) {
    return AlgebraElement::generator(WeylLabel(u, b));
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement adjoint(const AlgebraElement& a) {
    // W(u,b)* = V(-b)U(-u) = e^{2πi·u·b} W(-u,-b)
    AlgebraElement::TermMap out;
    for (const auto& [label, c] : a.terms()) {
        auto phase = TurnPhase(exchange_turns(label, label));
        out[-label] += phase.value() * std::conj(c);
    }
    return AlgebraElement(std::move(out));
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

AlgebraElement conjugate_by(const WeylLabel& by, const AlgebraElement& a) {
    AlgebraElement::TermMap out;
    for (const auto& [label, c] : a.terms()) out[label] += TurnPhase(adjoint_action_turns(by, label)).value() * c;
    return AlgebraElement(std::move(out));
}

double one_norm(const AlgebraElement& a) {
    double s = 0.0;
    for (const auto& kv : a.terms()) s += std::abs(kv.second);
    return s;
}

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol) {
    for (const auto& [label, c] : a.terms())
        if (std::abs(c - b.coeff(label)) > tol) return false;
    for (const auto& [label, c] : b.terms())
        if (std::abs(c - a.coeff(label)) > tol) return false;
    return true;
}

bool is_self_adjoint(const AlgebraElement& a, double tol) { return approx_equal(a, adjoint(a), tol); }

}  // namespace weylsector
