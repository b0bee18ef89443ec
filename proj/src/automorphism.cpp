#include "weylsector/automorphism.hpp"

#include <sstream>

namespace weylsector {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

LabelImage act_step(const Automorphism::Step& step, const LabelImage& in) {
    return std::visit(
        overloaded{
            [&](const Automorphism::Adjoint& s) {
                return LabelImage{in.label, in.turns + adjoint_action_turns(s.by, in.label)};
            },
            [&](const Automorphism::FreeMotion& s) {
                auto pairs = in.label.pairs();
                Rational turns = in.turns;
                for (std::size_t i = 0; i < pairs.size() && i < s.shift.size(); ++i) {
                    const auto& u = pairs[i].u;
                    turns += s.shift[i] * u * u * Rational(1, 2);
                    pairs[i].b += s.shift[i] * u;
                }
                return LabelImage{WeylLabel(std::move(pairs)), turns};
            },
        },
        step);
}

}  // namespace

Automorphism Automorphism::adjoint_by(const WeylLabel& by) {
    Automorphism a;
    a.steps_.emplace_back(Adjoint{by});
    return a;
}

Automorphism Automorphism::free_motion(FreeMotion step) {
    Automorphism a;
    a.steps_.emplace_back(std::move(step));
    return a;
}

std::string Automorphism::kind() const {
    if (steps_.empty()) return "identity";
    if (steps_.size() > 1) return "composition";
    return std::holds_alternative<Adjoint>(steps_.front()) ? "adjoint" : "free_evolution";
}

LabelImage Automorphism::act(const WeylLabel& label) const {
    LabelImage img{label, Rational{}};
    for (const auto& step : steps_) img = act_step(step, img);
    return img;
}

AlgebraElement Automorphism::apply(const AlgebraElement& a) const {
    if (steps_.empty()) return a;
    AlgebraElement::TermMap out;
    for (const auto& [label, c] : a.terms()) {
        auto img = act(label);
        out[img.label] += TurnPhase(img.turns).value() * c;
    }
    return AlgebraElement(std::move(out));
}

Automorphism Automorphism::inverse() const {
    Automorphism inv;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        std::visit(overloaded{
                       [&](const Adjoint& s) { inv.steps_.emplace_back(Adjoint{-s.by}); },
                       [&](const FreeMotion& s) {
                           FreeMotion back = s;
                           for (auto& r : back.shift) r = -r;
                           back.time = -s.time;
                           inv.steps_.emplace_back(std::move(back));
                       },
                   },
                   *it);
    }
    return inv;
}

Automorphism Automorphism::after(const Automorphism& inner) const {
    Automorphism out = inner;
    out.steps_.insert(out.steps_.end(), steps_.begin(), steps_.end());
    return out;
}

std::string Automorphism::describe() const {
    if (steps_.empty()) return "identity";
    std::ostringstream os;
    for (std::size_t i = steps_.size(); i-- > 0;) {
        std::visit(overloaded{
                       [&](const Adjoint& s) { os << "Ad[" << s.by.str() << "]"; },
                       [&](const FreeMotion& s) { os << "free[t=" << s.time << ",m=" << s.mass << "]"; },
                   },
                   steps_[i]);
        if (i > 0) os << " o ";
    }
    return os.str();
}

}  // namespace weylsector
