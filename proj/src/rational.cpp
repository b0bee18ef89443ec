#include "weylsector/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "weylsector/errors.hpp"

namespace weylsector {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw RationalOverflow("rational overflow in multiplication");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw RationalOverflow("rational overflow in addition");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw RationalOverflow("rational overflow in negation");
    return -a;
}

std::uint64_t uabs(std::int64_t a) {
    return a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) throw RationalOverflow("integer literal out of range: " + std::string(whole));
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InputError("not a rational literal: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InputError("rational with zero denominator");
    if (d < 0) {
        n = checked_neg(n);
        d = checked_neg(d);
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    auto g = std::gcd(uabs(n), static_cast<std::uint64_t>(d));
    num_ = n / static_cast<std::int64_t>(g);
    den_ = d / static_cast<std::int64_t>(g);
}

std::int64_t Rational::floor() const {
    auto q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::frac() const {
    auto r = num_ % den_;
    if (r < 0) r += den_;
    return Rational(r, den_);
}

Rational Rational::operator-() const { return Rational(checked_neg(num_), den_); }

Rational Rational::operator+(const Rational& o) const {
    auto g = std::gcd(den_, o.den_);
    auto lhs = checked_mul(num_, o.den_ / g);
    auto rhs = checked_mul(o.num_, den_ / g);
    return Rational(checked_add(lhs, rhs), checked_mul(den_ / g, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    if (num_ == 0 || o.num_ == 0) return {};
    // Cross-cancel first so that products of reduced operands stay small.
    auto g1 = static_cast<std::int64_t>(std::gcd(uabs(num_), static_cast<std::uint64_t>(o.den_)));
    auto g2 = static_cast<std::int64_t>(std::gcd(uabs(o.num_), static_cast<std::uint64_t>(den_)));
    return Rational(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw InputError("rational division by zero");
    return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    auto lhs = static_cast<__int128>(num_) * o.den_;
    auto rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    auto n = parse_int(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+')
        throw InputError("denominator must be a positive integer: '" + std::string(text) + "'");
    auto d = parse_int(den_text, text);
    if (d == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace weylsector
