#pragma once

/**
 * Exact rational numbers with 64-bit components.
 *
 * Always reduced: gcd(|num|, den) == 1 and den > 0; zero is 0/1.
 * Every operation is checked; on overflow a RationalOverflow is thrown
 * instead of wrapping.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace weylsector {

class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Largest integer <= *this.
    std::int64_t floor() const;

    /// Representative of *this mod 1 in [0, 1).
    Rational frac() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    /// "p" or "p/q".
    std::string str() const;

    /// Parses "p" or "p/q" (optional leading sign, q > 0). Throws InputError.
    static Rational parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace weylsector

template <>
struct std::hash<weylsector::Rational> {
    std::size_t operator()(const weylsector::Rational& r) const noexcept {
        auto h = std::hash<std::int64_t>{}(r.num());
        return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
