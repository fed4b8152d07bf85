#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "wedge/errors.hpp"

namespace wedge {

/// Exact rational number with a canonical representation: gcd(num, den) = 1
/// and den > 0.  Arithmetic is checked; operations whose canonical result
/// would not fit in 64 bits throw OverflowError rather than wrap.
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : num_(n) {} // NOLINT: implicit by design
    Rational(long long n, long long d);

    /// Parses "p" or "p/q".  Accepts non-reduced input, rejects q <= 0.
    static Rational parse(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    /// Canonical form: "p" when den == 1, otherwise "p/q".
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  private:
    long long num_ = 0;
    long long den_ = 1;

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace wedge
