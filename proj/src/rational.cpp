#include "wedge/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace wedge {

namespace {

using Wide = __int128;

long long narrow(Wide v, const char* what) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw OverflowError(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Wide n = num_, d = den_;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(n, d);
    num_ = narrow(n / g, "normalize");
    den_ = narrow(d / g, "normalize");
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s, const char* what) -> long long {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw ParseError(std::string("bad rational ") + what + ": '" + std::string(text) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, "numerator"));
    long long p = parse_int(text.substr(0, slash), "numerator");
    long long q = parse_int(text.substr(slash + 1), "denominator");
    if (q <= 0) throw ParseError("rational denominator must be positive: '" + std::string(text) + "'");
    return Rational(p, q);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-Wide(num_), "negate");
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    Wide n = Wide(num_) * o.den_ + Wide(o.num_) * den_;
    Wide d = Wide(den_) * o.den_;
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    Wide g = wide_gcd(n, d);
    num_ = narrow(n / g, "add");
    den_ = narrow(d / g, "add");
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    Wide n = Wide(num_) * o.num_;
    Wide d = Wide(den_) * o.den_;
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    Wide g = wide_gcd(n, d);
    num_ = narrow(n / g, "mul");
    den_ = narrow(d / g, "mul");
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Wide lhs = Wide(a.num_) * b.den_;
    Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace wedge
