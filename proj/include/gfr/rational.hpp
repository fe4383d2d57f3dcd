#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "gfr/errors.hpp"

namespace gfr {

// Exact rational over 64-bit integers, always normalized (gcd 1, positive
// denominator). Intermediate products go through 128-bit arithmetic and
// overflow raises DomainError instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    // "7/2", "-3", "4". Throws BadParamError on malformed input.
    static Rational parse(std::string_view text);

    std::string str() const;

private:
    void normalize();

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace gfr
