#include "gfr/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace gfr {

namespace {

long long narrow(__int128 v, const char* op) {
    if (v > static_cast<__int128>(9223372036854775807LL) ||
        v < -static_cast<__int128>(9223372036854775807LL) - 1)
        throw DomainError(std::string("rational overflow in ") + op);
    return static_cast<long long>(v);
}

} // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(narrow(n, "+"), narrow(d, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(narrow(n, "*"), narrow(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    __int128 n = static_cast<__int128>(num_) * o.den_;
    __int128 d = static_cast<__int128>(den_) * o.num_;
    return Rational(narrow(n, "/"), narrow(d, "/"));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 l = static_cast<__int128>(num_) * o.den_;
    __int128 r = static_cast<__int128>(o.num_) * den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw BadParamError("malformed rational '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    auto read_int = [&]() -> long long {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) bad();
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (v > (9223372036854775807LL - 9) / 10) throw DomainError("rational literal overflow");
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    };
    long long n = read_int();
    long long d = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        d = read_int();
    }
    if (pos != text.size()) bad();
    return Rational(n, d);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace gfr
