#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "gfr/errors.hpp"

namespace gfr {

// Natural number extended with infinity. Used for distances and radii:
// any finite value compares below inf, and inf absorbs addition.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t n) : v_(n) {}

    static constexpr ExtNat inf() {
        ExtNat e;
        e.v_ = kInf;
        return e;
    }

    constexpr bool is_inf() const { return v_ == kInf; }

    std::uint64_t value() const {
        if (is_inf()) throw DomainError("ExtNat: value() on infinity");
        return v_;
    }

    friend constexpr auto operator<=>(ExtNat a, ExtNat b) = default;

    constexpr ExtNat operator+(ExtNat o) const {
        if (is_inf() || o.is_inf()) return inf();
        if (v_ > kInf - 1 - o.v_) return inf(); // saturate
        return ExtNat(v_ + o.v_);
    }

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t v_ = 0;
};

} // namespace gfr
