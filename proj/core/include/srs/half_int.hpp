#pragma once

#include <cmath>
#include <compare>
#include <string>

#include "srs/errors.hpp"

namespace srs {

// Angular momentum quantum number stored as twice its value, so 1/2, 3/2, ...
// stay exact integers.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }

    // Accepts only exact multiples of 1/2 (within float rounding slop).
    static HalfInt from_double(double v) {
        const double tw = 2.0 * v;
        const double r = std::round(tw);
        if (std::abs(tw - r) > 1e-9)
            throw ValidationError("not a half-integer: " + std::to_string(v));
        return HalfInt(static_cast<int>(r));
    }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    explicit constexpr HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

inline HalfInt half(int twice) { return HalfInt::from_twice(twice); }

} // namespace srs
