#pragma once

#include <compare>
#include <ostream>

namespace ribbon {

// A value in (1/2)Z, stored doubled.
struct Half {
    int twice = 0;

    static constexpr Half whole(int n) { return Half{2 * n}; }
    constexpr bool is_integer() const { return twice % 2 == 0; }

    friend constexpr Half operator+(Half a, Half b) { return Half{a.twice + b.twice}; }
    friend constexpr Half operator-(Half a, Half b) { return Half{a.twice - b.twice}; }
    friend constexpr auto operator<=>(Half, Half) = default;
};

inline std::ostream& operator<<(std::ostream& os, Half h) {
    if (h.is_integer()) return os << h.twice / 2;
    return os << h.twice << "/2";
}

} // namespace ribbon
