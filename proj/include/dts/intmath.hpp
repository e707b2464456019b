#pragma once

#include <cstdint>
#include <stdexcept>

namespace dts {

using u128 = unsigned __int128;
using i128 = __int128;

// Floor of sqrt(x), exact for the full u128 range.
inline u128 isqrt(u128 x) {
    if (x < 2) return x;
    u128 r = x, guess = x / 2 + 1;
    while (guess < r) {
        r = guess;
        guess = (guess + x / guess) / 2;
    }
    return r;
}

inline std::int64_t isqrt64(std::int64_t x) {
    if (x < 0) throw std::invalid_argument("isqrt64: negative input");
    return static_cast<std::int64_t>(isqrt(static_cast<u128>(x)));
}

// Floor division for possibly negative numerators.
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b) {
    return -floor_div(-a, b);
}

}  // namespace dts
