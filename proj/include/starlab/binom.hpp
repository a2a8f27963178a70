#ifndef STARLAB_BINOM_HPP
#define STARLAB_BINOM_HPP

#include <cstdint>

#include "starlab/errors.hpp"

namespace starlab {

inline constexpr int kMaxGround = 62;

// C(n,r) for 0 <= n <= 62, exact in 64 bits (C(62,31) < 2^63).
// Out-of-range r yields 0, matching the combinatorial convention.
inline std::uint64_t binom(int n, int r) {
    if (n < 0 || n > kMaxGround) throw DomainError("binom: n out of range");
    if (r < 0 || r > n) return 0;
    static const auto table = [] {
        struct Table {
            std::uint64_t c[kMaxGround + 1][kMaxGround + 1];
        };
        Table t{};
        for (int i = 0; i <= kMaxGround; ++i) {
            t.c[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t.c[i][j] = t.c[i - 1][j - 1] + (j <= i - 1 ? t.c[i - 1][j] : 0);
        }
        return t;
    }();
    return table.c[n][r];
}

} // namespace starlab

#endif
