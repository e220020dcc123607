#pragma once

#include <cstdint>

namespace homsim {

// Largest n for which the exact integer binomial table is kept; C(64,32)
// still fits in a signed 64-bit integer.
inline constexpr int max_binomial_n = 64;

// Exact C(n, k) from a Pascal table. Throws std::invalid_argument for
// n < 0 or n > max_binomial_n; returns 0 outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

// n! as a double (exact for n <= 22, correctly rounded beyond).
// Valid for 0 <= n <= 170.
double factorial(int n);

}  // namespace homsim
