#include "homsim/combinatorics.hpp"

#include <array>
#include <stdexcept>

namespace homsim {

namespace {

struct PascalTable {
    // row n starts at n*(n+1)/2
    std::array<std::int64_t, (max_binomial_n + 1) * (max_binomial_n + 2) / 2> c{};
    constexpr PascalTable() {
        for (int n = 0; n <= max_binomial_n; ++n) {
            const int row = n * (n + 1) / 2;
            c[row] = 1;
            c[row + n] = 1;
            for (int k = 1; k < n; ++k)
                c[row + k] = c[row - n + k - 1] + c[row - n + k];
        }
    }
};

constexpr PascalTable pascal{};

}  // namespace

std::int64_t binomial(int n, int k) {
    if (n < 0 || n > max_binomial_n)
        throw std::invalid_argument("binomial: n out of the exact-table range");
    if (k < 0 || k > n) return 0;
    return pascal.c[n * (n + 1) / 2 + k];
}

double factorial(int n) {
    if (n < 0 || n > 170)
        throw std::invalid_argument("factorial: argument out of range");
    static const auto table = [] {
        std::array<double, 171> f{};
        long double acc = 1.0L;
        f[0] = 1.0;
        for (int i = 1; i <= 170; ++i) {
            acc *= i;
            f[i] = static_cast<double>(acc);
        }
        return f;
    }();
    return table[n];
}

}  // namespace homsim
