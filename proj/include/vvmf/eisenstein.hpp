#pragma once

#include <vector>

#include "vvmf/qseries.hpp"

namespace vvmf {

// sigma_k(n) = sum of k-th powers of the divisors of n, n >= 1
Integer sigma(unsigned k, long n);

// Sieved table of sigma_k(n) for n = 1..order (index 0 unused, set to 0).
std::vector<Integer> sigma_table(unsigned k, int order);

// E2 = -1/12 + 2 sum sigma_1(n) q^n   (constant term -1/12, not 1-24*sum)
QSeries eisenstein2(int order);

// E4 = 1 + 240 sum sigma_3(n) q^n
QSeries eisenstein4(int order);

// E6 = 1 - 504 sum sigma_5(n) q^n
QSeries eisenstein6(int order);

// E2, E4, E6 at a fixed truncation order, built once and shared.
struct EisensteinCache {
    int order;
    QSeries e2, e4, e6;

    explicit EisensteinCache(int order_)
        : order(order_),
          e2(eisenstein2(order_)),
          e4(eisenstein4(order_)),
          e6(eisenstein6(order_)) {}
};

}  // namespace vvmf
