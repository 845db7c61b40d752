#include <doctest.h>

#include <numeric>
#include <random>

#include "vvmf/eisenstein.hpp"

using namespace vvmf;

TEST_CASE("divisor sums") {
    CHECK(sigma(1, 6) == 12);
    CHECK(sigma(3, 2) == 9);
    CHECK(sigma(1, 1) == 1);
    CHECK_THROWS_AS(sigma(1, 0), DomainError);
}

TEST_CASE("sigma table matches direct evaluation") {
    auto t = sigma_table(3, 50);
    for (int n = 1; n <= 50; ++n) CHECK(t[n] == sigma(3, n));
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> dist(1, 60);
    int tested = 0;
    while (tested < 200) {
        long m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1) continue;
        for (unsigned k : {1u, 3u, 5u})
            CHECK(sigma(k, m * n) == sigma(k, m) * sigma(k, n));
        ++tested;
    }
}

TEST_CASE("E2 expansion") {
    QSeries e2 = eisenstein2(4);
    CHECK(e2.coeff(0) == rat(-1, 12));
    CHECK(e2.coeff(1) == 2);
    CHECK(e2.coeff(4) == 14);  // 2 sigma_1(4)
}

TEST_CASE("E4 and E6 expansions") {
    QSeries e4 = eisenstein4(2);
    CHECK(e4.coeff(0) == 1);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    QSeries e6 = eisenstein6(1);
    CHECK(e6.coeff(0) == 1);
    CHECK(e6.coeff(1) == -504);
}

TEST_CASE("discriminant identity pins the normalizations") {
    EisensteinCache eis(30);
    QSeries disc = mul(mul(eis.e4, eis.e4), eis.e4) - mul(eis.e6, eis.e6);
    CHECK(disc.coeff(0) == 0);
    CHECK(disc.coeff(1) == 1728);
    // Delta = q prod (1-q^n)^24 has integer coefficients; spot-check tau(2)
    CHECK(disc.coeff(2) == 1728 * -24);
}

TEST_CASE("higher-order recomputation extends the expansion") {
    QSeries small = eisenstein2(20);
    QSeries big = eisenstein2(40);
    for (int n = 0; n <= 20; ++n) CHECK(small.coeff(n) == big.coeff(n));
}
