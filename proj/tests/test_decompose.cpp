#include <doctest.h>

#include <random>

#include "vvmf/decompose.hpp"

using namespace vvmf;

namespace {

struct Fixture {
    ReprParams p = derive_params(4, 3, 7);
    EisensteinCache eis{60};
    VvmfForm f0 = minimal_form(p, 60);
    VvmfForm df0 = modular_derivative(f0, eis);

    ScalarModularForm scalar_one(long weight = 0) const {
        return {weight, QSeries::constant(1, 60), std::nullopt};
    }
    ScalarModularForm scalar_zero(long weight) const {
        return {weight, QSeries::zero(60), std::nullopt};
    }
};

std::vector<E4E6Monomial> random_polynomial(std::mt19937& rng, long weight) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::vector<E4E6Monomial> out;
    for (int i = 0; 4 * i <= weight; ++i) {
        long rest = weight - 4 * i;
        if (rest % 6 != 0) continue;
        long c = coeff(rng);
        if (c != 0) out.push_back({i, static_cast<int>(rest / 6), Rational(c)});
    }
    return out;
}

}  // namespace

TEST_CASE("identity decompositions") {
    Fixture fx;
    Decomposition id = decompose(fx.f0, fx.f0, fx.df0);
    CHECK(id.alpha.series == QSeries::constant(1, 60));
    CHECK(id.beta.series.is_zero());

    Decomposition gen = decompose(fx.df0, fx.f0, fx.df0);
    CHECK(gen.alpha.series.is_zero());
    CHECK(gen.beta.series == QSeries::constant(1, 60));
    CHECK(gen.beta.weight == 0);
}

TEST_CASE("reconstruct of the trivial pairs") {
    Fixture fx;
    VvmfForm r1 = reconstruct(fx.scalar_one(), fx.scalar_zero(-2), fx.f0, fx.df0);
    CHECK(r1.comp1 == fx.f0.comp1);
    CHECK(r1.comp2 == fx.f0.comp2);
    CHECK(r1.weight == fx.f0.weight);

    VvmfForm r2 = reconstruct(fx.scalar_zero(2), fx.scalar_one(), fx.f0, fx.df0);
    CHECK(r2.comp1 == fx.df0.comp1);
    CHECK(r2.weight == fx.f0.weight + 2);
}

TEST_CASE("E4 F0 coefficients are the convolution") {
    Fixture fx;
    ScalarModularForm e4{4, fx.eis.e4, std::nullopt};
    VvmfForm g = reconstruct(e4, fx.scalar_zero(2), fx.f0, fx.df0);
    for (int n = 0; n <= 10; ++n) {
        Rational conv = 0;
        for (int j = 0; j <= n; ++j)
            conv += fx.eis.e4.coeff(n - j) * fx.f0.comp1.coeff(j);
        CHECK(g.comp1.coeff(n) == conv);
    }
    Decomposition dec = decompose(g, fx.f0, fx.df0);
    CHECK(dec.alpha.series == fx.eis.e4);
    CHECK(dec.beta.series.is_zero());
}

TEST_CASE("round trip over random E4/E6 polynomials") {
    Fixture fx;
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> wd(0, 2);
        long wa = 4 + 4 * wd(rng);  // 4, 8, 12
        long wb = wa - 2;               // 2 slot forbidden unless empty
        auto poly_a = random_polynomial(rng, wa);
        auto poly_b = wb == 2 ? std::vector<E4E6Monomial>{}
                              : random_polynomial(rng, wb);
        ScalarModularForm alpha{wa, expand_polynomial(poly_a, wa, fx.eis, 60),
                                poly_a};
        ScalarModularForm beta{wb, expand_polynomial(poly_b, wb, fx.eis, 60),
                               poly_b};
        VvmfForm g = reconstruct(alpha, beta, fx.f0, fx.df0);
        Decomposition dec = decompose(g, fx.f0, fx.df0);
        CHECK(dec.alpha.series == alpha.series);
        CHECK(dec.beta.series == beta.series);
        VvmfForm back = reconstruct(dec.alpha, dec.beta, fx.f0, fx.df0);
        CHECK(back.comp1 == g.comp1);
        CHECK(back.comp2 == g.comp2);
    }
}

TEST_CASE("free-module property: zero reconstructs only from zero") {
    Fixture fx;
    VvmfForm zero{fx.f0.weight + 4, QSeries(fx.p.m1, std::vector<Rational>(61, 0)),
                  QSeries(fx.p.m2, std::vector<Rational>(61, 0)), fx.p};
    Decomposition dec = decompose(zero, fx.f0, fx.df0);
    CHECK(dec.alpha.series.is_zero());
    CHECK(dec.beta.series.is_zero());
}

TEST_CASE("weight errors") {
    Fixture fx;
    VvmfForm odd{fx.f0.weight + 3, fx.f0.comp1, fx.f0.comp2, fx.p};
    CHECK_THROWS_AS(decompose(odd, fx.f0, fx.df0), NotInSpan);
    VvmfForm low{fx.f0.weight - 2, fx.f0.comp1, fx.f0.comp2, fx.p};
    CHECK_THROWS_AS(decompose(low, fx.f0, fx.df0), NotInSpan);
    CHECK_THROWS_AS(
        reconstruct(fx.scalar_one(4), fx.scalar_one(4), fx.f0, fx.df0),
        WeightMismatch);
}

TEST_CASE("weight-2 beta slot must stay empty") {
    Fixture fx;
    // weight k0 + 4 with a nonzero DF0 part of weight 2 cannot decompose
    ScalarModularForm bad_beta{2, fx.eis.e2, std::nullopt};  // not in M anyway
    VvmfForm g = reconstruct(fx.scalar_zero(4), bad_beta, fx.f0, fx.df0);
    CHECK_THROWS_AS(decompose(g, fx.f0, fx.df0), NotInSpan);
}

TEST_CASE("polynomial presentation round trip") {
    Fixture fx;
    std::mt19937 rng(5);
    for (long weight : {0L, 4L, 6L, 8L, 10L, 12L}) {
        auto poly = random_polynomial(rng, weight);
        QSeries series = expand_polynomial(poly, weight, fx.eis, 60);
        auto fitted = fit_polynomial(series, weight, fx.eis);
        CHECK(expand_polynomial(fitted, weight, fx.eis, 60) == series);
    }
    CHECK_THROWS_AS(fit_polynomial(fx.eis.e2, 2, fx.eis), NotInSpan);
}
