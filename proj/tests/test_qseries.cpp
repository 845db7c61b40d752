#include <doctest.h>

#include <random>

#include "vvmf/eisenstein.hpp"
#include "vvmf/qseries.hpp"

using namespace vvmf;

namespace {

QSeries make(std::initializer_list<long> coeffs, Rational offset = 0) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return QSeries(std::move(offset), std::move(c));
}

QSeries random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    std::vector<Rational> c(order + 1);
    for (auto& r : c) r = rat(num(rng), den(rng));
    return QSeries(0, std::move(c));
}

}  // namespace

TEST_CASE("addition is componentwise") {
    CHECK(make({1, 2}) + make({3, 4}) == make({4, 6}));
    QSeries x = make({5, -7, 3});
    CHECK(x + QSeries::zero(2) == x);
}

TEST_CASE("addition cancels inverses at fractional offset") {
    QSeries x(rat(4, 7), {rat(1), rat(-153, 14)});
    QSeries y(rat(4, 7), {rat(-1), rat(153, 14)});
    QSeries sum = x + y;
    CHECK(sum.is_zero());
    CHECK(sum.offset() == rat(4, 7));
}

TEST_CASE("addition rejects mismatched offsets") {
    QSeries x(rat(1, 2), {rat(1)});
    QSeries y(rat(1, 3), {rat(1)});
    CHECK_THROWS_AS(x + y, OffsetMismatch);
}

TEST_CASE("multiplication: difference of squares") {
    CHECK(make({1, 1, 0}) * make({1, -1, 0}) == make({1, 0, -1}));
    QSeries x = make({2, 3, 5});
    CHECK(x * QSeries::constant(1, 2) == x);
}

TEST_CASE("multiplication rejects two fractional offsets") {
    QSeries x(rat(1, 2), {rat(1)});
    CHECK_THROWS_AS(mul(x, x), OffsetMismatch);
}

TEST_CASE("E2 squared has constant term 1/144") {
    QSeries e2 = eisenstein2(10);
    CHECK((e2 * e2).coeff(0) == rat(1, 144));
}

TEST_CASE("q d/dq power rule") {
    CHECK(q_d_dq(QSeries::constant(1, 3)).is_zero());
    QSeries x(rat(4, 7), {rat(1), rat(0)});
    CHECK(q_d_dq(x).coeff(0) == rat(4, 7));
    CHECK(q_d_dq(make({0, 1, 0, 3})) == make({0, 1, 0, 9}));
}

TEST_CASE("scalar multiplication") {
    QSeries x = make({3, -4, 7});
    CHECK(scalar_mul(0, x).is_zero());
    CHECK(scalar_mul(1, x) == x);
    CHECK(scalar_mul(rat(-1, 12), make({1})) == QSeries(0, {rat(-1, 12)}));
}

TEST_CASE("arithmetic truncates to the shorter operand") {
    QSeries x = make({1, 2, 3, 4});
    QSeries y = make({1, 1});
    CHECK((x + y).order() == 1);
    CHECK((x * y).order() == 1);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 50; ++trial) {
        QSeries x = random_series(rng, 8);
        QSeries y = random_series(rng, 8);
        QSeries z = random_series(rng, 8);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("Leibniz rule for q d/dq") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        QSeries x = random_series(rng, 10);
        QSeries y = random_series(rng, 10);
        CHECK(q_d_dq(x * y) == q_d_dq(x) * y + x * q_d_dq(y));
    }
}

TEST_CASE("coefficients stay canonical") {
    QSeries x(0, {rat(2, 4), rat(-6, 9)});
    CHECK(x.coeff(0).get_den() == 2);
    CHECK(x.coeff(1).get_num() == -2);
    QSeries s = x + x;
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(0).get_den() == 1);
}
