#include "vvmf/eisenstein.hpp"

namespace vvmf {

Integer sigma(unsigned k, long n) {
    if (n < 1) throw DomainError("sigma(k, n) requires n >= 1");
    Integer total = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Integer dk, ck;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
        total += dk;
        long cod = n / d;
        if (cod != d) {
            mpz_ui_pow_ui(ck.get_mpz_t(), static_cast<unsigned long>(cod), k);
            total += ck;
        }
    }
    return total;
}

std::vector<Integer> sigma_table(unsigned k, int order) {
    std::vector<Integer> table(order + 1, Integer(0));
    for (long d = 1; d <= order; ++d) {
        Integer dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
        for (long n = d; n <= order; n += d) table[n] += dk;
    }
    return table;
}

QSeries eisenstein2(int order) {
    auto s1 = sigma_table(1, order);
    std::vector<Rational> c(order + 1);
    c[0] = rat(-1, 12);
    for (int n = 1; n <= order; ++n) c[n] = Rational(2 * s1[n]);
    return QSeries(0, std::move(c));
}

QSeries eisenstein4(int order) {
    auto s3 = sigma_table(3, order);
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (int n = 1; n <= order; ++n) c[n] = Rational(240 * s3[n]);
    return QSeries(0, std::move(c));
}

QSeries eisenstein6(int order) {
    auto s5 = sigma_table(5, order);
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (int n = 1; n <= order; ++n) c[n] = Rational(-504 * s5[n]);
    return QSeries(0, std::move(c));
}

}  // namespace vvmf
