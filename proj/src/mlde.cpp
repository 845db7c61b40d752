#include "vvmf/mlde.hpp"

namespace vvmf {

MldeIngredients ingredients(const ReprParams& p, int order) {
    MldeIngredients ing;
    ing.m1 = p.m1;
    ing.m2 = p.m2;
    ing.u.resize(order + 1);
    ing.v.resize(order + 1);

    auto s1 = sigma_table(1, order);
    auto s3 = sigma_table(3, order);
    Rational msum = p.m1 + p.m2;
    Rational mdiff = p.m1 - p.m2;

    ing.u[0] = 1 - msum;
    ing.v[0] = p.m1 * p.m2;
    Rational v_s3_factor = 10 * (msum - 6 * mdiff * mdiff);
    for (int n = 1; n <= order; ++n) {
        ing.u[n] = 24 * msum * Rational(s1[n]);
        Integer conv = 0;  // sum_{r=1}^{n-1} sigma_1(r) sigma_1(n-r)
        for (int r = 1; r < n; ++r) conv += s1[r] * s1[n - r];
        ing.v[n] = p.k0 * msum * Rational(24 * conv - 2 * s1[n]) +
                   v_s3_factor * Rational(s3[n]);
    }
    return ing;
}

QSeries f0_direct(const ReprParams& p, int component, int order) {
    if (p.M < 2)
        throw IndicialCollision("projective level M >= 2 required");
    MldeIngredients ing = ingredients(p, order);
    Rational m = component == 1 ? p.m1 : p.m2;

    std::vector<Rational> a(order + 1);
    a[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational denom = ing.indicial(m + n);
        if (denom == 0)
            throw IndicialCollision("indicial root collision at n = " +
                                    std::to_string(n));
        Rational acc = 0;
        for (int j = 1; j <= n; ++j)
            acc += a[n - j] * (ing.u[j] * (m + (n - j)) + ing.v[j]);
        a[n] = -acc / denom;
    }
    return QSeries(m, std::move(a));
}

QSeries f0_sj_form(const ReprParams& p, int component, int order) {
    if (p.M < 2)
        throw IndicialCollision("projective level M >= 2 required");
    MldeIngredients ing = ingredients(p, order);
    // Component 2 swaps the exponent roles: a -> b, d -> -d.
    long e = component == 1 ? p.a : p.b;
    long d = component == 1 ? p.d : -p.d;
    Rational m = component == 1 ? p.m1 : p.m2;

    // s_j(n) = (e + N(n-j)) u_j + N v_j is affine in (n-j).
    std::vector<Rational> s_const(order + 1), s_slope(order + 1);
    for (int j = 1; j <= order; ++j) {
        s_const[j] = e * ing.u[j] + p.N * ing.v[j];
        s_slope[j] = p.N * ing.u[j];
    }

    std::vector<Rational> a(order + 1);
    a[0] = 1;
    for (long n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (long j = 1; j <= n; ++j)
            acc += a[n - j] * (s_const[j] + (n - j) * s_slope[j]);
        Rational denom = Rational(n) * p.c * (p.M * n + d);
        if (denom == 0)
            throw IndicialCollision("vanishing denominator at n = " +
                                    std::to_string(n));
        a[n] = -acc / denom;
    }
    return QSeries(m, std::move(a));
}

VvmfForm minimal_form(const ReprParams& p, int order, bool use_sj_form) {
    auto compute = use_sj_form ? f0_sj_form : f0_direct;
    return VvmfForm{p.k0, compute(p, 1, order), compute(p, 2, order), p};
}

VvmfForm modular_derivative(const VvmfForm& f, const EisensteinCache& eis) {
    if (eis.order < f.comp1.order())
        throw DomainError("Eisenstein cache order too small");
    auto apply = [&](const QSeries& comp) {
        return q_d_dq(comp) + f.weight * mul(eis.e2, comp);
    };
    return VvmfForm{f.weight + 2, apply(f.comp1), apply(f.comp2), f.params};
}

QSeries mlde_residual(const ReprParams& p, const QSeries& f,
                      const EisensteinCache& eis) {
    if (eis.order < f.order())
        throw DomainError("Eisenstein cache order too small");
    QSeries theta = q_d_dq(f);                 // q f'
    QSeries q2_f2 = q_d_dq(theta) - theta;     // q^2 f''
    QSeries u_series = QSeries::constant(1, eis.order) +
                       (2 * (p.k0 + 1)) * eis.e2;
    QSeries v_series = (p.k0 * (p.k0 + 1)) * mul(eis.e2, eis.e2) +
                       (p.kappa1 + p.k0 / 144) * eis.e4;
    return q2_f2 + mul(u_series, theta) + mul(v_series, f);
}

}  // namespace vvmf
