#pragma once

#include <stdexcept>
#include <vector>

#include "vvmf/eisenstein.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/repclass.hpp"

namespace vvmf {

struct IndicialCollision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector-valued form: component series at offsets m1 and m2.
struct VvmfForm {
    Rational weight;
    QSeries comp1, comp2;
    ReprParams params;

    const QSeries& component(int i) const {
        return i == 1 ? comp1 : comp2;
    }
};

// Coefficient sequences of the regular-singular ODE
//   q^2 f'' + (sum u_n q^n) q f' + (sum v_n q^n) f = 0
// together with the indicial polynomial I0(s) = s^2 - (m1+m2)s + m1*m2.
struct MldeIngredients {
    std::vector<Rational> u, v;
    Rational m1, m2;

    Rational indicial(const Rational& s) const {
        return s * s - (m1 + m2) * s + m1 * m2;
    }
};

// Closed forms: u0 = 1-m1-m2, u_n = 24(m1+m2) sigma_1(n);
// v0 = m1*m2, v_n = k0(m1+m2)(24 sum_{r=1}^{n-1} sigma_1(r)sigma_1(n-r)
//                            - 2 sigma_1(n))
//              + 10(m1+m2-6(m1-m2)^2) sigma_3(n).
MldeIngredients ingredients(const ReprParams& p, int order);

// Minimal-weight component via the direct Frobenius recursion
//   a_n = - sum_{j=1}^n a_{n-j} I_j(m+n-j) / I0(m+n),  a_0 = 1,
// with m the component's own exponent. Requires M >= 2.
QSeries f0_direct(const ReprParams& p, int component, int order);

// Same coefficients via the integer-heavy rewriting
//   a_n = -1/(n c (Mn +/- d)) sum_{j=1}^n a_{n-j} s_j(n),
//   s_j(n) = (e + N(n-j)) u_j + N v_j
// with (e, sign) = (a, +) for component 1 and (b, -) for component 2.
// Independent code path; must agree with f0_direct exactly.
QSeries f0_sj_form(const ReprParams& p, int component, int order);

// Both components with a_0 = 1 at weight k0.
VvmfForm minimal_form(const ReprParams& p, int order,
                      bool use_sj_form = false);

// D_k = q d/dq + k E2, applied componentwise; weight goes up by 2.
VvmfForm modular_derivative(const VvmfForm& f, const EisensteinCache& eis);

// Left-hand side of the rewritten ODE applied to f, with the coefficient
// series built from the Eisenstein expansions, independently of the
// closed forms used by `ingredients`. Zero for a true solution.
QSeries mlde_residual(const ReprParams& p, const QSeries& f,
                      const EisensteinCache& eis);

}  // namespace vvmf
