#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "vvmf/eisenstein.hpp"
#include "vvmf/mlde.hpp"
#include "vvmf/qseries.hpp"

namespace vvmf {

struct NotInSpan : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monomial coeff * E4^i * E6^j of weight 4i + 6j.
struct E4E6Monomial {
    int i = 0, j = 0;
    Rational coeff;
};

// Scalar modular form of even weight as a truncated q-expansion, with an
// optional presentation as a polynomial in E4, E6.
struct ScalarModularForm {
    long weight = 0;
    QSeries series;
    std::optional<std::vector<E4E6Monomial>> polynomial;
};

struct Decomposition {
    ScalarModularForm alpha;  // weight k - k0
    ScalarModularForm beta;   // weight k - k0 - 2
    Rational source_weight;
};

// Expands a polynomial in E4, E6; all monomials must have the given weight.
QSeries expand_polynomial(const std::vector<E4E6Monomial>& poly, long weight,
                          const EisensteinCache& eis, int order);

// Fits a series against the monomial basis E4^i E6^j of the given weight
// (exactly, to the series' truncation order) or throws NotInSpan.
std::vector<E4E6Monomial> fit_polynomial(const QSeries& series, long weight,
                                         const EisensteinCache& eis);

// Componentwise alpha * f_i + beta * g_i where g_i are the components of
// DF0. Result weight = wt(alpha) + k0.
VvmfForm reconstruct(const ScalarModularForm& alpha,
                     const ScalarModularForm& beta, const VvmfForm& f0,
                     const VvmfForm& df0);

// Solves G = alpha F0 + beta DF0 for the coefficient sequences of alpha
// and beta by the coefficient recursion: at each n a 2x2 system with
// matrix [[1, m1 - k0/12], [1, m2 - k0/12]], invertible since m1 != m2.
Decomposition decompose(const VvmfForm& g, const VvmfForm& f0,
                        const VvmfForm& df0);

}  // namespace vvmf
