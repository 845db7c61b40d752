#include "vvmf/decompose.hpp"

#include <algorithm>

namespace vvmf {

namespace {

std::vector<std::pair<int, int>> monomials_of_weight(long weight) {
    std::vector<std::pair<int, int>> out;
    if (weight < 0 || weight % 2 != 0) return out;
    for (int i = 0; 4 * i <= weight; ++i) {
        long rest = weight - 4 * i;
        if (rest % 6 == 0) out.emplace_back(i, static_cast<int>(rest / 6));
    }
    return out;
}

QSeries power(const QSeries& base, int exp, int order) {
    QSeries acc = QSeries::constant(1, order);
    for (int i = 0; i < exp; ++i) acc = mul(acc, base);
    return acc;
}

}  // namespace

QSeries expand_polynomial(const std::vector<E4E6Monomial>& poly, long weight,
                          const EisensteinCache& eis, int order) {
    QSeries acc = QSeries::zero(order);
    for (const auto& mono : poly) {
        if (4L * mono.i + 6L * mono.j != weight)
            throw WeightMismatch("monomial weight does not match form weight");
        QSeries term = mul(power(eis.e4, mono.i, order),
                           power(eis.e6, mono.j, order));
        acc = acc + mono.coeff * term;
    }
    return acc;
}

std::vector<E4E6Monomial> fit_polynomial(const QSeries& series, long weight,
                                         const EisensteinCache& eis) {
    if (series.offset() != 0)
        throw NotInSpan("scalar modular forms have offset 0");
    auto monos = monomials_of_weight(weight);
    if (monos.empty()) {
        if (series.is_zero()) return {};
        throw NotInSpan("no modular forms of weight " + std::to_string(weight));
    }
    int order = std::min(series.order(), eis.order);
    size_t dim = monos.size();
    if (static_cast<size_t>(order) + 1 < dim)
        throw NotInSpan("series truncated below the basis dimension");

    std::vector<QSeries> basis;
    basis.reserve(dim);
    for (auto [i, j] : monos)
        basis.push_back(mul(power(eis.e4, i, order), power(eis.e6, j, order)));

    // Solve the square system on the first dim coefficients by Gaussian
    // elimination, then verify the remaining ones.
    std::vector<std::vector<Rational>> aug(dim,
                                           std::vector<Rational>(dim + 1));
    for (size_t row = 0; row < dim; ++row) {
        for (size_t col = 0; col < dim; ++col)
            aug[row][col] = basis[col].coeff(static_cast<int>(row));
        aug[row][dim] = series.coeff(static_cast<int>(row));
    }
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        while (pivot < dim && aug[pivot][col] == 0) ++pivot;
        if (pivot == dim) throw NotInSpan("singular basis system");
        std::swap(aug[col], aug[pivot]);
        for (size_t row = 0; row < dim; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            Rational factor = aug[row][col] / aug[col][col];
            for (size_t k = col; k <= dim; ++k)
                aug[row][k] -= factor * aug[col][k];
        }
    }
    std::vector<E4E6Monomial> out;
    for (size_t col = 0; col < dim; ++col) {
        Rational x = aug[col][dim] / aug[col][col];
        if (x != 0) out.push_back({monos[col].first, monos[col].second, x});
    }
    QSeries check = expand_polynomial(out, weight, eis, order);
    for (int n = 0; n <= order; ++n)
        if (check.coeff(n) != series.coeff(n))
            throw NotInSpan("series is not a weight-" + std::to_string(weight) +
                            " polynomial in E4, E6 (first failure at n = " +
                            std::to_string(n) + ")");
    return out;
}

VvmfForm reconstruct(const ScalarModularForm& alpha,
                     const ScalarModularForm& beta, const VvmfForm& f0,
                     const VvmfForm& df0) {
    if (alpha.weight != beta.weight + 2)
        throw WeightMismatch("need wt(alpha) = wt(beta) + 2");
    auto comp = [&](int i) {
        return mul(alpha.series, f0.component(i)) +
               mul(beta.series, df0.component(i));
    };
    return VvmfForm{f0.weight + alpha.weight, comp(1), comp(2), f0.params};
}

Decomposition decompose(const VvmfForm& g, const VvmfForm& f0,
                        const VvmfForm& df0) {
    const ReprParams& p = f0.params;
    Rational alpha_weight = g.weight - f0.weight;
    if (!is_integer(alpha_weight) || alpha_weight < 0 ||
        alpha_weight.get_num() % 2 != 0)
        throw NotInSpan("weight difference must be a nonnegative even integer");
    long wa = alpha_weight.get_num().get_si();
    long wb = wa - 2;

    int order = std::min({g.comp1.order(), g.comp2.order(), f0.comp1.order(),
                          df0.comp1.order()});

    // Leading column of DF0; invertible system since m1 != m2.
    Rational lead1 = df0.comp1.coeff(0);
    Rational lead2 = df0.comp2.coeff(0);
    if (lead1 == lead2) throw NotInSpan("degenerate leading column");

    std::vector<Rational> c(order + 1), d(order + 1);
    for (int n = 0; n <= order; ++n) {
        Rational rhs1 = g.comp1.coeff(n);
        Rational rhs2 = g.comp2.coeff(n);
        for (int j = 1; j <= n; ++j) {
            rhs1 -= c[n - j] * f0.comp1.coeff(j) + d[n - j] * df0.comp1.coeff(j);
            rhs2 -= c[n - j] * f0.comp2.coeff(j) + d[n - j] * df0.comp2.coeff(j);
        }
        d[n] = (rhs1 - rhs2) / (lead1 - lead2);
        c[n] = rhs1 - d[n] * lead1;
    }

    // M has no forms of weight 2 and none of negative weight, so the beta
    // slot must be empty in those cases.
    if (wb == 2 || wb < 0) {
        for (int n = 0; n <= order; ++n)
            if (d[n] != 0)
                throw NotInSpan("beta would need weight " +
                                std::to_string(wb));
    }

    return Decomposition{
        ScalarModularForm{wa, QSeries(0, std::move(c)), std::nullopt},
        ScalarModularForm{wb, QSeries(0, std::move(d)), std::nullopt},
        g.weight};
}

}  // namespace vvmf
