#include "vvmf/qseries.hpp"

#include <algorithm>

namespace vvmf {

QSeries::QSeries(Rational offset, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {
    if (offset_ < 0 || offset_ >= 1)
        throw DomainError("series offset must lie in [0, 1)");
    if (coeffs_.empty())
        throw DomainError("series needs at least the constant coefficient");
}

QSeries QSeries::zero(int order) {
    return QSeries(0, std::vector<Rational>(order + 1, Rational(0)));
}

QSeries QSeries::constant(const Rational& value, int order) {
    std::vector<Rational> c(order + 1, Rational(0));
    c[0] = value;
    return QSeries(0, std::move(c));
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& r) { return r == 0; });
}

QSeries QSeries::truncated(int order) const {
    if (order > this->order())
        throw DomainError("cannot extend a truncated series");
    return QSeries(offset_,
                   std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

QSeries add(const QSeries& x, const QSeries& y) {
    if (x.offset_ != y.offset_)
        throw OffsetMismatch("adding series with different offsets");
    int order = std::min(x.order(), y.order());
    std::vector<Rational> c(order + 1);
    for (int n = 0; n <= order; ++n) c[n] = x.coeffs_[n] + y.coeffs_[n];
    return QSeries(x.offset_, std::move(c));
}

QSeries sub(const QSeries& x, const QSeries& y) {
    return add(x, scalar_mul(-1, y));
}

QSeries mul(const QSeries& x, const QSeries& y) {
    if (x.offset_ != 0 && y.offset_ != 0)
        throw OffsetMismatch("at most one factor may have a nonzero offset");
    int order = std::min(x.order(), y.order());
    std::vector<Rational> c(order + 1, Rational(0));
    for (int i = 0; i <= order; ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j)
            c[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return QSeries(x.offset_ + y.offset_, std::move(c));
}

QSeries scalar_mul(const Rational& c, const QSeries& x) {
    std::vector<Rational> out(x.coeffs_.size());
    for (size_t n = 0; n < out.size(); ++n) out[n] = c * x.coeffs_[n];
    return QSeries(x.offset_, std::move(out));
}

QSeries q_d_dq(const QSeries& x) {
    std::vector<Rational> out(x.coeffs_.size());
    for (size_t n = 0; n < out.size(); ++n)
        out[n] = (x.offset_ + Rational(static_cast<long>(n))) * x.coeffs_[n];
    return QSeries(x.offset_, std::move(out));
}

QSeries operator+(const QSeries& x, const QSeries& y) { return add(x, y); }
QSeries operator-(const QSeries& x, const QSeries& y) { return sub(x, y); }
QSeries operator*(const QSeries& x, const QSeries& y) { return mul(x, y); }
QSeries operator*(const Rational& c, const QSeries& x) { return scalar_mul(c, x); }

}  // namespace vvmf
