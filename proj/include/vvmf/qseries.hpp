#pragma once

#include <stdexcept>
#include <vector>

#include "vvmf/rational.hpp"

namespace vvmf {

struct OffsetMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated q-expansion q^offset * (a_0 + a_1 q + ... + a_order q^order)
// with exact rational coefficients and a fractional exponent offset in
// [0, 1). Coefficients above `order` are unknown, never assumed zero.
// Immutable after construction; arithmetic returns fresh series truncated
// to the shorter operand.
class QSeries {
public:
    QSeries(Rational offset, std::vector<Rational> coeffs);

    // offset 0, given truncation order, all coefficients zero
    static QSeries zero(int order);
    static QSeries constant(const Rational& value, int order);

    const Rational& offset() const { return offset_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int n) const { return coeffs_.at(n); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    friend QSeries add(const QSeries& x, const QSeries& y);
    friend QSeries sub(const QSeries& x, const QSeries& y);
    friend QSeries mul(const QSeries& x, const QSeries& y);
    friend QSeries scalar_mul(const Rational& c, const QSeries& x);

    // q d/dq: coefficient of q^{offset+n} picks up a factor (offset + n)
    friend QSeries q_d_dq(const QSeries& x);

    QSeries truncated(int order) const;

    bool operator==(const QSeries& other) const = default;

private:
    Rational offset_;  // in [0, 1)
    std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries& x, const QSeries& y);
QSeries operator-(const QSeries& x, const QSeries& y);
QSeries operator*(const QSeries& x, const QSeries& y);
QSeries operator*(const Rational& c, const QSeries& x);

}  // namespace vvmf
