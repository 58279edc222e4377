#include "su12/series.hpp"

#include "su12/errors.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace su12 {

namespace {

void check_order(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order()) {
        throw OrderMismatch("truncation orders differ: " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order)
{
    if (order == 0) {
        throw std::invalid_argument("truncation order must be positive");
    }
}

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs, std::size_t order) : coeffs_(std::move(coeffs))
{
    if (order == 0) {
        throw std::invalid_argument("truncation order must be positive");
    }
    coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, std::size_t order)
{
    return monomial(c, 0, order);
}

TruncatedSeries TruncatedSeries::zeta(std::size_t order)
{
    return monomial(Scalar(1), 1, order);
}

TruncatedSeries TruncatedSeries::monomial(const Scalar& c, std::size_t k, std::size_t order)
{
    TruncatedSeries s(order);
    if (k < order) {
        s.coeffs_[k] = c;
    }
    return s;
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

std::size_t TruncatedSeries::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) {
            return k;
        }
    }
    return coeffs_.size();
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out(*this);
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    check_order(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    check_order(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_order(a, b);
    const std::size_t order = a.order();
    TruncatedSeries out(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < order; ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs)
{
    return *this = *this * rhs;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& rhs)
{
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    return *this;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (!is_unit()) {
        throw NonUnit("series with zero constant term is not invertible");
    }
    // b_0 = 1/a_0, b_k = -(1/a_0) * sum_{i=1..k} a_i b_{k-i}
    const std::size_t order = coeffs_.size();
    const Scalar inv0 = coeffs_[0].inverse();
    TruncatedSeries out(order);
    out.coeffs_[0] = inv0;
    for (std::size_t k = 1; k < order; ++k) {
        Scalar acc;
        for (std::size_t i = 1; i <= k; ++i) {
            acc += coeffs_[i] * out.coeffs_[k - i];
        }
        out.coeffs_[k] = -(acc * inv0);
    }
    return out;
}

TruncatedSeries TruncatedSeries::shift_up(std::size_t k) const
{
    TruncatedSeries out(order());
    for (std::size_t i = 0; i + k < order(); ++i) {
        out.coeffs_[i + k] = coeffs_[i];
    }
    return out;
}

TruncatedSeries TruncatedSeries::divide_by_zeta_power(std::size_t k) const
{
    if (valuation() < k) {
        throw DomainError("series is not divisible by zeta^" + std::to_string(k));
    }
    TruncatedSeries out(order());
    for (std::size_t i = k; i < order(); ++i) {
        out.coeffs_[i - k] = coeffs_[i];
    }
    return out;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t order) const
{
    return TruncatedSeries(coeffs_, order);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a * b;
}

TruncatedSeries series_inverse(const TruncatedSeries& a)
{
    return a.inverse();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
{
    os << '[';
    for (std::size_t k = 0; k < s.order(); ++k) {
        if (k != 0) {
            os << ", ";
        }
        os << s[k];
    }
    return os << ']';
}

} // namespace su12
