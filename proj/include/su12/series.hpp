#pragma once

#include "su12/scalar.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace su12 {

inline constexpr std::size_t default_truncation = 8;

/// Element of Q(sqrt2)[[zeta]] / (zeta^T): the coefficients of zeta^0 .. zeta^(T-1).
///
/// Binary operations require equal truncation orders and throw OrderMismatch
/// otherwise. Coefficients are stored densely; T is small in practice.
class TruncatedSeries {
public:
    /// Zero series of order T (T >= 1).
    explicit TruncatedSeries(std::size_t order = default_truncation);
    /// Coefficients beyond the order are dropped, missing ones are zero.
    TruncatedSeries(std::vector<Scalar> coeffs, std::size_t order);

    static TruncatedSeries constant(const Scalar& c, std::size_t order);
    /// The uniformizer zeta (zero when T = 1).
    static TruncatedSeries zeta(std::size_t order);
    /// c * zeta^k.
    static TruncatedSeries monomial(const Scalar& c, std::size_t k, std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
    std::span<const Scalar> coefficients() const { return coeffs_; }
    const Scalar& constant_term() const { return coeffs_.front(); }

    bool is_zero() const;
    /// Unit iff the constant term is nonzero.
    bool is_unit() const { return !constant_term().is_zero(); }
    /// Index of the first nonzero coefficient; order() for the zero series.
    std::size_t valuation() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Scalar& rhs);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) { return a *= c; }
    friend TruncatedSeries operator*(const Scalar& c, TruncatedSeries a) { return a *= c; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Multiplicative inverse mod zeta^T; throws NonUnit if the constant term is zero.
    TruncatedSeries inverse() const;

    /// Multiplication by zeta^k (coefficients shift up, overflow is truncated).
    TruncatedSeries shift_up(std::size_t k) const;
    /// Exact division by zeta^k of a series with vanishing coefficients below k.
    /// The top k coefficients of the quotient are not determined by the input
    /// and are returned as zero. Throws DomainError if not divisible.
    TruncatedSeries divide_by_zeta_power(std::size_t k) const;

    /// Same element viewed at another truncation order (pads with zeros).
    TruncatedSeries with_order(std::size_t order) const;

private:
    std::vector<Scalar> coeffs_;
};

/// Cauchy product truncated at zeta^T.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_inverse(const TruncatedSeries& a);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

} // namespace su12
