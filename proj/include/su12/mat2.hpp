#pragma once

#include "su12/series.hpp"

#include <array>
#include <iosfwd>

namespace su12 {

/// Column vector of two truncated series (an element of R^2, R = Q(sqrt2)[[zeta]]/zeta^T).
struct SeriesVec2 {
    TruncatedSeries first;
    TruncatedSeries second;

    friend bool operator==(const SeriesVec2&, const SeriesVec2&) = default;
};

/// 2x2 matrix over truncated series, row-major.
class Mat2 {
public:
    explicit Mat2(std::size_t order = default_truncation);
    Mat2(TruncatedSeries a11, TruncatedSeries a12, TruncatedSeries a21, TruncatedSeries a22);

    static Mat2 identity(std::size_t order);
    static Mat2 diag(TruncatedSeries d1, TruncatedSeries d2);
    /// Matrix whose columns are the given vectors.
    static Mat2 from_columns(const SeriesVec2& c1, const SeriesVec2& c2);
    /// Matrix with constant entries.
    static Mat2 constant(const Scalar& a11, const Scalar& a12, const Scalar& a21, const Scalar& a22,
                         std::size_t order);

    std::size_t order() const { return e_[0].order(); }
    /// Zero-based (row, col).
    const TruncatedSeries& operator()(int row, int col) const { return e_[2 * row + col]; }
    TruncatedSeries& operator()(int row, int col) { return e_[2 * row + col]; }

    SeriesVec2 column(int col) const { return {(*this)(0, col), (*this)(1, col)}; }

    Mat2 operator-() const;
    friend Mat2 operator+(const Mat2& a, const Mat2& b);
    friend Mat2 operator-(const Mat2& a, const Mat2& b);
    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend Mat2 operator*(const TruncatedSeries& s, const Mat2& a);
    friend SeriesVec2 operator*(const Mat2& a, const SeriesVec2& v);

    friend bool operator==(const Mat2&, const Mat2&) = default;

private:
    std::array<TruncatedSeries, 4> e_;
};

TruncatedSeries mat2_det(const Mat2& a);
Mat2 mat2_mul(const Mat2& a, const Mat2& b);
/// adj([[a,b],[c,d]]) = [[d,-b],[-c,a]].
Mat2 mat2_adjugate(const Mat2& a);
/// Invertible over the truncated ring iff det has nonzero constant term.
bool is_unit_matrix(const Mat2& a);
/// Throws NonUnit for a non-unit matrix.
Mat2 mat2_inverse(const Mat2& a);

std::ostream& operator<<(std::ostream& os, const Mat2& m);

} // namespace su12
