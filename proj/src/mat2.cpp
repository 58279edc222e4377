#include "su12/mat2.hpp"

#include "su12/errors.hpp"

#include <ostream>

namespace su12 {

Mat2::Mat2(std::size_t order)
    : e_{TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order)}
{
}

Mat2::Mat2(TruncatedSeries a11, TruncatedSeries a12, TruncatedSeries a21, TruncatedSeries a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)}
{
    for (const auto& s : e_) {
        if (s.order() != e_[0].order()) {
            throw OrderMismatch("matrix entries have different truncation orders");
        }
    }
}

Mat2 Mat2::identity(std::size_t order)
{
    return constant(1, 0, 0, 1, order);
}

Mat2 Mat2::diag(TruncatedSeries d1, TruncatedSeries d2)
{
    const std::size_t order = d1.order();
    return Mat2(std::move(d1), TruncatedSeries(order), TruncatedSeries(order), std::move(d2));
}

Mat2 Mat2::from_columns(const SeriesVec2& c1, const SeriesVec2& c2)
{
    return Mat2(c1.first, c2.first, c1.second, c2.second);
}

Mat2 Mat2::constant(const Scalar& a11, const Scalar& a12, const Scalar& a21, const Scalar& a22,
                    std::size_t order)
{
    return Mat2(TruncatedSeries::constant(a11, order), TruncatedSeries::constant(a12, order),
                TruncatedSeries::constant(a21, order), TruncatedSeries::constant(a22, order));
}

Mat2 Mat2::operator-() const
{
    return Mat2(-e_[0], -e_[1], -e_[2], -e_[3]);
}

Mat2 operator+(const Mat2& a, const Mat2& b)
{
    return Mat2(a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]);
}

Mat2 operator-(const Mat2& a, const Mat2& b)
{
    return Mat2(a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]);
}

Mat2 operator*(const Mat2& a, const Mat2& b)
{
    return Mat2(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

Mat2 operator*(const TruncatedSeries& s, const Mat2& a)
{
    return Mat2(s * a.e_[0], s * a.e_[1], s * a.e_[2], s * a.e_[3]);
}

SeriesVec2 operator*(const Mat2& a, const SeriesVec2& v)
{
    return {a(0, 0) * v.first + a(0, 1) * v.second, a(1, 0) * v.first + a(1, 1) * v.second};
}

TruncatedSeries mat2_det(const Mat2& a)
{
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b)
{
    return a * b;
}

Mat2 mat2_adjugate(const Mat2& a)
{
    return Mat2(a(1, 1), -a(0, 1), -a(1, 0), a(0, 0));
}

bool is_unit_matrix(const Mat2& a)
{
    return mat2_det(a).is_unit();
}

Mat2 mat2_inverse(const Mat2& a)
{
    const TruncatedSeries det = mat2_det(a);
    if (!det.is_unit()) {
        throw NonUnit("matrix determinant is not a unit");
    }
    return det.inverse() * mat2_adjugate(a);
}

std::ostream& operator<<(std::ostream& os, const Mat2& m)
{
    return os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
}

} // namespace su12
