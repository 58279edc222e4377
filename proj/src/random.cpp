#include "su12/random.hpp"

namespace su12 {

int SampleGenerator::integer(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational SampleGenerator::rational(int bound)
{
    Rational q(integer(-bound, bound), integer(1, bound));
    q.canonicalize();
    return q;
}

Rational SampleGenerator::nonzero_rational(int bound)
{
    Rational q(0);
    while (sgn(q) == 0) {
        q = rational(bound);
    }
    return q;
}

Scalar SampleGenerator::scalar(int bound)
{
    if (integer(0, 1) == 0) {
        return Scalar(rational(bound));
    }
    return Scalar(rational(bound), rational(bound));
}

Scalar SampleGenerator::nonzero_scalar(int bound)
{
    Scalar s;
    while (s.is_zero()) {
        s = scalar(bound);
    }
    return s;
}

TruncatedSeries SampleGenerator::series(std::size_t order)
{
    std::vector<Scalar> coeffs;
    coeffs.reserve(order);
    for (std::size_t k = 0; k < order; ++k) {
        coeffs.push_back(integer(0, 2) == 0 ? Scalar(integer(-2, 2)) : scalar(5));
    }
    return TruncatedSeries(std::move(coeffs), order);
}

TruncatedSeries SampleGenerator::unit_series(std::size_t order)
{
    TruncatedSeries s = series(order);
    while (!s.is_unit()) {
        s = series(order);
    }
    return s;
}

Mat2 SampleGenerator::unit_matrix(std::size_t order)
{
    Mat2 m(series(order), series(order), series(order), series(order));
    while (!is_unit_matrix(m)) {
        m = Mat2(series(order), series(order), series(order), series(order));
    }
    return m;
}

Mat2 SampleGenerator::phi_with_det_zeta(std::size_t order)
{
    const Mat2 u = unit_matrix(order);
    const Mat2 v = unit_matrix(order);
    const TruncatedSeries correction = (mat2_det(u) * mat2_det(v)).inverse();
    Mat2 v_fixed = v;
    v_fixed(0, 1) = v(0, 1) * correction;
    v_fixed(1, 1) = v(1, 1) * correction;
    // det(v_fixed) = det(v) * correction = det(u)^-1
    return u * Mat2::diag(TruncatedSeries::constant(1, order), TruncatedSeries::zeta(order)) * v_fixed;
}

EvaluationCovector SampleGenerator::covector()
{
    switch (integer(0, 3)) {
    case 0: return EvaluationCovector(0, nonzero_scalar());
    case 1: return EvaluationCovector(nonzero_scalar(), 0);
    default: return EvaluationCovector(nonzero_scalar(), nonzero_scalar());
    }
}

FiberPoint SampleGenerator::fiber_point()
{
    switch (integer(0, 2)) {
    case 0: return FiberPoint::zero();
    case 1: return FiberPoint::infinity();
    default: return FiberPoint::finite(nonzero_scalar());
    }
}

Configuration SampleGenerator::configuration(std::size_t n_points, std::string base)
{
    Configuration c{std::move(base), {}};
    c.points.reserve(n_points);
    for (std::size_t j = 0; j < n_points; ++j) {
        c.points.push_back(fiber_point());
    }
    return c;
}

Configuration SampleGenerator::configuration_with_pattern(const std::vector<int>& pattern, std::string base)
{
    Configuration c{std::move(base), {}};
    c.points.reserve(pattern.size());
    for (int kind : pattern) {
        switch (kind) {
        case 1: c.points.push_back(FiberPoint::zero()); break;
        case 2: c.points.push_back(FiberPoint::infinity()); break;
        default: c.points.push_back(FiberPoint::finite(Scalar(nonzero_rational()))); break;
        }
    }
    return c;
}

} // namespace su12
