#pragma once

#include "su12/configuration.hpp"
#include "su12/local_model.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace su12 {

/// Seeded generators for randomized suites. All draws go through one
/// std::mt19937_64, so a seed fixes every sample.
class SampleGenerator {
public:
    explicit SampleGenerator(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi);
    /// p/q with |p| <= bound, 1 <= q <= bound.
    Rational rational(int bound = 9);
    Rational nonzero_rational(int bound = 9);
    /// a + b sqrt2; b is zero about half of the time.
    Scalar scalar(int bound = 9);
    Scalar nonzero_scalar(int bound = 9);

    /// Coefficients are small integers (zero included) or rationals.
    TruncatedSeries series(std::size_t order);
    TruncatedSeries unit_series(std::size_t order);
    /// Random matrix with unit determinant.
    Mat2 unit_matrix(std::size_t order);
    /// U diag(1, zeta) V with det exactly zeta. Constant terms are sparse
    /// enough that every pivot position of the Smith reduction occurs.
    Mat2 phi_with_det_zeta(std::size_t order);

    /// Nonzero covector, components zero with positive probability.
    EvaluationCovector covector();

    FiberPoint fiber_point();
    Configuration configuration(std::size_t n_points, std::string base = "L0");
    /// Configuration with the given mark pattern: 0 = Finite, 1 = Zero, 2 = Infinity.
    Configuration configuration_with_pattern(const std::vector<int>& pattern, std::string base = "L0");

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace su12
