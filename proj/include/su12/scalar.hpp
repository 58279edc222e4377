#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace su12 {

using Rational = mpq_class;

/// Exact element a + b*sqrt(2) of Q(sqrt 2).
///
/// Both components are GMP rationals kept in canonical (lowest terms) form.
/// Since sqrt(2) is irrational, a + b*sqrt(2) = 0 iff a = b = 0, which makes
/// every nonzero element invertible through the conjugate:
/// (a + b sqrt2)^-1 = (a - b sqrt2) / (a^2 - 2 b^2).
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : a_(value) {}
    explicit Scalar(Rational a, Rational b = 0);

    static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }
    static Scalar rational(long num, long den) { return Scalar(Rational(num, den)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    Scalar conjugate() const { return Scalar(a_, -b_); }
    /// Field norm a^2 - 2 b^2; nonzero for every nonzero scalar.
    Rational norm() const;
    /// Throws NonUnit on zero.
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-a_, -b_); }
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    /// "p/q" when rational, otherwise "p/q+r/s*sqrt2" (or "p/q-r/s*sqrt2").
    std::string to_string() const;
    /// Accepts the forms produced by to_string, plus "r/s*sqrt2", "sqrt2",
    /// "-sqrt2" and "p/q+-r/s*sqrt2". Throws ParseError.
    static Scalar parse(std::string_view text);

private:
    Rational a_{0};
    Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

} // namespace su12
