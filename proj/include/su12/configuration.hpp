#pragma once

#include "su12/scalar.hpp"
#include "su12/stability.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace su12 {

/// A point of P^1 in a fiber P_j: one of the two distinguished sections
/// [0:1] (Zero) and [1:0] (Infinity), or Finite(t) with affine coordinate t = x0/x1 != 0.
class FiberPoint {
public:
    enum class Kind { Zero, Infinity, Finite };

    static FiberPoint zero() { return FiberPoint(Kind::Zero, Scalar()); }
    static FiberPoint infinity() { return FiberPoint(Kind::Infinity, Scalar()); }
    /// Throws DomainError for t = 0.
    static FiberPoint finite(Scalar t);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    /// Affine coordinate; only meaningful for Finite points.
    const Scalar& coordinate() const { return t_; }

    friend bool operator==(const FiberPoint&, const FiberPoint&) = default;

private:
    FiberPoint(Kind kind, Scalar t) : kind_(kind), t_(std::move(t)) {}

    Kind kind_;
    Scalar t_;
};

/// A point of the fiber (P^1)^N over an opaque base label standing for L in Pic^d X.
struct Configuration {
    std::string base;
    std::vector<FiberPoint> points;

    std::size_t size() const { return points.size(); }
    /// Fully marked: no Finite slot, i.e. a fixed point of the action.
    bool is_fixed_point() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Zero-based index sets of the Zero ([0:1]) and Infinity ([1:0]) slots.
struct MarkData {
    std::vector<std::size_t> zeros;
    std::vector<std::size_t> infinities;

    int n1() const { return static_cast<int>(zeros.size()); }
    int n2() const { return static_cast<int>(infinities.size()); }

    friend bool operator==(const MarkData&, const MarkData&) = default;
};

MarkData mark_data(const Configuration& c);

/// n1 < 2(g-1+d) and n2 < 2(g-1-d). Throws LengthMismatch unless c has N points.
bool in_Y(const Configuration& c, const ModuliParams& p);

/// Zero -> Gamma (gamma vanishes at x_j), Infinity -> Beta, Finite -> Rest.
LabeledPartition stratum_of(const Configuration& c);

/// [x0:x1] -> [scale*x0 : x1]. Throws DomainError for scale = 0.
Configuration act(const Scalar& scale, const Configuration& c);

/// The scale s with act(s, a) = b, if any.
std::optional<Scalar> orbit_equivalent(const Configuration& a, const Configuration& b);

/// Fixed point in the orbit closure of a boundary semistable configuration
/// for linearization exponent n: if n1 = n every non-Zero slot becomes
/// Infinity, otherwise (n2 = N-n) every non-Infinity slot becomes Zero.
/// Throws DomainError unless n1 <= n, n2 <= N-n with at least one equality.
Configuration limit_point(const Configuration& c, int n);
Configuration limit_point(const Configuration& c, const ModuliParams& p);

/// Index partition {I1, I2, I3} of an affine chart of Y containing c
/// (zero-based indices, each sorted ascending).
struct AffineChart {
    std::vector<std::size_t> i1;  // not Infinity, |I1| = 2(g-1+d)-1
    std::vector<std::size_t> i2;  // not Zero, |I2| = 2(g-1-d)-1
    std::vector<std::size_t> i3;  // Finite, |I3| = 2

    friend bool operator==(const AffineChart&, const AffineChart&) = default;
};

/// Throws DomainError when c is not in Y.
AffineChart affine_chart(const Configuration& c, const ModuliParams& p);

/// Parameters b_x at the Rest slots, with b = t in the fixed trivialization of L^3.
std::map<std::size_t, Scalar> param_from_config(const Configuration& c);

} // namespace su12
