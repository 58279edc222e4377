#include "su12/configuration.hpp"

#include "su12/errors.hpp"

#include <algorithm>

namespace su12 {

FiberPoint FiberPoint::finite(Scalar t)
{
    if (t.is_zero()) {
        throw DomainError("finite fiber point requires a nonzero coordinate");
    }
    return FiberPoint(Kind::Finite, std::move(t));
}

bool Configuration::is_fixed_point() const
{
    return std::none_of(points.begin(), points.end(), [](const FiberPoint& x) { return x.is_finite(); });
}

MarkData mark_data(const Configuration& c)
{
    MarkData out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c.points[j].is_zero()) {
            out.zeros.push_back(j);
        } else if (c.points[j].is_infinity()) {
            out.infinities.push_back(j);
        }
    }
    return out;
}

namespace {

void check_length(const Configuration& c, const ModuliParams& p)
{
    if (c.size() != static_cast<std::size_t>(p.zeros())) {
        throw LengthMismatch("configuration has " + std::to_string(c.size()) + " points, expected N = " +
                             std::to_string(p.zeros()));
    }
}

} // namespace

bool in_Y(const Configuration& c, const ModuliParams& p)
{
    check_length(c, p);
    const MarkData m = mark_data(c);
    return m.n1() < p.gamma_bound() && m.n2() < p.beta_bound();
}

LabeledPartition stratum_of(const Configuration& c)
{
    std::vector<Label> labels;
    labels.reserve(c.size());
    for (const auto& x : c.points) {
        switch (x.kind()) {
        case FiberPoint::Kind::Zero: labels.push_back(Label::Gamma); break;
        case FiberPoint::Kind::Infinity: labels.push_back(Label::Beta); break;
        case FiberPoint::Kind::Finite: labels.push_back(Label::Rest); break;
        }
    }
    return LabeledPartition(std::move(labels));
}

Configuration act(const Scalar& scale, const Configuration& c)
{
    if (scale.is_zero()) {
        throw DomainError("the action requires a nonzero scale");
    }
    Configuration out{c.base, {}};
    out.points.reserve(c.size());
    for (const auto& x : c.points) {
        out.points.push_back(x.is_finite() ? FiberPoint::finite(scale * x.coordinate()) : x);
    }
    return out;
}

std::optional<Scalar> orbit_equivalent(const Configuration& a, const Configuration& b)
{
    if (a.base != b.base || a.size() != b.size()) {
        return std::nullopt;
    }
    std::optional<Scalar> ratio;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const FiberPoint& x = a.points[j];
        const FiberPoint& y = b.points[j];
        if (x.kind() != y.kind()) {
            return std::nullopt;
        }
        if (!x.is_finite()) {
            continue;
        }
        Scalar r = y.coordinate() / x.coordinate();
        if (!ratio) {
            ratio = std::move(r);
        } else if (*ratio != r) {
            return std::nullopt;
        }
    }
    return ratio ? ratio : std::optional<Scalar>(Scalar(1));
}

Configuration limit_point(const Configuration& c, int n)
{
    const MarkData m = mark_data(c);
    const int N = static_cast<int>(c.size());
    const bool semistable = m.n1() <= n && m.n2() <= N - n;
    if (!semistable || (m.n1() != n && m.n2() != N - n)) {
        throw DomainError("limit_point requires a strictly semistable configuration (n1 = n or n2 = N-n)");
    }
    Configuration out{c.base, {}};
    out.points.reserve(c.size());
    if (m.n1() == n) {
        for (const auto& x : c.points) {
            out.points.push_back(x.is_zero() ? x : FiberPoint::infinity());
        }
    } else {
        for (const auto& x : c.points) {
            out.points.push_back(x.is_infinity() ? x : FiberPoint::zero());
        }
    }
    return out;
}

Configuration limit_point(const Configuration& c, const ModuliParams& p)
{
    check_length(c, p);
    return limit_point(c, p.exponent());
}

AffineChart affine_chart(const Configuration& c, const ModuliParams& p)
{
    if (!in_Y(c, p)) {
        throw DomainError("configuration is not in Y; no affine chart contains it");
    }
    const std::size_t i1_size = static_cast<std::size_t>(p.gamma_bound() - 1);
    AffineChart chart;
    std::vector<bool> used(c.size(), false);
    for (std::size_t j = 0; j < c.size() && chart.i3.size() < 2; ++j) {
        if (c.points[j].is_finite()) {
            chart.i3.push_back(j);
            used[j] = true;
        }
    }
    // Zero slots can only live in I1.
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c.points[j].is_zero()) {
            chart.i1.push_back(j);
            used[j] = true;
        }
    }
    for (std::size_t j = 0; j < c.size() && chart.i1.size() < i1_size; ++j) {
        if (!used[j] && c.points[j].is_finite()) {
            chart.i1.push_back(j);
            used[j] = true;
        }
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (!used[j]) {
            chart.i2.push_back(j);
        }
    }
    std::sort(chart.i1.begin(), chart.i1.end());
    return chart;
}

std::map<std::size_t, Scalar> param_from_config(const Configuration& c)
{
    std::map<std::size_t, Scalar> out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c.points[j].is_finite()) {
            out.emplace(j, c.points[j].coordinate());
        }
    }
    return out;
}

} // namespace su12
