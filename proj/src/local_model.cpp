#include "su12/local_model.hpp"

#include "su12/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace su12 {

EvaluationCovector::EvaluationCovector(const Scalar& xi0, const Scalar& xi1)
{
    if (xi0.is_zero() && xi1.is_zero()) {
        throw DomainError("evaluation covector must be nonzero");
    }
    const Scalar lead = xi0.is_zero() ? xi1 : xi0;
    xi0_ = xi0 / lead;
    xi1_ = xi1 / lead;
}

EvaluationCovector EvaluationCovector::from_point(const FiberPoint& point)
{
    switch (point.kind()) {
    case FiberPoint::Kind::Zero: return EvaluationCovector(0, 1);
    case FiberPoint::Kind::Infinity: return EvaluationCovector(1, 0);
    case FiberPoint::Kind::Finite: break;
    }
    return EvaluationCovector(point.coordinate(), 1);
}

Scalar EvaluationCovector::evaluate(const SeriesVec2& section) const
{
    return xi0_ * section.first.constant_term() + xi1_ * section.second.constant_term();
}

TruncatedSeries LocalHiggs::pairing() const
{
    return gamma.first * beta.first + gamma.second * beta.second;
}

namespace {

void require_truncation(std::size_t order)
{
    if (order < 2) {
        throw DomainError("the local model needs truncation order T >= 2");
    }
}

bool is_exactly_zeta(const TruncatedSeries& s)
{
    return s == TruncatedSeries::zeta(s.order());
}

// det(m) = unit * zeta with the unit's constant term nonzero.
bool is_simple_zero(const TruncatedSeries& det)
{
    return det.constant_term().is_zero() && !det[1].is_zero();
}

} // namespace

SmithForm smith_form(const Mat2& phi)
{
    const std::size_t order = phi.order();
    require_truncation(order);
    if (!is_exactly_zeta(mat2_det(phi))) {
        throw DomainError("smith_form requires det(phi) = zeta");
    }

    // Some constant term a_ij is a unit because the zeta-coefficient of the
    // determinant equals 1 (scan in the order a11, a12, a21, a22).
    int row = -1;
    int col = -1;
    for (int k = 0; k < 4 && row < 0; ++k) {
        if (!phi(k / 2, k % 2).constant_term().is_zero()) {
            row = k / 2;
            col = k % 2;
        }
    }
    if (row < 0) {
        throw std::logic_error("det(phi) = zeta but no constant term of phi is a unit");
    }
    const int other = 1 - row;
    const Scalar pivot = phi(row, col).constant_term();
    const Scalar ratio = phi(other, col).constant_term() / pivot;

    // Row 1 of P picks the pivot row; row 2 eliminates the constant terms of
    // the other row, so (P phi) row 2 = zeta * (c1, c2).
    Mat2 P(order);
    P(0, row) = TruncatedSeries::constant(1, order);
    P(1, other) = TruncatedSeries::constant(1, order);
    P(1, row) = TruncatedSeries::constant(-ratio, order);
    const Scalar det_p = row == 0 ? Scalar(1) : Scalar(-1);

    const Mat2 reduced = P * phi;
    const TruncatedSeries& u = reduced(0, 0);
    const TruncatedSeries& v = reduced(0, 1);
    TruncatedSeries c1 = reduced(1, 0).divide_by_zeta_power(1);
    TruncatedSeries c2 = reduced(1, 1).divide_by_zeta_power(1);

    // u c2 - v c1 = det(P) holds up to the undetermined top coefficient of
    // c1, c2; fix that coefficient so the identity is exact mod zeta^T.
    const TruncatedSeries residual = u * c2 - v * c1 - TruncatedSeries::constant(det_p, order);
    if (residual.valuation() < order - 1) {
        throw std::logic_error("smith_form: elimination residual below top order");
    }
    const Scalar top = residual[order - 1];
    if (col == 0) {
        c2 -= TruncatedSeries::monomial(top / u.constant_term(), order - 1, order);
    } else {
        c1 += TruncatedSeries::monomial(top / v.constant_term(), order - 1, order);
    }

    const Mat2 Q = TruncatedSeries::constant(det_p.inverse(), order) * Mat2(c2, -v, -c1, u);
    return SmithForm{P, Q, row, col};
}

KernelGenerators hecke_kernel(const EvaluationCovector& xi, std::size_t order)
{
    require_truncation(order);
    const TruncatedSeries zero(order);
    const TruncatedSeries zeta = TruncatedSeries::zeta(order);
    if (!xi.xi1().is_zero()) {
        return {{TruncatedSeries::constant(1, order), TruncatedSeries::constant(-(xi.xi0() / xi.xi1()), order)},
                {zero, zeta}};
    }
    return {{zero, TruncatedSeries::constant(1, order)}, {zeta, zero}};
}

HeckeEps eps_from_generators(const KernelGenerators& gens)
{
    const Mat2 eps0 = Mat2::from_columns(gens.gen1, gens.gen2);
    require_truncation(eps0.order());
    const TruncatedSeries det = mat2_det(eps0);
    if (!is_simple_zero(det)) {
        throw DomainError("generator determinant is not a unit times zeta; not a simple-zero Hecke datum");
    }
    const TruncatedSeries scale = det.divide_by_zeta_power(1).inverse();
    Mat2 eps = eps0;
    eps(0, 1) = eps0(0, 1) * scale;
    eps(1, 1) = eps0(1, 1) * scale;
    return {eps, scale};
}

LocalHiggs beta_gamma_from_eps(const Mat2& eps)
{
    require_truncation(eps.order());
    if (!is_exactly_zeta(mat2_det(eps))) {
        throw DomainError("beta_gamma_from_eps requires det(eps) = zeta");
    }
    return {{-eps(0, 1), eps(0, 0)}, {eps(1, 0), eps(1, 1)}};
}

Mat2 eps_from_local_higgs(const LocalHiggs& higgs)
{
    return Mat2(higgs.beta.second, -higgs.beta.first, higgs.gamma.first, higgs.gamma.second);
}

namespace {

Scalar det(const ScalarMatrix& m)
{
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

std::array<Scalar, 2> mat_vec(const ScalarMatrix& m, const std::array<Scalar, 2>& v)
{
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

ScalarMatrix transpose(const ScalarMatrix& m)
{
    return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
}

} // namespace

PhiEReport phi_e_verify(const ScalarMatrix& mu)
{
    const Scalar det_mu = det(mu);
    if (det_mu.is_zero()) {
        throw DomainError("change of basis mu must be invertible");
    }
    PhiEReport report;
    const Scalar wedge(1);
    const std::array<std::array<Scalar, 2>, 2> dual_basis{{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}};
    for (int k = 0; k < 2; ++k) {
        const auto image = phi_e(dual_basis[k], wedge);
        report.matrix[0][k] = image[0];
        report.matrix[1][k] = image[1];
    }
    report.determinant_identity = det(report.matrix) == Scalar(1);

    // For l' in W* and w' in Lambda^2 W: mu(phi_V(l' o mu (x) det(mu)^-1 w')) = phi_W(l' (x) w').
    const ScalarMatrix mu_t = transpose(mu);
    const std::array<std::array<Scalar, 2>, 3> covectors{
        {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(3), Scalar(-2)}}};
    report.naturality = true;
    for (const auto& ell : covectors) {
        const auto through_v = mat_vec(mu, phi_e(mat_vec(mu_t, ell), wedge / det_mu));
        const auto direct = phi_e(ell, wedge);
        report.naturality = report.naturality && through_v == direct;
    }
    return report;
}

bool determinant_lemma_holds(const Mat2& eps)
{
    const std::size_t order = eps.order();
    const std::array<TruncatedSeries, 2> minus_eps1{-eps(0, 0), -eps(0, 1)};
    const auto f = phi_e(minus_eps1, TruncatedSeries::constant(1, order));
    const TruncatedSeries eps2_of_f = eps(1, 0) * f[0] + eps(1, 1) * f[1];
    return eps2_of_f == mat2_det(eps);
}

bool NormalFormReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

namespace {

struct NormalFormData {
    EvaluationCovector xi;
    Mat2 eps;
};

NormalFormData build_normal_form(const Scalar& b, std::size_t order)
{
    // Frame sigma1 = s0^-2 dzeta, sigma2 = s0 dzeta with s0^3 = b at x_j. The
    // line l_j = span(b s, s) then has sigma-frame coordinate b / s0^3.
    const Scalar s0_cubed = b;
    const Scalar t_sigma = b / s0_cubed;
    const EvaluationCovector xi = EvaluationCovector::from_point(FiberPoint::finite(t_sigma));

    const Scalar inv_sqrt2 = Scalar::sqrt2().inverse();
    const TruncatedSeries zeta = TruncatedSeries::zeta(order);
    const SeriesVec2 eta1{inv_sqrt2 * zeta, inv_sqrt2 * zeta};
    const SeriesVec2 eta2{TruncatedSeries::constant(-inv_sqrt2, order), TruncatedSeries::constant(inv_sqrt2, order)};
    return {xi, Mat2::from_columns(eta1, eta2)};
}

} // namespace

NormalFormReport normal_form_check(const Scalar& b, std::size_t order)
{
    if (b.is_zero()) {
        throw DomainError("normal form parameter b must be nonzero");
    }
    require_truncation(order);

    const NormalFormData data = build_normal_form(b, order);
    const Mat2& eps = data.eps;
    const TruncatedSeries zeta = TruncatedSeries::zeta(order);
    const Scalar inv_sqrt2 = Scalar::sqrt2().inverse();

    const TruncatedSeries zero(order);
    NormalFormReport report{b, order, data.xi, eps, LocalHiggs{{zero, zero}, {zero, zero}}, Scalar(), {}};
    auto check = [&](std::string name, bool ok) { report.checks.push_back({std::move(name), ok}); };

    check("eta_in_kernel",
          data.xi.evaluate(eps.column(0)).is_zero() && data.xi.evaluate(eps.column(1)).is_zero());
    check("det_eps_is_zeta", is_exactly_zeta(mat2_det(eps)));

    // Same submodule as the Hecke kernel: both contain the columns of eps and
    // both have determinant zeta, so eps = eps0 * M with M a unit matrix.
    const HeckeEps hecke = eps_from_generators(hecke_kernel(data.xi, order));
    const Mat2 adj_eps0 = mat2_adjugate(hecke.eps);
    const Mat2 prod = adj_eps0 * eps;
    const Mat2 change(prod(0, 0).divide_by_zeta_power(1), prod(0, 1).divide_by_zeta_power(1),
                      prod(1, 0).divide_by_zeta_power(1), prod(1, 1).divide_by_zeta_power(1));
    check("same_submodule_as_hecke_kernel", is_unit_matrix(change));

    report.higgs = beta_gamma_from_eps(eps);
    const SeriesVec2 expected_beta{TruncatedSeries::constant(inv_sqrt2, order), inv_sqrt2 * zeta};
    const SeriesVec2 expected_gamma{inv_sqrt2 * zeta, TruncatedSeries::constant(inv_sqrt2, order)};
    check("beta_normal_form", report.higgs.beta == expected_beta);
    check("gamma_normal_form", report.higgs.gamma == expected_gamma);

    const TruncatedSeries q = report.higgs.pairing();
    report.pairing_linear_coefficient = q[1];
    check("gamma_beta_is_zeta", q == zeta);
    check("quadratic_differential_coefficient_one", q[1] == Scalar(1));
    check("determinant_lemma", determinant_lemma_holds(eps));
    check("reassembly_roundtrip", eps_from_local_higgs(report.higgs) == eps);

    const NormalFormData reference = build_normal_form(Scalar(1), order);
    check("independent_of_b", reference.eps == eps && reference.xi == data.xi);
    return report;
}

bool is_injective(const Mat2& f)
{
    return !mat2_det(f).is_zero();
}

} // namespace su12
