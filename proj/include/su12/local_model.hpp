#pragma once

#include "su12/configuration.hpp"
#include "su12/mat2.hpp"

#include <array>
#include <string>
#include <vector>

namespace su12 {

// Local model of the Hecke transformation at a simple zero x_j of q, in a
// coordinate zeta centered at x_j with q = zeta dzeta^2. Sections of the rank
// two bundle are pairs of truncated series; the dzeta factors are implicit.

/// The functional ev_xi(f0, f1) = xi0 f0(0) + xi1 f1(0) spanning a line of V*_{x_j}.
/// Stored normalized: the first nonzero component is 1.
class EvaluationCovector {
public:
    /// Throws DomainError if both components vanish.
    EvaluationCovector(const Scalar& xi0, const Scalar& xi1);

    /// The covector with homogeneous coordinates of the fiber point:
    /// Zero = [0:1], Infinity = [1:0], Finite(t) = [t:1].
    static EvaluationCovector from_point(const FiberPoint& point);

    const Scalar& xi0() const { return xi0_; }
    const Scalar& xi1() const { return xi1_; }

    Scalar evaluate(const SeriesVec2& section) const;

    friend bool operator==(const EvaluationCovector&, const EvaluationCovector&) = default;

private:
    Scalar xi0_;
    Scalar xi1_;
};

/// Higgs field at x_j: beta as a column (f1, f2), gamma as a row (g1, g2).
struct LocalHiggs {
    SeriesVec2 beta;
    SeriesVec2 gamma;

    /// gamma . beta = g1 f1 + g2 f2 (the local quadratic differential).
    TruncatedSeries pairing() const;

    friend bool operator==(const LocalHiggs&, const LocalHiggs&) = default;
};

/// P, Q with P * phi * Q = diag(1, zeta).
struct SmithForm {
    Mat2 P;
    Mat2 Q;
    /// Position of the unit constant term used as pivot.
    int pivot_row = 0;
    int pivot_col = 0;
};

/// Requires det(phi) = zeta exactly (mod zeta^T) and T >= 2; throws DomainError otherwise.
SmithForm smith_form(const Mat2& phi);

struct KernelGenerators {
    SeriesVec2 gen1;
    SeriesVec2 gen2;
};

/// Free generators of ker(ev_xi) in R^2, R = Q(sqrt2)[[zeta]]/zeta^T.
KernelGenerators hecke_kernel(const EvaluationCovector& xi, std::size_t order);

struct HeckeEps {
    Mat2 eps;
    /// Unit by which the second column of [gen1 gen2] was multiplied.
    TruncatedSeries column_scale;
};

/// Matrix with columns gen1, gen2 normalized to det = zeta by rescaling the
/// second column. Throws DomainError unless det is a unit times zeta.
HeckeEps eps_from_generators(const KernelGenerators& gens);

/// beta = (-eps12, eps11), gamma = (eps21, eps22). Throws DomainError unless det(eps) = zeta.
LocalHiggs beta_gamma_from_eps(const Mat2& eps);
/// Inverse of beta_gamma_from_eps: eps = [[f2, -f1], [g1, g2]].
Mat2 eps_from_local_higgs(const LocalHiggs& higgs);

/// phi_E(l (x) w s1^s2) = w (l(s2) s1 - l(s1) s2) in the standard basis
/// (s1, s2) of a rank two free module; l is given by (l(s1), l(s2)).
template <class R>
std::array<R, 2> phi_e(const std::array<R, 2>& ell, const R& wedge)
{
    return {wedge * ell[1], -(wedge * ell[0])};
}

using ScalarMatrix = std::array<std::array<Scalar, 2>, 2>;

struct PhiEReport {
    /// Columns are phi_E(s1* (x) s1^s2) and phi_E(s2* (x) s1^s2).
    ScalarMatrix matrix;
    /// Determinant identification Lambda^2 phi_E = id, i.e. det(matrix) = 1.
    bool determinant_identity = false;
    /// mu o phi_V = phi_W o (mu^t (x) (Lambda^2 mu)^-1)^-1 on a basis of W* (x) Lambda^2 W.
    bool naturality = false;
};

/// Throws DomainError for a singular mu.
PhiEReport phi_e_verify(const ScalarMatrix& mu);

/// Lambda^2 eps o a = eps_2 o f with f = phi_E(-eps_1^t (x) a), a = id.
bool determinant_lemma_holds(const Mat2& eps);

struct NamedCheck {
    std::string name;
    bool passed;
};

struct NormalFormReport {
    Scalar b;
    std::size_t order;
    EvaluationCovector xi;
    Mat2 eps;
    LocalHiggs higgs;
    /// Coefficient of zeta in gamma . beta.
    Scalar pairing_linear_coefficient;
    std::vector<NamedCheck> checks;

    bool passed() const;
};

/// Builds the frame eta1 = (zeta/sqrt2)(sigma1 + sigma2), eta2 = (1/sqrt2)(-sigma1 + sigma2)
/// of the Hecke kernel at a Rest point with parameter b and checks the
/// normal forms beta = (1/sqrt2)(1, zeta), gamma = (1/sqrt2)(zeta, 1).
/// Throws DomainError for b = 0 or T < 2.
NormalFormReport normal_form_check(const Scalar& b, std::size_t order);

/// Proxy for injectivity of f over the complete local ring: det(f) != 0 mod zeta^T.
bool is_injective(const Mat2& f);

} // namespace su12
