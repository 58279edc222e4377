#include "su12/errors.hpp"
#include "su12/local_model.hpp"
#include "su12/random.hpp"
#include "su12/verify.hpp"

#include <doctest.h>

using namespace su12;

namespace {

TruncatedSeries one(std::size_t T) { return TruncatedSeries::constant(1, T); }
TruncatedSeries zeta(std::size_t T) { return TruncatedSeries::zeta(T); }
TruncatedSeries c(const Scalar& x, std::size_t T) { return TruncatedSeries::constant(x, T); }

void check_smith(const Mat2& phi)
{
    const std::size_t T = phi.order();
    const SmithForm sf = smith_form(phi);
    CHECK(sf.P * phi * sf.Q == Mat2::diag(one(T), zeta(T)));
    CHECK(is_unit_matrix(sf.P));
    CHECK(is_unit_matrix(sf.Q));
}

} // namespace

TEST_SUITE("smith form")
{
    TEST_CASE("diag(1, zeta) is already reduced")
    {
        const SmithForm sf = smith_form(Mat2::diag(one(8), zeta(8)));
        CHECK(sf.P == Mat2::identity(8));
        CHECK(sf.Q == Mat2::identity(8));
    }

    TEST_CASE("diag(zeta, 1) needs a swap")
    {
        const Mat2 phi = Mat2::diag(zeta(8), one(8));
        const SmithForm sf = smith_form(phi);
        CHECK(sf.P * phi * sf.Q == Mat2::diag(one(8), zeta(8)));
        // Swap type: P has zero diagonal constant terms.
        CHECK(sf.P(0, 0).constant_term().is_zero());
        CHECK(sf.P(1, 1).constant_term().is_zero());
    }

    TEST_CASE("worked example [[1+z, z], [z, z]]")
    {
        const Mat2 phi(one(8) + zeta(8), zeta(8), zeta(8), zeta(8));
        CHECK(smith_form(phi).pivot_row == 0);
        CHECK(smith_form(phi).pivot_col == 0);
        check_smith(phi);
    }

    TEST_CASE("every pivot position")
    {
        const std::size_t T = 6;
        const TruncatedSeries z = zeta(T);
        // Signed permutations of diag(1, z), one per unit position.
        const Mat2 a12(TruncatedSeries(T), one(T), -z, TruncatedSeries(T));
        const Mat2 a21(TruncatedSeries(T), -z, one(T), TruncatedSeries(T));
        const Mat2 a22 = Mat2::diag(z, one(T));
        CHECK(mat2_det(a12) == z);
        CHECK(mat2_det(a21) == z);
        check_smith(a12);
        check_smith(a21);
        check_smith(a22);
        CHECK(smith_form(a12).pivot_col == 1);
        CHECK(smith_form(a21).pivot_row == 1);
        CHECK(smith_form(a22).pivot_row == 1);
        CHECK(smith_form(a22).pivot_col == 1);
    }

    TEST_CASE("random inputs at every order")
    {
        SampleGenerator gen(41);
        for (std::size_t T = 2; T <= 12; ++T) {
            for (int k = 0; k < 30; ++k) {
                check_smith(gen.phi_with_det_zeta(T));
            }
        }
    }

    TEST_CASE("precondition")
    {
        CHECK_THROWS_AS(smith_form(Mat2::diag(zeta(8), zeta(8))), DomainError);
        CHECK_THROWS_AS(smith_form(Mat2::identity(8)), DomainError);
        CHECK_THROWS_AS(smith_form(Mat2::diag(one(1), zeta(1))), DomainError);
    }
}

TEST_SUITE("hecke kernel")
{
    TEST_CASE("covector normalization")
    {
        const EvaluationCovector xi(Scalar(3), Scalar(6));
        CHECK(xi.xi0() == Scalar(1));
        CHECK(xi.xi1() == Scalar(2));
        CHECK(EvaluationCovector(Scalar(0), Scalar(5)) == EvaluationCovector(Scalar(0), Scalar(1)));
        CHECK_THROWS_AS(EvaluationCovector(Scalar(0), Scalar(0)), DomainError);
    }

    TEST_CASE("covectors of fiber points")
    {
        CHECK(EvaluationCovector::from_point(FiberPoint::zero()) == EvaluationCovector(Scalar(0), Scalar(1)));
        CHECK(EvaluationCovector::from_point(FiberPoint::infinity()) == EvaluationCovector(Scalar(1), Scalar(0)));
        CHECK(EvaluationCovector::from_point(FiberPoint::finite(Scalar(4))) ==
              EvaluationCovector(Scalar(4), Scalar(1)));
    }

    TEST_CASE("generators at [1:1]")
    {
        const KernelGenerators k = hecke_kernel(EvaluationCovector(Scalar(1), Scalar(1)), 8);
        CHECK(k.gen1 == SeriesVec2{one(8), c(-1, 8)});
        CHECK(k.gen2 == SeriesVec2{TruncatedSeries(8), zeta(8)});
    }

    TEST_CASE("generators at [1:0]")
    {
        const KernelGenerators k = hecke_kernel(EvaluationCovector(Scalar(1), Scalar(0)), 8);
        CHECK(k.gen1 == SeriesVec2{TruncatedSeries(8), one(8)});
        CHECK(k.gen2 == SeriesVec2{zeta(8), TruncatedSeries(8)});
    }

    TEST_CASE("generators at [0:1]")
    {
        const KernelGenerators k = hecke_kernel(EvaluationCovector(Scalar(0), Scalar(1)), 8);
        CHECK(k.gen1 == SeriesVec2{one(8), TruncatedSeries(8)});
        CHECK(k.gen2 == SeriesVec2{TruncatedSeries(8), zeta(8)});
    }

    TEST_CASE("eps from the [1:1] generators")
    {
        const HeckeEps h = eps_from_generators(hecke_kernel(EvaluationCovector(Scalar(1), Scalar(1)), 8));
        CHECK(h.eps == Mat2(one(8), TruncatedSeries(8), c(-1, 8), zeta(8)));
        CHECK(mat2_det(h.eps) == zeta(8));
    }

    TEST_CASE("eps needs no rescale when det is already zeta")
    {
        const HeckeEps h = eps_from_generators({{zeta(8), TruncatedSeries(8)}, {TruncatedSeries(8), one(8)}});
        CHECK(h.column_scale == one(8));
        CHECK(mat2_det(h.eps) == zeta(8));
    }

    TEST_CASE("eps rescales a unit multiple of zeta")
    {
        const TruncatedSeries u = one(8) + c(3, 8) * zeta(8);
        const HeckeEps h = eps_from_generators({{one(8), c(2, 8)}, {TruncatedSeries(8), u * zeta(8)}});
        CHECK(mat2_det(h.eps) == zeta(8));
        CHECK(h.eps.column(0) == SeriesVec2{one(8), c(2, 8)});
    }

    TEST_CASE("double zero is rejected")
    {
        CHECK_THROWS_AS(eps_from_generators({{zeta(8), TruncatedSeries(8)}, {TruncatedSeries(8), zeta(8)}}),
                        DomainError);
        CHECK_THROWS_AS(eps_from_generators({{one(8), TruncatedSeries(8)}, {TruncatedSeries(8), one(8)}}),
                        DomainError);
    }

    TEST_CASE("round trip at every order")
    {
        SampleGenerator gen(42);
        for (std::size_t T = 2; T <= 12; ++T) {
            for (int k = 0; k < 40; ++k) {
                const EvaluationCovector xi = gen.covector();
                const Mat2 eps = eps_from_generators(hecke_kernel(xi, T)).eps;
                CHECK(xi.evaluate(eps.column(0)).is_zero());
                CHECK(xi.evaluate(eps.column(1)).is_zero());
                CHECK(mat2_det(eps) == zeta(T));
                const LocalHiggs h = beta_gamma_from_eps(eps);
                CHECK(h.pairing() == zeta(T));
                CHECK(eps_from_local_higgs(h) == eps);
                const bool beta0 = h.beta.first.constant_term().is_zero() && h.beta.second.constant_term().is_zero();
                const bool gamma0 =
                    h.gamma.first.constant_term().is_zero() && h.gamma.second.constant_term().is_zero();
                CHECK(gamma0 == xi.xi0().is_zero());
                CHECK(beta0 == xi.xi1().is_zero());
                CHECK(determinant_lemma_holds(eps));
            }
        }
    }

    TEST_CASE("vanishing pattern follows the fiber point type")
    {
        SampleGenerator gen(43);
        for (int k = 0; k < 100; ++k) {
            const FiberPoint x = gen.fiber_point();
            const LocalHiggs h =
                beta_gamma_from_eps(eps_from_generators(hecke_kernel(EvaluationCovector::from_point(x), 8)).eps);
            const bool beta0 = h.beta.first.constant_term().is_zero() && h.beta.second.constant_term().is_zero();
            const bool gamma0 = h.gamma.first.constant_term().is_zero() && h.gamma.second.constant_term().is_zero();
            CHECK(gamma0 == x.is_zero());
            CHECK(beta0 == x.is_infinity());
        }
    }
}

TEST_SUITE("higgs extraction")
{
    TEST_CASE("normal form eps")
    {
        const std::size_t T = 8;
        const Scalar r = Scalar::sqrt2().inverse();
        const LocalHiggs h = beta_gamma_from_eps(c(r, T) * Mat2(zeta(T), c(-1, T), zeta(T), one(T)));
        CHECK(h.beta == SeriesVec2{c(r, T), r * zeta(T)});
        CHECK(h.gamma == SeriesVec2{r * zeta(T), c(r, T)});
        CHECK(h.pairing() == zeta(T));
    }

    TEST_CASE("diagonal eps")
    {
        const LocalHiggs h = beta_gamma_from_eps(Mat2::diag(zeta(8), one(8)));
        CHECK(h.beta == SeriesVec2{TruncatedSeries(8), zeta(8)});
        CHECK(h.gamma == SeriesVec2{TruncatedSeries(8), one(8)});
        CHECK(h.pairing() == zeta(8));
    }

    TEST_CASE("det must be zeta")
    {
        CHECK_THROWS_AS(beta_gamma_from_eps(Mat2::identity(8)), DomainError);
    }
}

TEST_SUITE("phi_E")
{
    TEST_CASE("basis images")
    {
        const auto a = phi_e<Scalar>({Scalar(1), Scalar(0)}, Scalar(1));
        CHECK(a[0] == Scalar(0));
        CHECK(a[1] == Scalar(-1));
        const auto b = phi_e<Scalar>({Scalar(0), Scalar(1)}, Scalar(1));
        CHECK(b[0] == Scalar(1));
        CHECK(b[1] == Scalar(0));
    }

    TEST_CASE("determinant identity and naturality")
    {
        SampleGenerator gen(44);
        for (int k = 0; k < 100; ++k) {
            ScalarMatrix mu{{{gen.scalar(), gen.scalar()}, {gen.scalar(), gen.scalar()}}};
            if ((mu[0][0] * mu[1][1] - mu[0][1] * mu[1][0]).is_zero()) {
                CHECK_THROWS_AS(phi_e_verify(mu), DomainError);
                continue;
            }
            const PhiEReport r = phi_e_verify(mu);
            CHECK(r.determinant_identity);
            CHECK(r.naturality);
            CHECK(r.matrix[0][0] == Scalar(0));
            CHECK(r.matrix[1][0] == Scalar(-1));
        }
    }

    TEST_CASE("singular change of basis")
    {
        CHECK_THROWS_AS(phi_e_verify({{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}}), DomainError);
    }
}

TEST_SUITE("normal form")
{
    TEST_CASE("b = 1 at T = 8")
    {
        const NormalFormReport r = normal_form_check(Scalar(1), 8);
        for (const auto& ch : r.checks) {
            CAPTURE(ch.name);
            CHECK(ch.passed);
        }
        CHECK(r.passed());
        CHECK(r.pairing_linear_coefficient == Scalar(1));
        CHECK(r.higgs.pairing() == zeta(8));
    }

    TEST_CASE("b = 7 gives the same matrices as b = 1")
    {
        const NormalFormReport a = normal_form_check(Scalar(1), 8);
        const NormalFormReport b = normal_form_check(Scalar(7), 8);
        CHECK(b.passed());
        CHECK(a.eps == b.eps);
        CHECK(a.higgs == b.higgs);
    }

    TEST_CASE("every order from 2 to 12")
    {
        SampleGenerator gen(45);
        for (std::size_t T = 2; T <= 12; ++T) {
            for (int k = 0; k < 5; ++k) {
                CHECK(normal_form_check(gen.nonzero_scalar(), T).passed());
            }
        }
    }

    TEST_CASE("invalid input")
    {
        CHECK_THROWS_AS(normal_form_check(Scalar(0), 8), DomainError);
        CHECK_THROWS_AS(normal_form_check(Scalar(1), 1), DomainError);
    }
}

TEST_SUITE("injectivity")
{
    TEST_CASE("examples")
    {
        CHECK(is_injective(Mat2::diag(zeta(8), one(8))));
        CHECK_FALSE(is_injective(Mat2(zeta(8), zeta(8), zeta(8), zeta(8))));
        CHECK(is_injective(Mat2::identity(8)));
    }

    TEST_CASE("determinant lemma on random eps")
    {
        SampleGenerator gen(46);
        for (int k = 0; k < 50; ++k) {
            const Mat2 eps = gen.phi_with_det_zeta(8);
            CHECK(determinant_lemma_holds(eps));
            CHECK(is_injective(eps));
        }
    }
}

TEST_SUITE("verification suite")
{
    TEST_CASE("passes at T = 8 and T = 2")
    {
        CHECK(run_local_verification({8, 1, 50, false}).passed());
        CHECK(run_local_verification({2, 7, 50, false}).passed());
    }

    TEST_CASE("corrupted input is reported")
    {
        const VerificationReport r = run_local_verification({8, 1, 5, true});
        CHECK_FALSE(r.passed());
        REQUIRE_FALSE(r.checks.empty());
        CHECK(r.checks.front().name == "smith_form_random");
        CHECK(r.checks.front().failures == 1);
        CHECK(r.checks.front().detail.find("det") != std::string::npos);
    }

    TEST_CASE("deterministic for a fixed seed")
    {
        const VerificationReport a = run_local_verification({6, 3, 20, false});
        const VerificationReport b = run_local_verification({6, 3, 20, false});
        REQUIRE(a.checks.size() == b.checks.size());
        for (std::size_t i = 0; i < a.checks.size(); ++i) {
            CHECK(a.checks[i].cases == b.checks[i].cases);
            CHECK(a.checks[i].failures == b.checks[i].failures);
        }
    }
}
