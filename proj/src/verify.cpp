#include "su12/verify.hpp"

#include "su12/local_model.hpp"
#include "su12/random.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

namespace su12 {

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed(); });
}

namespace {

// Runs `body` once per case; a false return or an exception counts as a failure.
class CheckRunner {
public:
    explicit CheckRunner(std::string name) { check_.name = std::move(name); }

    void run_case(const std::function<bool(std::ostream&)>& body)
    {
        ++check_.cases;
        std::ostringstream why;
        bool ok = false;
        try {
            ok = body(why);
        } catch (const std::exception& e) {
            why << e.what();
        }
        if (!ok) {
            ++check_.failures;
            if (check_.detail.empty()) {
                check_.detail = "case " + std::to_string(check_.cases) + ": " + why.str();
            }
        }
    }

    SuiteCheck finish() { return std::move(check_); }

private:
    SuiteCheck check_;
};

bool vanishes_at_zero(const SeriesVec2& v)
{
    return v.first.constant_term().is_zero() && v.second.constant_term().is_zero();
}

bool smith_recomposes(const Mat2& phi, std::ostream& why)
{
    const std::size_t order = phi.order();
    const SmithForm sf = smith_form(phi);
    const Mat2 target = Mat2::diag(TruncatedSeries::constant(1, order), TruncatedSeries::zeta(order));
    if (sf.P * phi * sf.Q != target) {
        why << "P phi Q = " << (sf.P * phi * sf.Q) << " for phi = " << phi;
        return false;
    }
    if (!is_unit_matrix(sf.P) || !is_unit_matrix(sf.Q)) {
        why << "P or Q is not a unit matrix";
        return false;
    }
    return true;
}

} // namespace

VerificationReport run_local_verification(const VerificationOptions& options)
{
    const std::size_t order = options.order;
    SampleGenerator gen(options.seed);
    VerificationReport report{options, {}};
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    const TruncatedSeries zeta = TruncatedSeries::zeta(order);

    {
        CheckRunner smith("smith_form_random");
        for (int k = 0; k < options.cases; ++k) {
            const Mat2 phi = gen.phi_with_det_zeta(order);
            smith.run_case([&](std::ostream& why) { return smith_recomposes(phi, why); });
        }
        if (options.corrupt) {
            const Mat2 bad = Mat2::diag(zeta, zeta);
            smith.run_case([&](std::ostream& why) { return smith_recomposes(bad, why); });
        }
        report.checks.push_back(smith.finish());
    }
    {
        CheckRunner worked("smith_form_worked_examples");
        worked.run_case([&](std::ostream& why) {
            const SmithForm sf = smith_form(Mat2::diag(one, zeta));
            if (sf.P != Mat2::identity(order) || sf.Q != Mat2::identity(order)) {
                why << "diag(1, zeta) should give P = Q = Id";
                return false;
            }
            return true;
        });
        worked.run_case([&](std::ostream& why) { return smith_recomposes(Mat2::diag(zeta, one), why); });
        worked.run_case([&](std::ostream& why) { return smith_recomposes(Mat2(one + zeta, zeta, zeta, zeta), why); });
        report.checks.push_back(worked.finish());
    }
    {
        CheckRunner normal("normal_form");
        for (int k = 0; k < 20; ++k) {
            const Scalar b = gen.nonzero_scalar();
            normal.run_case([&](std::ostream& why) {
                const NormalFormReport nf = normal_form_check(b, order);
                for (const auto& c : nf.checks) {
                    if (!c.passed) {
                        why << c.name << " failed for b = " << b;
                        return false;
                    }
                }
                return true;
            });
        }
        report.checks.push_back(normal.finish());
    }
    {
        CheckRunner hecke("hecke_round_trip");
        for (int k = 0; k < options.cases; ++k) {
            const EvaluationCovector xi = gen.covector();
            hecke.run_case([&](std::ostream& why) {
                const Mat2 eps = eps_from_generators(hecke_kernel(xi, order)).eps;
                if (!xi.evaluate(eps.column(0)).is_zero() || !xi.evaluate(eps.column(1)).is_zero()) {
                    why << "ev_xi does not annihilate eps";
                    return false;
                }
                if (mat2_det(eps) != zeta) {
                    why << "det(eps) != zeta";
                    return false;
                }
                const LocalHiggs h = beta_gamma_from_eps(eps);
                const bool at_zero = xi.xi0().is_zero();     // [0:1]
                const bool at_infinity = xi.xi1().is_zero(); // [1:0]
                if (vanishes_at_zero(h.gamma) != at_zero || vanishes_at_zero(h.beta) != at_infinity) {
                    why << "beta/gamma vanishing pattern does not match the point type";
                    return false;
                }
                if (h.pairing() != zeta || !determinant_lemma_holds(eps) || eps_from_local_higgs(h) != eps) {
                    why << "gamma beta != zeta or reassembly mismatch";
                    return false;
                }
                return true;
            });
        }
        report.checks.push_back(hecke.finish());
    }
    {
        CheckRunner phi("phi_e");
        phi.run_case([&](std::ostream& why) {
            const PhiEReport r = phi_e_verify({{{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1)}}});
            why << "phi_E identities fail for mu = diag(2, 1)";
            return r.determinant_identity && r.naturality;
        });
        for (int k = 0; k < options.cases; ++k) {
            ScalarMatrix mu{{{gen.scalar(), gen.scalar()}, {gen.scalar(), gen.scalar()}}};
            while ((mu[0][0] * mu[1][1] - mu[0][1] * mu[1][0]).is_zero()) {
                mu = {{{gen.scalar(), gen.scalar()}, {gen.scalar(), gen.scalar()}}};
            }
            phi.run_case([&](std::ostream& why) {
                const PhiEReport r = phi_e_verify(mu);
                why << "phi_E identities fail for a random mu";
                return r.determinant_identity && r.naturality;
            });
        }
        report.checks.push_back(phi.finish());
    }
    {
        CheckRunner inverse("series_inverse");
        for (int k = 0; k < options.cases; ++k) {
            const TruncatedSeries a = gen.unit_series(order);
            inverse.run_case([&](std::ostream& why) {
                why << "a * a^-1 != 1 for a = " << a;
                return a * a.inverse() == one;
            });
        }
        report.checks.push_back(inverse.finish());
    }
    {
        CheckRunner adjugate("adjugate_identity");
        for (int k = 0; k < options.cases; ++k) {
            const Mat2 a(gen.series(order), gen.series(order), gen.series(order), gen.series(order));
            adjugate.run_case([&](std::ostream& why) {
                why << "A adj(A) != det(A) Id for A = " << a;
                return a * mat2_adjugate(a) == mat2_det(a) * Mat2::identity(order);
            });
        }
        report.checks.push_back(adjugate.finish());
    }
    {
        CheckRunner injective("injectivity_lemma");
        for (int k = 0; k < options.cases; ++k) {
            const Mat2 phi = gen.phi_with_det_zeta(order);
            injective.run_case([&](std::ostream& why) {
                why << "det zeta matrix reported non-injective or adj(phi) phi != det Id";
                return is_injective(phi) && mat2_adjugate(phi) * phi == mat2_det(phi) * Mat2::identity(order);
            });
        }
        report.checks.push_back(injective.finish());
    }
    return report;
}

} // namespace su12
