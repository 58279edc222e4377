#include "su12/errors.hpp"
#include "su12/stability.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace su12;

namespace {

// Independent oracle: enumerate every labeled assignment in base 3 and
// classify from the inequalities written out directly.
std::map<StabilityClass, long> enumerate_assignments(int g, int d)
{
    const int N = 4 * g - 4;
    long total = 1;
    for (int i = 0; i < N; ++i) {
        total *= 3;
    }
    std::map<StabilityClass, long> out;
    for (long code = 0; code < total; ++code) {
        int beta = 0;
        int gamma = 0;
        long x = code;
        for (int i = 0; i < N; ++i, x /= 3) {
            beta += x % 3 == 0;
            gamma += x % 3 == 1;
        }
        const int bb = 2 * (g - 1 - d);
        const int gb = 2 * (g - 1 + d);
        StabilityClass cls;
        if (beta < bb && gamma < gb) {
            cls = StabilityClass::Stable;
        } else if (beta == bb && gamma == gb) {
            cls = StabilityClass::StrictlyPolystable;
        } else if (beta <= bb && gamma <= gb) {
            cls = StabilityClass::SemistableNotPolystable;
        } else {
            cls = StabilityClass::Unstable;
        }
        ++out[cls];
    }
    return out;
}

} // namespace

TEST_CASE("moduli parameters")
{
    const ModuliParams p(3, 1);
    CHECK(p.zeros() == 8);
    CHECK(p.exponent() == 6);
    CHECK(p.gamma_bound() == 6);
    CHECK(p.beta_bound() == 2);
    CHECK_THROWS_AS(ModuliParams(1, 0), InvalidGenus);
    for (int g = 2; g <= 6; ++g) {
        for (int d = -(g - 2); d <= g - 2; ++d) {
            const ModuliParams q(g, d);
            CHECK(q.in_theorem_range());
            CHECK(0 < q.exponent());
            CHECK(q.exponent() < q.zeros());
        }
    }
}

TEST_CASE("milnor-wood bound")
{
    CHECK(milnor_wood_admits_stable(2, 0));
    CHECK_FALSE(milnor_wood_admits_stable(2, 1));
    CHECK(milnor_wood_admits_stable(3, -1));
    CHECK_FALSE(milnor_wood_admits_stable(3, -2));
    CHECK_THROWS_AS(milnor_wood_admits_stable(1, 0), InvalidGenus);
}

TEST_CASE("classification examples at g = 2, d = 0")
{
    const ModuliParams p(2, 0);
    CHECK(classify_partition(p, LabeledPartition::from_counts(1, 1, 2)) == StabilityClass::Stable);
    CHECK(classify_partition(p, LabeledPartition::from_counts(2, 2, 0)) == StabilityClass::StrictlyPolystable);
    CHECK(classify_partition(p, LabeledPartition::from_counts(3, 1, 0)) == StabilityClass::Unstable);
    CHECK(classify_partition(p, LabeledPartition::from_counts(2, 0, 2)) ==
          StabilityClass::SemistableNotPolystable);
}

TEST_CASE("partition length must be N")
{
    CHECK_THROWS_AS(classify_partition(ModuliParams(2, 0), LabeledPartition::from_counts(1, 1, 1)),
                    LengthMismatch);
}

TEST_CASE("labeled partition counts")
{
    const LabeledPartition part({Label::Rest, Label::Beta, Label::Gamma, Label::Beta});
    CHECK(part.counts() == PartitionCounts{2, 1, 1});
    CHECK(part.size() == 4);
}

TEST_CASE("classification depends only on counts")
{
    const ModuliParams p(3, 0);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 300; ++k) {
        std::vector<Label> a(8);
        for (auto& l : a) {
            l = static_cast<Label>(rng() % 3);
        }
        const StabilityClass cls = classify_partition(p, LabeledPartition(a));
        std::shuffle(a.begin(), a.end(), rng);
        CHECK(classify_partition(p, LabeledPartition(a)) == cls);
    }
}

TEST_CASE("degree sign symmetry swaps beta and gamma")
{
    for (int g = 2; g <= 5; ++g) {
        const int N = 4 * g - 4;
        for (int d = -(g + 1); d <= g + 1; ++d) {
            const ModuliParams p(g, d);
            const ModuliParams q(g, -d);
            for (int b = 0; b <= N; ++b) {
                for (int c = 0; b + c <= N; ++c) {
                    CHECK(classify_counts(q, c, b) == classify_counts(p, b, c));
                }
            }
        }
    }
}

TEST_CASE("census at g = 2, d = 0")
{
    const Census c = census(ModuliParams(2, 0));
    CHECK(c.stable_total == 21);
    CHECK(c.strictly_polystable_total == 6);
    CHECK(c.total() == 81);
    CHECK(c.rows.size() == 15);
}

TEST_CASE("census at g = 2, d = 1 has no stable partitions")
{
    const Census c = census(ModuliParams(2, 1));
    CHECK(c.stable_total == 0);
    CHECK(c.total() == 81);
}

TEST_CASE("census agrees with exhaustive enumeration")
{
    for (int g = 2; g <= 4; ++g) {
        for (int d = -g; d <= g; ++d) {
            CAPTURE(g);
            CAPTURE(d);
            const auto oracle = enumerate_assignments(g, d);
            const Census c = census(ModuliParams(g, d));
            auto count = [&](StabilityClass cls) {
                auto it = oracle.find(cls);
                return it == oracle.end() ? 0L : it->second;
            };
            CHECK(c.stable_total == count(StabilityClass::Stable));
            CHECK(c.strictly_polystable_total == count(StabilityClass::StrictlyPolystable));
            CHECK(c.semistable_not_polystable_total == count(StabilityClass::SemistableNotPolystable));
            CHECK(c.unstable_total == count(StabilityClass::Unstable));
        }
    }
}

TEST_CASE("census sums to 3^N and rows are multinomials")
{
    for (int g = 2; g <= 9; ++g) {
        const Census c = census(ModuliParams(g, 0));
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), 3, static_cast<unsigned long>(4 * g - 4));
        CHECK(c.total() == expected);
        for (const auto& row : c.rows) {
            mpz_class n, a, b, r;
            mpz_fac_ui(n.get_mpz_t(), static_cast<unsigned long>(4 * g - 4));
            mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(row.d_beta));
            mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(row.d_gamma));
            mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(row.d_rest));
            CHECK(row.labeled_count == n / (a * b * r));
            CHECK(row.d_beta + row.d_gamma + row.d_rest == 4 * g - 4);
            CHECK(row.stratum_dimension.has_value() == (row.cls == StabilityClass::Stable));
        }
    }
}

TEST_CASE("in range: all-rest is stable and polystable rows are exactly the saturated ones")
{
    for (int g = 2; g <= 6; ++g) {
        for (int d = -(g - 2); d <= g - 2; ++d) {
            const ModuliParams p(g, d);
            CHECK(classify_counts(p, 0, 0) == StabilityClass::Stable);
            for (const auto& row : census(p).rows) {
                const bool saturated = row.d_beta == p.beta_bound() && row.d_gamma == p.gamma_bound();
                CHECK((row.cls == StabilityClass::StrictlyPolystable) == saturated);
                if (saturated) {
                    CHECK(row.d_rest == 0);
                }
            }
        }
    }
}

TEST_CASE("stratum dimensions")
{
    CHECK(stratum_dimension(ModuliParams(2, 0), LabeledPartition::from_counts(0, 0, 4)) == 6);
    CHECK(stratum_dimension(ModuliParams(3, 0), LabeledPartition::from_counts(0, 0, 8)) == 11);
    // (2, 2, 0) is polystable, not stable.
    CHECK_THROWS_AS(stratum_dimension(ModuliParams(2, 0), LabeledPartition::from_counts(2, 2, 0)), DomainError);
    CHECK(stratum_dimension(ModuliParams(2, 0), LabeledPartition::from_counts(1, 1, 2)) == 4);
}

TEST_CASE("polystable split degrees")
{
    CHECK(polystable_split_degrees(ModuliParams(2, 0)) == std::pair{0, 0});
    CHECK(polystable_split_degrees(ModuliParams(3, 1)) == std::pair{-1, 0});
    for (int g = 2; g <= 6; ++g) {
        for (int d = -(g - 1); d <= g - 1; ++d) {
            const auto [l1, l2] = polystable_split_degrees(ModuliParams(g, d));
            CHECK(l1 + l2 == -d);
        }
        CHECK_THROWS_AS(polystable_split_degrees(ModuliParams(g, g)), DomainError);
    }
}

TEST_CASE("class names")
{
    CHECK(to_string(StabilityClass::Stable) == "Stable");
    CHECK(to_string(StabilityClass::StrictlyPolystable) == "StrictlyPolystable");
    CHECK(to_string(StabilityClass::SemistableNotPolystable) == "SemistableNotPolystable");
    CHECK(to_string(StabilityClass::Unstable) == "Unstable");
    CHECK(to_string(Label::Rest) == "Rest");
}
