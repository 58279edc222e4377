#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace su12 {

/// Genus g >= 2 and degree d of L, with the derived number of zeros N = 4g-4
/// of the quadratic differential and the linearization exponent n = 2(g-1+d).
class ModuliParams {
public:
    /// Throws InvalidGenus for g < 2.
    ModuliParams(int genus, int degree);

    int genus() const { return g_; }
    int degree() const { return d_; }
    int zeros() const { return 4 * g_ - 4; }
    int exponent() const { return 2 * (g_ - 1 + d_); }
    /// Upper bound for d_gamma (and n1): 2(g-1+d).
    int gamma_bound() const { return 2 * (g_ - 1 + d_); }
    /// Upper bound for d_beta (and n2): 2(g-1-d).
    int beta_bound() const { return 2 * (g_ - 1 - d_); }
    /// |d| < g-1.
    bool in_theorem_range() const;

    friend bool operator==(const ModuliParams&, const ModuliParams&) = default;

private:
    int g_;
    int d_;
};

/// Whether stable objects exist: |d| < g-1. Throws InvalidGenus for g < 2.
bool milnor_wood_admits_stable(int genus, int degree);

enum class Label { Beta, Gamma, Rest };

struct PartitionCounts {
    int beta = 0;
    int gamma = 0;
    int rest = 0;

    friend bool operator==(const PartitionCounts&, const PartitionCounts&) = default;
};

/// Assignment of each zero of q to D_beta, D_gamma or D_r.
class LabeledPartition {
public:
    LabeledPartition() = default;
    explicit LabeledPartition(std::vector<Label> assignment);

    /// Canonical labeled partition with the given counts: Beta first, then Gamma, then Rest.
    static LabeledPartition from_counts(int beta, int gamma, int rest);

    const std::vector<Label>& assignment() const { return assignment_; }
    std::size_t size() const { return assignment_.size(); }
    const PartitionCounts& counts() const { return counts_; }

    friend bool operator==(const LabeledPartition& a, const LabeledPartition& b)
    {
        return a.assignment_ == b.assignment_;
    }

private:
    std::vector<Label> assignment_;
    PartitionCounts counts_;
};

enum class StabilityClass { Stable, StrictlyPolystable, SemistableNotPolystable, Unstable };

std::string_view to_string(StabilityClass cls);
std::string_view to_string(Label label);

/// Classification from the counts alone (d_beta, d_gamma); d_r is implied.
StabilityClass classify_counts(const ModuliParams& p, int d_beta, int d_gamma);
/// Throws LengthMismatch unless the partition has N entries.
StabilityClass classify_partition(const ModuliParams& p, const LabeledPartition& part);

struct CensusRow {
    int d_beta;
    int d_gamma;
    int d_rest;
    StabilityClass cls;
    /// N! / (d_beta! d_gamma! d_r!)
    mpz_class labeled_count;
    /// g + d_r for stable rows.
    std::optional<int> stratum_dimension;
};

struct Census {
    ModuliParams params;
    std::vector<CensusRow> rows;
    mpz_class stable_total;
    mpz_class strictly_polystable_total;
    mpz_class semistable_not_polystable_total;
    mpz_class unstable_total;

    mpz_class total() const
    {
        return stable_total + strictly_polystable_total + semistable_not_polystable_total + unstable_total;
    }
};

/// Every (d_beta, d_gamma) with d_beta + d_gamma <= N, in lexicographic order.
Census census(const ModuliParams& p);

/// g + d_r; throws DomainError unless the partition is stable.
int stratum_dimension(const ModuliParams& p, const LabeledPartition& part);

/// Degrees of L(D_beta)K^-1 and L^-2(-D_beta)K in the split F of a strictly
/// polystable object. Throws DomainError when |d| > g-1.
std::pair<int, int> polystable_split_degrees(const ModuliParams& p);

} // namespace su12
