#include "su12/stability.hpp"

#include "su12/errors.hpp"

#include <cstdlib>
#include <string>

namespace su12 {

ModuliParams::ModuliParams(int genus, int degree) : g_(genus), d_(degree)
{
    if (genus < 2) {
        throw InvalidGenus("genus must be at least 2, got " + std::to_string(genus));
    }
}

bool ModuliParams::in_theorem_range() const
{
    return std::abs(d_) < g_ - 1;
}

bool milnor_wood_admits_stable(int genus, int degree)
{
    return ModuliParams(genus, degree).in_theorem_range();
}

LabeledPartition::LabeledPartition(std::vector<Label> assignment) : assignment_(std::move(assignment))
{
    for (Label l : assignment_) {
        switch (l) {
        case Label::Beta: ++counts_.beta; break;
        case Label::Gamma: ++counts_.gamma; break;
        case Label::Rest: ++counts_.rest; break;
        }
    }
}

LabeledPartition LabeledPartition::from_counts(int beta, int gamma, int rest)
{
    if (beta < 0 || gamma < 0 || rest < 0) {
        throw std::invalid_argument("partition counts must be nonnegative");
    }
    std::vector<Label> a;
    a.insert(a.end(), static_cast<std::size_t>(beta), Label::Beta);
    a.insert(a.end(), static_cast<std::size_t>(gamma), Label::Gamma);
    a.insert(a.end(), static_cast<std::size_t>(rest), Label::Rest);
    return LabeledPartition(std::move(a));
}

std::string_view to_string(StabilityClass cls)
{
    switch (cls) {
    case StabilityClass::Stable: return "Stable";
    case StabilityClass::StrictlyPolystable: return "StrictlyPolystable";
    case StabilityClass::SemistableNotPolystable: return "SemistableNotPolystable";
    case StabilityClass::Unstable: return "Unstable";
    }
    return "?";
}

std::string_view to_string(Label label)
{
    switch (label) {
    case Label::Beta: return "Beta";
    case Label::Gamma: return "Gamma";
    case Label::Rest: return "Rest";
    }
    return "?";
}

StabilityClass classify_counts(const ModuliParams& p, int d_beta, int d_gamma)
{
    const int beta_bound = p.beta_bound();
    const int gamma_bound = p.gamma_bound();
    if (d_beta < beta_bound && d_gamma < gamma_bound) {
        return StabilityClass::Stable;
    }
    if (d_beta > beta_bound || d_gamma > gamma_bound) {
        return StabilityClass::Unstable;
    }
    if (d_beta == beta_bound && d_gamma == gamma_bound) {
        return StabilityClass::StrictlyPolystable;
    }
    return StabilityClass::SemistableNotPolystable;
}

StabilityClass classify_partition(const ModuliParams& p, const LabeledPartition& part)
{
    if (part.size() != static_cast<std::size_t>(p.zeros())) {
        throw LengthMismatch("partition has " + std::to_string(part.size()) + " entries, expected " +
                             std::to_string(p.zeros()));
    }
    return classify_counts(p, part.counts().beta, part.counts().gamma);
}

namespace {

mpz_class factorial(int k)
{
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

} // namespace

Census census(const ModuliParams& p)
{
    const int n_zeros = p.zeros();
    Census out{p, {}, 0, 0, 0, 0};
    const mpz_class n_fact = factorial(n_zeros);
    for (int b = 0; b <= n_zeros; ++b) {
        for (int c = 0; b + c <= n_zeros; ++c) {
            const int r = n_zeros - b - c;
            CensusRow row{b, c, r, classify_counts(p, b, c), n_fact / (factorial(b) * factorial(c) * factorial(r)),
                          std::nullopt};
            switch (row.cls) {
            case StabilityClass::Stable:
                row.stratum_dimension = p.genus() + r;
                out.stable_total += row.labeled_count;
                break;
            case StabilityClass::StrictlyPolystable: out.strictly_polystable_total += row.labeled_count; break;
            case StabilityClass::SemistableNotPolystable:
                out.semistable_not_polystable_total += row.labeled_count;
                break;
            case StabilityClass::Unstable: out.unstable_total += row.labeled_count; break;
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

int stratum_dimension(const ModuliParams& p, const LabeledPartition& part)
{
    if (classify_partition(p, part) != StabilityClass::Stable) {
        throw DomainError("stratum dimension is only defined for stable partitions");
    }
    return p.genus() + part.counts().rest;
}

std::pair<int, int> polystable_split_degrees(const ModuliParams& p)
{
    const int g = p.genus();
    const int d = p.degree();
    if (std::abs(d) > g - 1) {
        throw DomainError("polystable splitting requires |d| <= g-1");
    }
    const int d_beta = p.beta_bound();
    return {d + d_beta - (2 * g - 2), -2 * d - d_beta + (2 * g - 2)};
}

} // namespace su12
