#pragma once

#include "su12/configuration.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace su12 {

/// Linearization sigma^(n) on the r-th power of the ample bundle over (P^1)^N.
class LinearizationSpec {
public:
    /// Throws std::invalid_argument unless 0 <= n <= N and r >= 1.
    LinearizationSpec(int n, int N, int r = 1);

    static LinearizationSpec for_params(const ModuliParams& p, int r = 1);

    int exponent() const { return n_; }
    int zeros() const { return N_; }
    int power() const { return r_; }
    /// Per-slot exponent bound N*r.
    int slot_max() const { return N_ * r_; }

    LinearizationSpec with_power(int r) const { return LinearizationSpec(n_, N_, r); }

private:
    int n_;
    int N_;
    int r_;
};

/// Exponents (m_1..m_N) of a monomial section prod xi_j^{m_j} eta_j^{Nr-m_j}.
struct MonomialIndex {
    std::vector<int> m;

    /// Slots with m_j = Nr.
    int saturated_top(const LinearizationSpec& spec) const;
    /// Slots with m_j = 0.
    int saturated_bottom() const;
    /// N - n1~ - n2~: number of slots with 0 < m_j < Nr.
    int interior(const LinearizationSpec& spec) const;

    friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;
};

enum class GitClass { GitStable, StrictlySemistable, GitUnstable };

std::string_view to_string(GitClass cls);

/// sum_j m_j = N*r*n.
bool is_invariant(const MonomialIndex& m, const LinearizationSpec& spec);

/// The monomial is nonzero at c iff every Zero slot has m_j = Nr and every
/// Infinity slot has m_j = 0.
bool monomial_nonvanishing(const MonomialIndex& m, const Configuration& c, const LinearizationSpec& spec);

/// Stable iff n1 < n and n2 < N-n; strictly semistable iff n1 <= n,
/// n2 <= N-n with one equality; unstable otherwise.
GitClass classify_closed_form(const Configuration& c, const LinearizationSpec& spec);

struct BruteForceResult {
    GitClass cls;
    /// An invariant monomial nonvanishing at c, if the point is semistable.
    std::optional<MonomialIndex> semistable_witness;
    /// An invariant nonvanishing monomial with an interior slot, if stable.
    std::optional<MonomialIndex> stable_witness;
    /// Power r at which the reported witness was found.
    int power = 0;
};

inline constexpr int default_search_limit = 64;

/// Search over monomial sections of powers r = 1..r_max for invariant
/// sections nonvanishing at c. Stable requires a witness with an interior
/// slot (closed orbits on the nonvanishing locus) and c not fixed.
/// Throws SearchOverflow when N*r_max exceeds search_limit, and
/// std::invalid_argument for r_max < 1 or length mismatch.
BruteForceResult classify_bruteforce(const Configuration& c, const LinearizationSpec& spec, int r_max,
                                     int search_limit = default_search_limit);

/// Visits every invariant monomial of the given spec (exponents in lexicographic order).
void for_each_invariant_monomial(const LinearizationSpec& spec, const std::function<void(const MonomialIndex&)>& fn);

/// Canonical point of the S-equivalence class: for stable c the orbit
/// representative with the lowest-indexed Finite coordinate equal to 1, for
/// strictly semistable c its limit point. Throws DomainError for unstable c.
Configuration s_equivalence_representative(const Configuration& c, const LinearizationSpec& spec);

} // namespace su12
