#include "su12/git.hpp"

#include "su12/errors.hpp"

#include <algorithm>
#include <string>

namespace su12 {

LinearizationSpec::LinearizationSpec(int n, int N, int r) : n_(n), N_(N), r_(r)
{
    if (N < 0 || n < 0 || n > N) {
        throw std::invalid_argument("linearization requires 0 <= n <= N (n = " + std::to_string(n) +
                                    ", N = " + std::to_string(N) + ")");
    }
    if (r < 1) {
        throw std::invalid_argument("linearization power must be positive");
    }
}

LinearizationSpec LinearizationSpec::for_params(const ModuliParams& p, int r)
{
    return LinearizationSpec(p.exponent(), p.zeros(), r);
}

int MonomialIndex::saturated_top(const LinearizationSpec& spec) const
{
    return static_cast<int>(std::count(m.begin(), m.end(), spec.slot_max()));
}

int MonomialIndex::saturated_bottom() const
{
    return static_cast<int>(std::count(m.begin(), m.end(), 0));
}

int MonomialIndex::interior(const LinearizationSpec& spec) const
{
    return static_cast<int>(m.size()) - saturated_top(spec) - saturated_bottom();
}

std::string_view to_string(GitClass cls)
{
    switch (cls) {
    case GitClass::GitStable: return "GitStable";
    case GitClass::StrictlySemistable: return "StrictlySemistable";
    case GitClass::GitUnstable: return "GitUnstable";
    }
    return "?";
}

bool is_invariant(const MonomialIndex& m, const LinearizationSpec& spec)
{
    long sum = 0;
    for (int v : m.m) {
        sum += v;
    }
    return sum == static_cast<long>(spec.slot_max()) * spec.exponent();
}

bool monomial_nonvanishing(const MonomialIndex& m, const Configuration& c, const LinearizationSpec& spec)
{
    if (m.m.size() != c.size()) {
        throw LengthMismatch("monomial and configuration lengths differ");
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c.points[j].is_zero() && m.m[j] != spec.slot_max()) {
            return false;
        }
        if (c.points[j].is_infinity() && m.m[j] != 0) {
            return false;
        }
    }
    return true;
}

GitClass classify_closed_form(const Configuration& c, const LinearizationSpec& spec)
{
    const MarkData marks = mark_data(c);
    const int n = spec.exponent();
    const int N = static_cast<int>(c.size());
    if (marks.n1() < n && marks.n2() < N - n) {
        return GitClass::GitStable;
    }
    if (marks.n1() <= n && marks.n2() <= N - n) {
        return GitClass::StrictlySemistable;
    }
    return GitClass::GitUnstable;
}

namespace {

// Depth-first search over exponent vectors m with 0 <= m_j <= Nr and
// sum m_j = N r n. `allowed(j)` gives the admissible range for slot j; the
// remaining-sum bounds prune branches that cannot reach the target. The
// visitor returns true to stop the search.
class MonomialSearch {
public:
    MonomialSearch(const LinearizationSpec& spec, std::vector<std::pair<int, int>> ranges)
        : spec_(spec), ranges_(std::move(ranges)), suffix_min_(ranges_.size() + 1, 0),
          suffix_max_(ranges_.size() + 1, 0), current_(ranges_.size(), 0)
    {
        for (std::size_t j = ranges_.size(); j-- > 0;) {
            suffix_min_[j] = suffix_min_[j + 1] + ranges_[j].first;
            suffix_max_[j] = suffix_max_[j + 1] + ranges_[j].second;
        }
    }

    bool run(const std::function<bool(const MonomialIndex&)>& visit)
    {
        const long target = static_cast<long>(spec_.slot_max()) * spec_.exponent();
        return descend(0, target, visit);
    }

private:
    bool descend(std::size_t j, long remaining, const std::function<bool(const MonomialIndex&)>& visit)
    {
        if (remaining < suffix_min_[j] || remaining > suffix_max_[j]) {
            return false;
        }
        if (j == ranges_.size()) {
            return visit(MonomialIndex{current_});
        }
        for (int v = ranges_[j].first; v <= ranges_[j].second; ++v) {
            current_[j] = v;
            if (descend(j + 1, remaining - v, visit)) {
                return true;
            }
        }
        return false;
    }

    const LinearizationSpec& spec_;
    std::vector<std::pair<int, int>> ranges_;
    std::vector<long> suffix_min_;
    std::vector<long> suffix_max_;
    std::vector<int> current_;
};

} // namespace

void for_each_invariant_monomial(const LinearizationSpec& spec, const std::function<void(const MonomialIndex&)>& fn)
{
    std::vector<std::pair<int, int>> ranges(static_cast<std::size_t>(spec.zeros()), {0, spec.slot_max()});
    MonomialSearch search(spec, std::move(ranges));
    search.run([&](const MonomialIndex& m) {
        fn(m);
        return false;
    });
}

BruteForceResult classify_bruteforce(const Configuration& c, const LinearizationSpec& spec, int r_max,
                                     int search_limit)
{
    if (r_max < 1) {
        throw std::invalid_argument("r_max must be at least 1");
    }
    if (c.size() != static_cast<std::size_t>(spec.zeros())) {
        throw LengthMismatch("configuration length differs from N of the linearization");
    }
    if (static_cast<long>(spec.zeros()) * r_max > search_limit) {
        throw SearchOverflow("monomial search space N*r = " + std::to_string(spec.zeros() * r_max) +
                             " exceeds the limit " + std::to_string(search_limit));
    }

    BruteForceResult result{GitClass::GitUnstable, std::nullopt, std::nullopt, 0};
    for (int r = 1; r <= r_max && !result.stable_witness; ++r) {
        const LinearizationSpec powered = spec.with_power(r);
        // A monomial vanishing at some slot of c can never witness anything,
        // so the search only branches on slot values compatible with c.
        std::vector<std::pair<int, int>> ranges;
        ranges.reserve(c.size());
        for (const auto& x : c.points) {
            if (x.is_zero()) {
                ranges.emplace_back(powered.slot_max(), powered.slot_max());
            } else if (x.is_infinity()) {
                ranges.emplace_back(0, 0);
            } else {
                ranges.emplace_back(0, powered.slot_max());
            }
        }
        MonomialSearch search(powered, std::move(ranges));
        search.run([&](const MonomialIndex& m) {
            if (!is_invariant(m, powered) || !monomial_nonvanishing(m, c, powered)) {
                return false;
            }
            if (!result.semistable_witness) {
                result.semistable_witness = m;
                result.power = r;
            }
            if (m.interior(powered) > 0 && !c.is_fixed_point()) {
                result.stable_witness = m;
                result.power = r;
                return true;
            }
            return false;
        });
    }
    if (result.stable_witness) {
        result.cls = GitClass::GitStable;
    } else if (result.semistable_witness) {
        result.cls = GitClass::StrictlySemistable;
    }
    return result;
}

Configuration s_equivalence_representative(const Configuration& c, const LinearizationSpec& spec)
{
    switch (classify_closed_form(c, spec)) {
    case GitClass::GitUnstable: throw DomainError("unstable configurations have no S-equivalence class");
    case GitClass::StrictlySemistable: return limit_point(c, spec.exponent());
    case GitClass::GitStable: break;
    }
    for (const auto& x : c.points) {
        if (x.is_finite()) {
            return act(x.coordinate().inverse(), c);
        }
    }
    return c;
}

} // namespace su12
