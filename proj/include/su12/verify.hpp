#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace su12 {

struct SuiteCheck {
    std::string name;
    int cases = 0;
    int failures = 0;
    /// First failure message, empty when the check passed.
    std::string detail;

    bool passed() const { return failures == 0; }
};

struct VerificationOptions {
    std::size_t order = 8;
    std::uint64_t seed = 1;
    int cases = 200;
    /// Append a phi with det = zeta^2 to the Smith suite.
    bool corrupt = false;
};

struct VerificationReport {
    VerificationOptions options;
    std::vector<SuiteCheck> checks;

    bool passed() const;
};

/// Randomized and worked-example checks of the local model: Smith form,
/// normal forms, Hecke kernel round trips, phi_E, the determinant lemma,
/// and the series/matrix identities they rest on.
VerificationReport run_local_verification(const VerificationOptions& options);

} // namespace su12
