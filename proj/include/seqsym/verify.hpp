#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace seqsym {

/// One failing parameter. secondary is -1 for single-parameter checks and
/// the offending a for the per-pair zolotarev grid.
struct VerifyFailure {
    std::int64_t primary = 0;
    std::int64_t secondary = -1;

    friend bool operator==(const VerifyFailure&, const VerifyFailure&) = default;
    friend auto operator<=>(const VerifyFailure&, const VerifyFailure&) = default;
};

/// Outcome of one batch verification run. Everything except wall_seconds
/// is deterministic for a fixed check and range, independent of the
/// worker count.
struct VerificationReport {
    std::string check;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::string param_name;       // "n" or "m"
    std::int64_t cases = 0;       // instances actually evaluated
    std::int64_t skipped = 0;     // parameter values skipped by parity
    std::int64_t failure_count = 0;
    std::vector<VerifyFailure> failures;  // smallest ones, capped
    double wall_seconds = 0.0;

    bool pass() const noexcept { return failure_count == 0; }

    /// Stable line-oriented report; wall_seconds is the final line so that
    /// reports can be compared net of timing.
    std::string to_text() const;

    /// Same content as JSON (single line, trailing newline).
    std::string to_json_string() const;
};

/// How many failures a report retains in detail.
inline constexpr std::size_t kMaxReportedFailures = 10;

/// Names accepted by run_verification, in display order.
const std::vector<std::string>& verification_names();

/// Runs one named check over an inclusive parameter range, fanning the
/// range out over `workers` threads. Checks over n that need even n skip
/// odd values (and vice versa for the odd-m zolotarev grid); a range whose
/// every value is skipped is reported as an error, as is an unknown check
/// name. The merged report does not depend on the worker count.
VerificationReport run_verification(const std::string& check, std::int64_t lo, std::int64_t hi,
                                    int workers);

}  // namespace seqsym
