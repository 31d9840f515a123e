#pragma once

#include <string>
#include <vector>

#include "strangedual/singularities.hpp"

#include "json.hpp"

namespace strangedual::verify {

inline constexpr const char* kToolkitVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

// Outcome of one registry check for one subject (a record or a dual pair).
// The data payload carries the matrices/invariants needed to re-verify the
// claim externally.
struct CheckResult {
    std::string check_id;  // C1 .. C9
    std::string subject;
    CheckStatus status = CheckStatus::Fail;
    std::string details;
    nlohmann::ordered_json data;
};

struct VerificationReport {
    std::string version;
    std::vector<CheckResult> results;
    int pass = 0;
    int fail = 0;
    int skipped = 0;
};

struct VerifyOptions {
    unsigned cyclotomic_bound = 84;  // 2 * max Coxeter number over the table
    std::string check_filter;        // empty = all checks
};

// Runs the registry checks against a table of records (the canonical table by
// default; tests may inject corrupted copies).
class Verifier {
public:
    Verifier();
    explicit Verifier(std::vector<sing::SingularityRecord> table, VerifyOptions opt = {});

    // Registry checks C1..C8 for one record, in registry order.
    std::vector<CheckResult> verify_record(const std::string& name) const;

    // Registry check C9 for the dual pair containing the named record.
    std::vector<CheckResult> verify_pair(const std::string& name) const;

    // All rows in table order, then all dual pairs in order of first
    // appearance.  Deterministic: identical reports across runs.
    VerificationReport run_all() const;

private:
    const sing::SingularityRecord& find(const std::string& name) const;
    bool enabled(const std::string& check_id) const;

    std::vector<sing::SingularityRecord> table_;
    VerifyOptions opt_;
};

nlohmann::ordered_json report_json(const VerificationReport& report);
std::string report_text(const VerificationReport& report);

}  // namespace strangedual::verify
