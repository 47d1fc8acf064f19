#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcproj/digraph.hpp"

namespace hcproj {

enum class ClaimId {
    Thm1C3,
    Cor2,
    Lemma2,
    Lemma4,
    Lemma5,
    Prop1,
    Thm2Fwd,
    Thm2Back,
    Thm3Complete,
    Thm6Equiv,
    Cor3,
};

struct ClaimInfo {
    ClaimId id;
    const char* name;    // wire token, e.g. "THM1_C3"
    const char* summary; // what is being checked, operationally
    std::uint64_t default_budget;
    int default_size_lo;
    int default_size_hi;
    int size_guard; // 0: unguarded
};

/// The closed set of auditable claims, in canonical order.
const std::vector<ClaimInfo>& claim_table();
const ClaimInfo& claim_info(ClaimId id);
std::optional<ClaimId> claim_from_name(std::string_view name);

enum class AuditVerdict { Confirmed, Refuted, Undecided };
const char* audit_verdict_name(AuditVerdict v);

struct AuditRequest {
    ClaimId claim;
    std::uint64_t budget = 0; // trials; 0 picks the claim default
    int size_lo = 0;          // 0 picks the claim default
    int size_hi = 0;
    std::uint64_t seed = 0;
};

struct AuditReport {
    std::string claim;
    AuditVerdict verdict = AuditVerdict::Undecided;
    std::uint64_t budget = 0;
    std::uint64_t trials = 0;     // trials actually run (stops at first refutation)
    std::uint64_t applicable = 0; // trials where the claim's premise held
    int size_lo = 0;
    int size_hi = 0;
    std::uint64_t seed = 0;
    std::string detail;            // claim-specific key=value pairs, ';'-separated
    std::string witness;           // inline digraph; empty unless REFUTED
    std::string witness_minimized; // greedy-shrunk replayable witness
    std::uint64_t elapsed_micros = 0;
};

/// Runs one claim audit. Deterministic given (claim, budget, sizes, seed).
/// Throws BudgetTooSmallError on a zero budget and SizeOutOfGuardError when
/// the size range exceeds the claim's oracle guard.
AuditReport audit(const AuditRequest& request);

/// True when the digraph refutes the claim; this is the exact predicate the
/// harness uses to validate and shrink witnesses, so any reported witness
/// replays through it.
bool replay_refutation(ClaimId claim, const Digraph& d);

/// key=value lines, one block. Timing is opt-in so that default output is
/// byte-stable across runs.
std::string format_report_text(const AuditReport& report, bool with_timing = false);

/// Single CSV row with header.
std::string format_report_csv(const AuditReport& report, bool with_timing = false);

} // namespace hcproj
