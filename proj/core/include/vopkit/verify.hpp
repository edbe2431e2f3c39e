#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "vopkit/classical.hpp"
#include "vopkit/vorth.hpp"

namespace vopkit {

/// Outcome of one named check. Discrepancy marks an exact, reproducible
/// disagreement between the engine's computation and a commonly printed
/// formula; it is informational and never fails a run.
enum class CheckStatus { Pass, Fail, Discrepancy };

std::string check_status_name(CheckStatus s);  // "pass" / "fail" / "paper-discrepancy"

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string details;
    nlohmann::json data;  // optional structured payload (null when unused)
};

/// Engine-derived constants surfaced alongside the check rows.
struct EngineConstants {
    std::optional<Rational> eigenvalue_slope;            // lambda_1
    std::optional<int> band_depth;                       // measured d_effective
    std::vector<std::pair<int, int>> degeneracy_zeros;   // (n, band)
};

struct VerificationLedger {
    std::vector<CheckResult> entries;
    EngineConstants constants;

    bool all_passed() const;  // Discrepancy entries do not count as failures
};

/// The selectable per-family check names, in canonical execution order:
/// eigen, lowering, recursion, orthogonality, closed-forms, degeneracy.
const std::vector<std::string>& check_names();

struct CheckRun {
    VerificationLedger ledger;
    // Artifacts kept for serialization by the caller.
    std::optional<RecursionTable> table;
    std::optional<MaroniReport> maroni;
    std::optional<DegeneracyScan> scan;
};

/// Runs the selected checks against a generated (or deserialized) family.
/// Failures are captured as Fail rows, not exceptions; each selected check
/// contributes exactly one primary row plus any discrepancy rows it found.
CheckRun run_checks(const PolyFamily& fam, const std::vector<std::string>& selection,
                    int max_order = kDefaultMaxOrder);

/// Commutation-relation and eigen-action suite for the operator algebra,
/// verified both as normal-form identities and by application on the falling
/// basis. Rows whose commonly printed form disagrees with the computation
/// gain a companion Discrepancy row.
std::vector<CheckResult> run_identity_suite(const std::vector<Rational>& betas);

/// True when A and B agree on (x)_0 .. (x)_upto.
bool agree_on_falling(const DiffOp& a, const DiffOp& b, int upto);

/// Classical comparison drivers used by the `classical` command.
struct CharlierComparison {
    bool match = false;
    int first_mismatch = -1;
    DiffOp tilde_l;
    bool operator_matches_classical = false;  // tilde_l == a*Delta + x*Nabla
};
CharlierComparison compare_with_classical_charlier(const Rational& a, int nmax);

struct MeixnerComparison {
    bool members_match = false;
    int first_mismatch = -1;
    DiffOp tilde_l;
    std::optional<MeixnerOperatorForm> form;  // tilde_l as scale*(c'(x+b')Delta + x Nabla)
    Rational oracle_beta;                     // parameters under which the classical
    Rational oracle_c;                        // recurrence reproduces the members
};
MeixnerComparison compare_with_classical_meixner(const Rational& beta, const Rational& c,
                                                 int nmax);

}  // namespace vopkit
