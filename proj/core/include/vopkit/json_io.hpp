#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "vopkit/verify.hpp"

namespace vopkit {

// All rationals serialize as canonical strings: "num" when the denominator
// is 1, otherwise "num/den", always in lowest terms. Nothing is ever emitted
// as a float, so documents round-trip bit-exactly.

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// Array of coefficient strings, index = monomial degree.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

/// Object mapping shift (string integer) to the coefficient array.
nlohmann::json to_json(const DiffOp& op);
DiffOp diffop_from_json(const nlohmann::json& j);

/// Array ["beta_1", "beta_2", ...] (no constant term by construction).
nlohmann::json to_json(const ModifierPoly& p);
ModifierPoly modifier_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AutomorphismReport& rep);
nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const VerificationLedger& ledger);

nlohmann::json to_json(const RecursionTable& table);
std::string to_csv(const RecursionTable& table);

nlohmann::json to_json(const MaroniReport& report);
nlohmann::json to_json(const DegeneracyScan& scan);
nlohmann::json to_json(const KravchukReport& report);

/// Full family document: {spec, members, tildeL, eigenvalues, ledger}.
nlohmann::json family_to_json(const PolyFamily& fam,
                              const VerificationLedger* ledger = nullptr);
PolyFamily family_from_json(const nlohmann::json& j);

/// One row per member: n, coefficients by ascending degree.
std::string members_to_csv(const PolyFamily& fam);

/// Sorted keys, two-space indent, trailing newline: byte-identical for
/// identical inputs.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace vopkit
