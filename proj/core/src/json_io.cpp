#include "vopkit/json_io.hpp"

#include <sstream>

namespace vopkit {

namespace {

const nlohmann::json& expect(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

}  // namespace

nlohmann::json to_json(const Rational& r) {
    return r.str();
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError("rational must be a string");
    return Rational::from_string(j.get<std::string>());
}

nlohmann::json to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Poly(std::move(coeffs));
}

nlohmann::json to_json(const DiffOp& op) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [shift, coeff] : op.terms()) {
        obj[std::to_string(shift)] = to_json(coeff);
    }
    return obj;
}

DiffOp diffop_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("operator must be an object shift -> coefficients");
    DiffOp op;
    for (auto it = j.begin(); it != j.end(); ++it) {
        size_t pos = 0;
        const int shift = std::stoi(it.key(), &pos);
        if (pos != it.key().size()) throw ParseError("bad shift '" + it.key() + "'");
        op += DiffOp::term(shift, poly_from_json(it.value()));
    }
    return op;
}

nlohmann::json to_json(const ModifierPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& b : p.betas()) arr.push_back(b.str());
    return arr;
}

ModifierPoly modifier_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("modifier polynomial must be an array");
    std::vector<Rational> betas;
    for (const auto& b : j) betas.push_back(rational_from_json(b));
    return ModifierPoly(std::move(betas));
}

nlohmann::json to_json(const FamilySpec& spec) {
    nlohmann::json j;
    j["kind"] = family_kind_name(spec.kind);
    j["P"] = to_json(spec.p);
    if (spec.kind == FamilyKind::MeixnerType) {
        j["beta"] = spec.beta.str();
        j["c"] = spec.c.str();
    }
    j["nmax"] = spec.nmax;
    return j;
}

FamilySpec spec_from_json(const nlohmann::json& j) {
    const FamilyKind kind = family_kind_from_name(expect(j, "kind").get<std::string>());
    ModifierPoly p = modifier_from_json(expect(j, "P"));
    const int nmax = expect(j, "nmax").get<int>();
    if (kind == FamilyKind::MeixnerType) {
        return FamilySpec::meixner_type(std::move(p), rational_from_json(expect(j, "beta")),
                                        rational_from_json(expect(j, "c")), nmax);
    }
    return FamilySpec::charlier_appell(std::move(p), nmax);
}

nlohmann::json to_json(const AutomorphismReport& rep) {
    nlohmann::json j;
    j["input"] = rep.input;
    j["series"] = to_json(rep.series_image);
    j["closed"] = to_json(rep.closed_image);
    j["nilpotencyOrder"] = rep.nilpotency_order;
    j["match"] = rep.match;
    return j;
}

nlohmann::json to_json(const CheckResult& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["status"] = check_status_name(r.status);
    j["details"] = r.details;
    if (!r.data.is_null()) j["data"] = r.data;
    return j;
}

nlohmann::json to_json(const VerificationLedger& ledger) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& entry : ledger.entries) arr.push_back(to_json(entry));

    nlohmann::json constants = nlohmann::json::object();
    if (ledger.constants.eigenvalue_slope) {
        constants["eigenvalueSlope"] = ledger.constants.eigenvalue_slope->str();
    }
    if (ledger.constants.band_depth) {
        constants["bandDepth"] = *ledger.constants.band_depth;
    }
    if (!ledger.constants.degeneracy_zeros.empty()) {
        nlohmann::json zeros = nlohmann::json::array();
        for (const auto& [n, band] : ledger.constants.degeneracy_zeros) {
            zeros.push_back({{"n", n}, {"band", band}});
        }
        constants["degeneracyZeros"] = zeros;
    }
    if (!constants.empty()) {
        arr.push_back({{"name", "engine-constants"},
                       {"status", "pass"},
                       {"details", "engine-derived constants"},
                       {"data", constants}});
    }
    return arr;
}

nlohmann::json to_json(const RecursionTable& table) {
    nlohmann::json j;
    j["dEffective"] = table.d_effective;
    nlohmann::json rows = nlohmann::json::array();
    for (size_t n = 0; n < table.rows.size(); ++n) {
        nlohmann::json r = nlohmann::json::array();
        const size_t width = std::min(table.rows[n].size(),
                                      static_cast<size_t>(table.d_effective) + 1);
        for (size_t jdx = 0; jdx < width; ++jdx) r.push_back(table.rows[n][jdx].str());
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

std::string to_csv(const RecursionTable& table) {
    std::ostringstream os;
    os << "n";
    for (int j = 0; j <= table.d_effective; ++j) os << ",gamma_" << j;
    os << "\n";
    for (size_t n = 0; n < table.rows.size(); ++n) {
        os << n;
        for (int j = 0; j <= table.d_effective; ++j) {
            os << ",";
            if (j < static_cast<int>(table.rows[n].size())) os << table.rows[n][j].str();
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json to_json(const MaroniReport& report) {
    nlohmann::json j;
    j["d"] = report.d;
    j["zeroChecks"] = report.zero_checks;
    j["nonzeroChecks"] = report.nonzero_checks;
    return j;
}

nlohmann::json to_json(const DegeneracyScan& scan) {
    nlohmann::json j;
    j["band"] = scan.band;
    nlohmann::json zeros = nlohmann::json::array();
    for (const auto& [n, band] : scan.zeros) zeros.push_back({{"n", n}, {"band", band}});
    j["zeros"] = zeros;
    if (scan.warning) j["warning"] = *scan.warning;
    return j;
}

nlohmann::json to_json(const KravchukReport& report) {
    nlohmann::json j;
    j["truncation"] = report.truncation;
    j["scan"] = to_json(report.scan);
    j["maroniBelow"] = to_json(report.maroni_below);
    j["truncatedAtExpected"] = report.truncated_at_expected;
    return j;
}

nlohmann::json family_to_json(const PolyFamily& fam, const VerificationLedger* ledger) {
    nlohmann::json j;
    j["spec"] = to_json(fam.spec);
    nlohmann::json members = nlohmann::json::array();
    for (const Poly& m : fam.members) members.push_back(to_json(m));
    j["members"] = members;
    j["tildeL"] = to_json(fam.tilde_l);
    nlohmann::json eigen = nlohmann::json::array();
    for (const Rational& lambda : fam.eigenvalues) eigen.push_back(lambda.str());
    j["eigenvalues"] = eigen;
    j["ledger"] = ledger ? to_json(*ledger) : nlohmann::json::array();
    return j;
}

PolyFamily family_from_json(const nlohmann::json& j) {
    PolyFamily fam{spec_from_json(expect(j, "spec")), {}, {}, {}};
    const auto& members = expect(j, "members");
    if (!members.is_array() ||
        members.size() != static_cast<size_t>(fam.spec.nmax) + 1) {
        throw ParseError("document must carry exactly nmax+1 members");
    }
    for (const auto& m : members) fam.members.push_back(poly_from_json(m));
    fam.tilde_l = diffop_from_json(expect(j, "tildeL"));
    for (const auto& lambda : expect(j, "eigenvalues")) {
        fam.eigenvalues.push_back(rational_from_json(lambda));
    }
    return fam;
}

std::string members_to_csv(const PolyFamily& fam) {
    std::ostringstream os;
    os << "n,coefficients (ascending degree)\n";
    for (size_t n = 0; n < fam.members.size(); ++n) {
        os << n;
        for (const Rational& c : fam.members[n].coeffs()) os << "," << c.str();
        os << "\n";
    }
    return os.str();
}

std::string dump_canonical(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

}  // namespace vopkit
