#include "vopkit/verify.hpp"

#include <algorithm>
#include <sstream>

#include "vopkit/json_io.hpp"

namespace vopkit {

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Discrepancy: return "paper-discrepancy";
    }
    return "?";
}

bool VerificationLedger::all_passed() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "eigen", "lowering", "recursion", "orthogonality", "closed-forms", "degeneracy"};
    return names;
}

bool agree_on_falling(const DiffOp& a, const DiffOp& b, int upto) {
    for (int n = 0; n <= upto; ++n) {
        const Poly f = falling_factorial(n);
        if (apply(a, f) != apply(b, f)) return false;
    }
    return true;
}

namespace {

CheckResult row(std::string name, CheckStatus status, std::string details,
                nlohmann::json data = nullptr) {
    return CheckResult{std::move(name), status, std::move(details), std::move(data)};
}

/// Operators with shift support in [-m, m] and coefficient degree <= g are
/// separated by (x)_0 .. (x)_{2m+g+1}.
int separation_bound(const DiffOp& a, const DiffOp& b) {
    int m = 0, g = 0;
    for (const DiffOp* op : {&a, &b}) {
        if (op->is_zero()) continue;
        m = std::max({m, std::abs(op->min_shift()), std::abs(op->max_shift())});
        g = std::max(g, op->coeff_degree());
    }
    return 2 * m + g + 1;
}

CheckResult identity_row(const std::string& name, const DiffOp& lhs, const DiffOp& rhs) {
    const bool normal_form_equal = lhs == rhs;
    const bool application_equal = agree_on_falling(lhs, rhs, separation_bound(lhs, rhs));
    if (normal_form_equal && application_equal) {
        return row(name, CheckStatus::Pass, "normal forms and falling-basis actions agree");
    }
    std::ostringstream os;
    os << "lhs = " << lhs.str() << "; rhs = " << rhs.str();
    return row(name, CheckStatus::Fail, os.str());
}

/// Eigenvalue of `op` on `member` by leading-coefficient ratio; nullopt when
/// the image is not an exact multiple.
std::optional<Rational> exact_eigenvalue(const DiffOp& op, const Poly& member) {
    const Poly image = apply(op, member);
    if (image.is_zero()) return Rational(0);
    if (*image.degree() > *member.degree()) return std::nullopt;
    const Rational lambda = image.coeff(*member.degree()) / member.leading();
    if (image - lambda * member != Poly()) return std::nullopt;
    return lambda;
}

void check_eigen(const PolyFamily& fam, int max_order, CheckRun& out) {
    auto& ledger = out.ledger;
    try {
        const std::vector<Rational> lambdas = eigencheck(fam);
        if (!fam.eigenvalues.empty() && fam.eigenvalues != lambdas) {
            ledger.entries.push_back(row("eigen", CheckStatus::Fail,
                                         "stored eigenvalue list disagrees with recomputation"));
            return;
        }
        const Rational slope = lambdas.size() > 1 ? lambdas[1] : Rational(0);
        ledger.constants.eigenvalue_slope = slope;
        ledger.entries.push_back(row("eigen", CheckStatus::Pass,
                                     "tilde_L P_n = (" + slope.str() +
                                         ")*n P_n exactly for 0 <= n <= " +
                                         std::to_string(fam.spec.nmax)));

        const Rational printed_slope = fam.spec.kind == FamilyKind::CharlierAppell
                                           ? Rational(1)
                                           : Rational(1) - fam.spec.c;
        if (lambdas.size() > 1 && slope != printed_slope) {
            std::ostringstream os;
            os << "engine eigenvalue slope is " << slope.str()
               << "; the commonly printed slope is " << printed_slope.str()
               << "; the classical Charlier equation (a*Delta + x*Nabla) q_n = -n q_n"
               << " fixes the negative sign";
            ledger.entries.push_back(row("eigen.sign", CheckStatus::Discrepancy, os.str()));
        }

        if (fam.spec.kind == FamilyKind::CharlierAppell) {
            // The printed bispectral operator x*Nabla + P'(Delta)*Delta is the
            // image of L under the inverse automorphism, not the direct one.
            const DiffOp delta = build(OpKind::Delta);
            const DiffOp printed =
                build(OpKind::L) + compose(op_eval_poly(fam.spec.p.derivative(), delta), delta);
            const DiffOp inverse_image = exp_ad(-fam.spec.exponent_op(), build(OpKind::L),
                                                max_order);
            if (printed != fam.tilde_l) {
                std::optional<int> counterexample;
                for (size_t n = 0; n < fam.members.size(); ++n) {
                    if (!exact_eigenvalue(printed, fam.members[n])) {
                        counterexample = static_cast<int>(n);
                        break;
                    }
                }
                std::ostringstream os;
                os << "the printed operator x*Nabla + P'(Delta)*Delta ";
                os << (printed == inverse_image ? "(= the inverse-automorphism image of L) "
                                                : "");
                os << "differs from the verified eigenoperator x*Nabla - P'(Delta)*Delta";
                if (counterexample) {
                    os << "; it fails the eigen equation at n=" << *counterexample;
                } else {
                    os << "; both act diagonally up to nmax";
                }
                ledger.entries.push_back(
                    row("eigen.inverse-automorphism", CheckStatus::Discrepancy, os.str()));
            }
        }
    } catch (const Error& e) {
        ledger.entries.push_back(row("eigen", CheckStatus::Fail, e.what()));
    }
}

void check_lowering(const PolyFamily& fam, CheckRun& out) {
    try {
        lowering_check(fam);
        const std::string identity = fam.spec.kind == FamilyKind::CharlierAppell
                                         ? "Delta P_n = n P_{n-1}"
                                         : "G P_n = n(n+beta) P_{n-1}";
        out.ledger.entries.push_back(row("lowering", CheckStatus::Pass,
                                         identity + " exactly for 1 <= n <= " +
                                             std::to_string(fam.spec.nmax)));
    } catch (const Error& e) {
        out.ledger.entries.push_back(row("lowering", CheckStatus::Fail, e.what()));
    }
}

void check_recursion(const PolyFamily& fam, CheckRun& out) {
    auto& ledger = out.ledger;
    try {
        const std::optional<int> expected_band =
            fam.spec.kind == FamilyKind::CharlierAppell ? std::optional<int>(fam.spec.p.degree())
                                                        : std::nullopt;
        const RecursionTable table = recursion_table(fam, expected_band);
        out.table = table;
        ledger.constants.band_depth = table.d_effective;
        std::ostringstream os;
        os << "x P_n = P_{n+1} + sum_{j<=" << table.d_effective
           << "} gamma_j(n) P_{n-j} reconstructs exactly; band depth " << table.d_effective;
        if (fam.spec.kind == FamilyKind::MeixnerType) {
            os << " (= 2*deg(P)-1 = " << 2 * fam.spec.p.degree() - 1 << " expected)";
        }
        ledger.entries.push_back(row("recursion", CheckStatus::Pass, os.str()));

        if (fam.spec.kind == FamilyKind::CharlierAppell) {
            // Compare against the closed-form prediction
            // (n)_j (j beta_j + (j+1) beta_{j+1}).
            bool sign_flip_everywhere = true;
            bool offset_matches = true;
            bool exact_everywhere = true;
            for (int n = 0; n < static_cast<int>(table.rows.size()); ++n) {
                if (table.gamma(n, 0) != Rational(n)) exact_everywhere = false;
                if (table.gamma(n, 0) != Rational(n) - fam.spec.p.beta(1)) offset_matches = false;
                for (int j = 1; j <= std::min(n, fam.spec.p.degree()); ++j) {
                    const Rational predicted = charlier_recursion_prediction(fam.spec.p, n, j);
                    if (table.gamma(n, j) != predicted) exact_everywhere = false;
                    if (table.gamma(n, j) != -predicted) sign_flip_everywhere = false;
                }
            }
            if (!exact_everywhere) {
                std::ostringstream d;
                d << "extracted coefficients differ from the printed prediction "
                     "(n)_j (j beta_j + (j+1) beta_{j+1}): ";
                if (sign_flip_everywhere && offset_matches) {
                    d << "gamma_j(n) = -(prediction) for j >= 1 and gamma_0(n) = n - beta_1, "
                         "verified on every extracted row";
                } else {
                    d << "and the deviation is not the usual sign flip; see the table";
                }
                ledger.entries.push_back(
                    row("recursion.predicted-coefficients", CheckStatus::Discrepancy, d.str()));
            }
        }
    } catch (const Error& e) {
        ledger.entries.push_back(row("recursion", CheckStatus::Fail, e.what()));
    }
}

void check_orthogonality(const PolyFamily& fam, CheckRun& out) {
    auto& ledger = out.ledger;
    try {
        if (!out.table) out.table = recursion_table(fam);
        const int d = out.table->d_effective;
        ledger.constants.band_depth = d;
        if (d < 1) {
            ledger.entries.push_back(
                row("orthogonality", CheckStatus::Pass,
                    "band depth 0: the recursion has no lower terms, nothing to verify"));
            return;
        }
        const MaroniReport report = maroni_check(fam, d);
        out.maroni = report;
        std::ostringstream os;
        os << "dual functionals u_0..u_" << d - 1 << " satisfy the vanishing grid ("
           << report.zero_checks << " zero and " << report.nonzero_checks
           << " nonzero conditions over products of degree <= " << fam.spec.nmax << ")";
        ledger.entries.push_back(row("orthogonality", CheckStatus::Pass, os.str()));
    } catch (const Error& e) {
        ledger.entries.push_back(row("orthogonality", CheckStatus::Fail, e.what()));
    }
}

bool intertwining_holds(const DiffOp& exponent, const DiffOp& generator, int nmax, int max_order) {
    const DiffOp image = exp_ad(exponent, generator, max_order);
    for (int n = 0; n <= nmax; ++n) {
        const Poly f = falling_factorial(n);
        if (apply(image, exp_apply(exponent, f)) != exp_apply(exponent, apply(generator, f))) {
            return false;
        }
    }
    return true;
}

void check_closed_forms(const PolyFamily& fam, int max_order, CheckRun& out) {
    auto& ledger = out.ledger;
    try {
        std::vector<AutomorphismReport> reports;
        if (fam.spec.kind == FamilyKind::CharlierAppell) {
            for (auto target : {CharlierTarget::X, CharlierTarget::L, CharlierTarget::Delta}) {
                reports.push_back(report_charlier(fam.spec.p, target, max_order));
            }
        } else {
            for (auto target : {MeixnerTarget::X, MeixnerTarget::L, MeixnerTarget::G}) {
                reports.push_back(report_meixner(fam.spec.p, fam.spec.beta, target, max_order));
            }
        }
        bool all_match = true;
        nlohmann::json data = nlohmann::json::array();
        for (const auto& rep : reports) {
            all_match = all_match && rep.match;
            data.push_back(to_json(rep));
        }
        // Master invariant: e^P A e^{-P} applied to e^P f equals e^P (A f).
        const DiffOp exponent = fam.spec.exponent_op();
        bool intertwines = true;
        for (const DiffOp& gen : {build(OpKind::MulX), fam.spec.lowering_op(), build(OpKind::L)}) {
            intertwines = intertwines && intertwining_holds(exponent, gen, 8, max_order);
        }
        if (all_match && intertwines) {
            ledger.entries.push_back(row(
                "closed-forms", CheckStatus::Pass,
                "closed-form automorphism images equal the exp_ad series on every generator; "
                "intertwining identity holds on (x)_0..(x)_8",
                std::move(data)));
        } else {
            ledger.entries.push_back(row("closed-forms", CheckStatus::Fail,
                                         all_match ? "intertwining identity failed"
                                                   : "a closed form disagrees with the series",
                                         std::move(data)));
            return;
        }

        if (fam.spec.kind == FamilyKind::MeixnerType) {
            const DiffOp series = exp_ad(exponent, build(OpKind::MulX), max_order);
            const DiffOp printed = closed_sigma_meixner_x_printed(fam.spec.p, fam.spec.beta);
            if (printed != series) {
                ledger.entries.push_back(row(
                    "closed-forms.sigma-x-printed", CheckStatus::Discrepancy,
                    "the printed closed form x + R P'(G) - P''(G)G - P'(G)^2 G does not match "
                    "the series; with this G ordering ([G,R] = 2G) both correction terms enter "
                    "with a plus sign"));
            }
        }
    } catch (const Error& e) {
        ledger.entries.push_back(row("closed-forms", CheckStatus::Fail, e.what()));
    }
}

void check_degeneracy(const PolyFamily& fam, CheckRun& out) {
    auto& ledger = out.ledger;
    try {
        const DegeneracyScan scan = degeneracy_scan(fam);
        out.scan = scan;
        ledger.constants.degeneracy_zeros = scan.zeros;
        std::ostringstream os;
        nlohmann::json data = nlohmann::json::array();
        if (scan.warning) {
            os << *scan.warning;
        } else if (scan.zeros.empty()) {
            os << "no vanishing deepest-band coefficient (band " << scan.band
               << "); vector orthogonality is unobstructed up to nmax";
        } else {
            os << "gamma_" << scan.band << "(n) vanishes at n =";
            for (const auto& [n, j] : scan.zeros) {
                os << " " << n;
                data.push_back({{"n", n}, {"band", j}});
            }
            os << "; vector orthogonality holds only below the first zero";
        }
        ledger.entries.push_back(row("degeneracy", CheckStatus::Pass, os.str(), std::move(data)));
    } catch (const Error& e) {
        ledger.entries.push_back(row("degeneracy", CheckStatus::Fail, e.what()));
    }
}

}  // namespace

CheckRun run_checks(const PolyFamily& fam, const std::vector<std::string>& selection,
                    int max_order) {
    // Normalize the selection: "all" expands, order is canonical, unknown
    // names are configuration errors.
    std::vector<std::string> wanted = selection;
    if (wanted.empty()) wanted = {"all"};
    bool all = false;
    for (const auto& name : wanted) {
        if (name == "all") {
            all = true;
        } else if (std::find(check_names().begin(), check_names().end(), name) ==
                   check_names().end()) {
            throw InvalidSpec("unknown check '" + name + "'");
        }
    }
    auto selected = [&](const std::string& name) {
        return all || std::find(wanted.begin(), wanted.end(), name) != wanted.end();
    };

    CheckRun out;
    if (selected("eigen")) check_eigen(fam, max_order, out);
    if (selected("lowering")) check_lowering(fam, out);
    if (selected("recursion")) check_recursion(fam, out);
    if (selected("orthogonality")) check_orthogonality(fam, out);
    if (selected("closed-forms")) check_closed_forms(fam, max_order, out);
    if (selected("degeneracy")) check_degeneracy(fam, out);
    return out;
}

std::vector<CheckResult> run_identity_suite(const std::vector<Rational>& betas) {
    std::vector<CheckResult> rows;
    const DiffOp id = DiffOp::identity();
    const DiffOp d = build(OpKind::D);
    const DiffOp dinv = build(OpKind::Dinv);
    const DiffOp delta = build(OpKind::Delta);
    const DiffOp x = build(OpKind::MulX);
    const DiffOp l = build(OpKind::L);
    const DiffOp number = build(OpKind::Number);

    rows.push_back(identity_row("identity.[D,x]=D", commutator(d, x), d));
    rows.push_back(identity_row("identity.[Dinv,x]=-Dinv", commutator(dinv, x),
                                Rational(-1) * dinv));
    rows.push_back(identity_row("identity.[D,Dinv]=0", commutator(d, dinv), DiffOp::zero()));
    rows.push_back(identity_row("identity.[Delta,x]=D", commutator(delta, x), d));
    rows.push_back(identity_row("identity.[D,L]=-Delta", commutator(d, l), -delta));

    rows.push_back(identity_row("identity.[L,x]=-x-L", commutator(l, x), -x - l));
    if (commutator(l, x) != l - x) {
        rows.push_back(row("identity.[L,x].printed-variant", CheckStatus::Discrepancy,
                           "one printed variant states [L,x] = L - x; the engine derives "
                           "[L,x] = -x - L (matching the other printed variant)"));
    }

    {
        bool ok = true;
        DiffOp delta_pow = delta;  // Delta^m
        for (int m = 1; m <= 6; ++m) {
            const DiffOp rhs = Rational(m) * compose(op_pow(delta, m - 1), d);
            const DiffOp lhs = commutator(delta_pow, x);
            ok = ok && lhs == rhs && agree_on_falling(lhs, rhs, separation_bound(lhs, rhs));
            delta_pow = compose(delta_pow, delta);
        }
        rows.push_back(row("identity.[Delta^m,x]=m*Delta^(m-1)*D (m<=6)",
                           ok ? CheckStatus::Pass : CheckStatus::Fail,
                           ok ? "normal forms and falling-basis actions agree for every m"
                              : "identity failed for some m"));
    }

    auto beta_list_str = [&]() {
        std::ostringstream os;
        for (size_t i = 0; i < betas.size(); ++i) os << (i ? "," : "") << betas[i].str();
        return os.str();
    };

    {
        bool gl = true, gx = true, rform = true, adsq = true, gjr = true, gmx = true;
        for (const Rational& beta : betas) {
            const DiffOp g = build_g(beta);
            const DiffOp r = build_r(beta);
            gl = gl && commutator(g, l) == Rational(-1) * g;
            gx = gx && commutator(g, x) == r;
            // R(beta) = (x+beta+1) D - x D^-1 in normal form.
            const DiffOp r_expect =
                DiffOp::term(1, Poly(std::vector<Rational>{beta + Rational(1), Rational(1)})) -
                DiffOp::term(-1, Poly::x());
            rform = rform && r == r_expect;
            adsq = adsq && ad_power(g, x, 2) == Rational(2) * g;
            for (int j = 1; j <= 4; ++j) {
                gjr = gjr && commutator(op_pow(g, j), r) == Rational(2 * j) * op_pow(g, j);
            }
            for (int m = 1; m <= 4; ++m) {
                const DiffOp lhs = commutator(op_pow(g, m), x);
                const DiffOp rhs = Rational(m) * compose(r, op_pow(g, m - 1)) +
                                   Rational(m * (m - 1)) * op_pow(g, m - 1);
                gmx = gmx && lhs == rhs &&
                      agree_on_falling(lhs, rhs, separation_bound(lhs, rhs));
            }
        }
        const std::string suffix = " (beta in {" + beta_list_str() + "})";
        rows.push_back(row("identity.[G,L]=-G" + suffix,
                           gl ? CheckStatus::Pass : CheckStatus::Fail,
                           gl ? "holds in normal form" : "failed"));
        rows.push_back(row("identity.[G,x]=R=(x+beta+1)D-x*Dinv" + suffix,
                           (gx && rform) ? CheckStatus::Pass : CheckStatus::Fail,
                           (gx && rform) ? "holds in normal form" : "failed"));
        rows.push_back(row("identity.ad_G^2(x)=2G" + suffix,
                           adsq ? CheckStatus::Pass : CheckStatus::Fail,
                           adsq ? "holds in normal form" : "failed"));
        rows.push_back(row("identity.[G^j,R]=2j*G^j (j<=4)" + suffix,
                           gjr ? CheckStatus::Pass : CheckStatus::Fail,
                           gjr ? "holds in normal form" : "failed"));
        rows.push_back(row("identity.[G^m,x]=m*R*G^(m-1)+m(m-1)*G^(m-1) (m<=4)" + suffix,
                           gmx ? CheckStatus::Pass : CheckStatus::Fail,
                           gmx ? "normal forms and falling-basis actions agree" : "failed"));
        if (adsq && gjr && gmx) {
            rows.push_back(row(
                "identity.G-corrections.printed-sign", CheckStatus::Discrepancy,
                "printed forms carry -2G, -2j G^j and -m(m-1) G^(m-1); with G = "
                "Delta(N+beta) (the ordering fixed by G (x)_n = n(n+beta)(x)_{n-1}) the engine "
                "derives +2G, +2j G^j and +m(m-1) G^(m-1); the minus signs belong to the "
                "reversed ordering (N+beta)Delta"));
        }
        // Printed [G,x] = L - x*Delta + beta*D corresponds to the reversed ordering.
        bool printed_gx_differs = false;
        for (const Rational& beta : betas) {
            const DiffOp printed =
                l - compose(x, delta) + DiffOp::term(1, Poly(beta));
            if (printed != build_r(beta)) printed_gx_differs = true;
        }
        if (printed_gx_differs) {
            rows.push_back(row("identity.[G,x].printed-form", CheckStatus::Discrepancy,
                               "the printed commutator L - x*Delta + beta*D differs from the "
                               "engine's R = (x+beta+1)D - x*Dinv for this G ordering"));
        }
    }

    {
        bool ok = true;
        for (int n = 0; n <= 12 && ok; ++n) {
            const Poly fn = falling_factorial(n);
            ok = ok && apply(x, fn) == falling_factorial(n + 1) + Rational(n) * fn;
            ok = ok && apply(delta, fn) ==
                           (n == 0 ? Poly() : Rational(n) * falling_factorial(n - 1));
            ok = ok && apply(number, fn) == Rational(n) * fn;
            for (const Rational& beta : betas) {
                const Poly expected =
                    n == 0 ? Poly()
                           : Rational(n) * (Rational(n) + beta) * falling_factorial(n - 1);
                ok = ok && apply(build_g(beta), fn) == expected;
            }
        }
        rows.push_back(row("identity.falling-basis-actions (n<=12)",
                           ok ? CheckStatus::Pass : CheckStatus::Fail,
                           ok ? "x, Delta, N and G act as (x)_{n+1}+n(x)_n, n(x)_{n-1}, "
                                "n(x)_n and n(n+beta)(x)_{n-1}"
                              : "an action disagrees"));
    }

    return rows;
}

CharlierComparison compare_with_classical_charlier(const Rational& a, int nmax) {
    if (a.is_zero()) throw InvalidSpec("Charlier parameter a must be nonzero");
    CharlierComparison cmp;
    const FamilySpec spec =
        FamilySpec::charlier_appell(ModifierPoly({-a}), nmax);
    const PolyFamily fam = generate(spec);
    cmp.tilde_l = fam.tilde_l;
    cmp.match = true;
    for (int n = 0; n <= nmax; ++n) {
        if (fam.members[static_cast<size_t>(n)] != classical_charlier(a, n)) {
            cmp.match = false;
            cmp.first_mismatch = n;
            break;
        }
    }
    const DiffOp classical_op = a * build(OpKind::Delta) + build(OpKind::L);
    cmp.operator_matches_classical = fam.tilde_l == classical_op;
    return cmp;
}

MeixnerComparison compare_with_classical_meixner(const Rational& beta, const Rational& c,
                                                 int nmax) {
    MeixnerComparison cmp;
    const Rational alpha = c / (Rational(1) - c);
    const FamilySpec spec = FamilySpec::meixner_type(ModifierPoly({alpha}), beta, c, nmax);
    const PolyFamily fam = generate(spec);
    cmp.tilde_l = fam.tilde_l;
    cmp.form = match_meixner_form(fam.tilde_l);
    if (!cmp.form) return cmp;  // degenerate (c = 1/2): no Meixner-form match
    cmp.oracle_beta = cmp.form->beta;
    cmp.oracle_c = cmp.form->c;
    cmp.members_match = true;
    for (int n = 0; n <= nmax; ++n) {
        if (fam.members[static_cast<size_t>(n)] !=
            classical_meixner(cmp.oracle_beta, cmp.oracle_c, n)) {
            cmp.members_match = false;
            cmp.first_mismatch = n;
            break;
        }
    }
    return cmp;
}

}  // namespace vopkit
