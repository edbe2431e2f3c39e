// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Everything is exact rational arithmetic; the only tolerances are the
// per-criterion runtime budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "support/generators.hpp"
#include "vopkit/json_io.hpp"

using namespace vopkit;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, long budget_ms,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = Clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (budget_ms > 0 && ms > budget_ms) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("budget exceeded: ") +
                  std::to_string(ms) + " ms > " + std::to_string(budget_ms) + " ms";
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%ld ms)%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), ms, detail.empty() ? "" : " -- ", detail.c_str());
}

bool classical_charlier_equivalence(std::string&) {
    for (const Rational& a : {Rational(1), Rational(2), Rational(1, 2)}) {
        const PolyFamily fam = generate(FamilySpec::charlier_appell(ModifierPoly({-a}), 12));
        for (int n = 0; n <= 12; ++n) {
            if (fam.members[static_cast<size_t>(n)] != classical_charlier(a, n)) return false;
        }
    }
    return true;
}

bool operator_identity_suite(std::string& detail) {
    bool ok = true;
    for (const auto& r : run_identity_suite(testgen::beta_sample())) {
        if (r.status == CheckStatus::Fail) {
            ok = false;
            detail += r.name + ": " + r.details + "; ";
        }
        if (r.status == CheckStatus::Discrepancy) {
            std::printf("       note: %s -- %s\n", r.name.c_str(), r.details.c_str());
        }
    }
    return ok;
}

bool closed_forms_vs_series(std::string& detail) {
    std::mt19937_64 rng(0xACCE97);
    bool printed_variant_differs = false;
    for (int i = 0; i < 30; ++i) {
        const ModifierPoly p = testgen::random_modifier(rng, 4);
        for (auto t : {CharlierTarget::X, CharlierTarget::L, CharlierTarget::Delta}) {
            if (!report_charlier(p, t).match) return false;
        }
        for (const Rational& beta : testgen::beta_sample()) {
            for (auto t : {MeixnerTarget::X, MeixnerTarget::L, MeixnerTarget::G}) {
                if (!report_meixner(p, beta, t).match) return false;
            }
            const DiffOp exponent = p.at(build_g(beta));
            if (closed_sigma_meixner_x_printed(p, beta) !=
                exp_ad(exponent, build(OpKind::MulX))) {
                printed_variant_differs = true;
            }
            // The proviso: the mismatch is reportable only while the
            // intertwining identity holds for the series image.
            const DiffOp image = exp_ad(exponent, build(OpKind::MulX));
            for (int n = 0; n <= 6; ++n) {
                const Poly f = falling_factorial(n);
                if (apply(image, exp_apply(exponent, f)) !=
                    exp_apply(exponent, apply(build(OpKind::MulX), f))) {
                    return false;
                }
            }
        }
    }
    if (printed_variant_differs) {
        std::printf("       note: printed sigma(x) variant (negated correction terms) "
                    "differs from the series on this G ordering; recorded as a ledger "
                    "discrepancy, not a failure\n");
    }
    return true;
}

bool bispectrality(std::string& detail) {
    std::mt19937_64 rng(0xB15BEC);
    const std::vector<Rational> betas = {Rational(1, 2), Rational(1), Rational(3),
                                         Rational(-2, 3), Rational(2)};
    const std::vector<Rational> cs = {Rational(1, 2), Rational(2), Rational(-1, 3),
                                      Rational(3, 2), Rational(5)};
    for (int i = 0; i < 30; ++i) {
        const bool shift_kind = i < 20;
        const ModifierPoly p = testgen::random_modifier(rng, 3);
        const FamilySpec spec =
            shift_kind ? FamilySpec::charlier_appell(p, 10)
                       : FamilySpec::meixner_type(p, betas[static_cast<size_t>(i) % betas.size()],
                                                  cs[static_cast<size_t>(i) % cs.size()], 10);
        const PolyFamily fam = generate(spec);
        const Rational expected_magnitude =
            shift_kind ? Rational(1) : Rational(1) - spec.c;
        for (size_t n = 0; n < fam.eigenvalues.size(); ++n) {
            const Rational lambda = fam.eigenvalues[n];
            if (lambda != Rational(static_cast<long>(n)) * fam.eigenvalues[1]) {
                detail = "eigenvalue not linear in n";
                return false;
            }
            const Rational magnitude = lambda.sign() < 0 ? -lambda : lambda;
            Rational expected = Rational(static_cast<long>(n)) * expected_magnitude;
            if (expected.sign() < 0) expected = -expected;
            if (magnitude != expected) {
                detail = "eigenvalue magnitude differs from n*|1-c|";
                return false;
            }
        }
    }
    return true;
}

bool lowering_identities(std::string&) {
    std::mt19937_64 rng(0x10BE12);
    for (int i = 0; i < 12; ++i) {
        const ModifierPoly p = testgen::random_modifier(rng, 3);
        const FamilySpec spec =
            i % 2 == 0
                ? FamilySpec::charlier_appell(p, 10)
                : FamilySpec::meixner_type(p, testgen::beta_sample()[static_cast<size_t>(i) % 5],
                                           Rational(1, 3), 10);
        lowering_check(generate(spec));
    }
    return true;
}

bool band_and_maroni(std::string& detail) {
    // Depth-two shift family: P = X^2 - X.
    const PolyFamily charlier = generate(
        FamilySpec::charlier_appell(ModifierPoly({Rational(-1), Rational(1)}), 10));
    const RecursionTable ct = recursion_table(charlier, 2);
    if (ct.d_effective != 2) {
        detail = "unexpected band depth for the depth-two shift family";
        return false;
    }
    maroni_check(charlier, ct.d_effective);

    // Second-order family: P = (alpha/2) X^2 with beta = 1, c = 1/2,
    // alpha = c / (2 beta (1-c)) = 1/2.
    const Rational alpha(1, 2);
    const PolyFamily meixner = generate(FamilySpec::meixner_type(
        ModifierPoly({Rational(0), alpha / Rational(2)}), Rational(1), Rational(1, 2), 10));
    const RecursionTable mt = recursion_table(meixner);
    if (mt.d_effective != 3) {
        detail = "unexpected band depth for the second-order family";
        return false;
    }
    maroni_check(meixner, mt.d_effective);
    return true;
}

bool kravchuk_degeneracy(std::string& detail) {
    const auto report = kravchuk_truncation(ModifierPoly({Rational(1), Rational(1)}), 5,
                                            Rational(1, 2), 8);
    bool zero_at_5 = false;
    for (const auto& [n, j] : report.scan.zeros) {
        if (n == 5 && j == report.scan.band) zero_at_5 = true;
    }
    if (!zero_at_5) {
        detail = "deepest-band coefficient did not vanish at n = 5";
        return false;
    }
    if (report.maroni_below.zero_checks == 0 || report.maroni_below.nonzero_checks == 0) {
        detail = "restricted orthogonality grid was empty";
        return false;
    }
    return true;  // maroni_check throws on any violation
}

bool negative_controls(std::string& detail) {
    const PolyFamily clean =
        generate(FamilySpec::charlier_appell(ModifierPoly({Rational(-1)}), 8));

    {
        PolyFamily corrupted = clean;
        corrupted.tilde_l += DiffOp::term(1, Poly(Rational(1, 5)));
        try {
            eigencheck(corrupted);
            detail = "corrupted operator slipped through eigencheck";
            return false;
        } catch (const NotEigenfunction& e) {
            if (e.residual.is_zero() && e.n == 0) {
                detail = "counterexample carried no information";
                return false;
            }
        }
    }
    {
        PolyFamily corrupted = clean;
        corrupted.members[5] += Poly(std::vector<Rational>{Rational(0), Rational(3)});
        bool eigen_failed = false, band_failed = false;
        try {
            eigencheck(corrupted);
        } catch (const NotEigenfunction&) {
            eigen_failed = true;
        }
        try {
            recursion_table(corrupted, 1);
        } catch (const BandViolation& e) {
            band_failed = e.n >= 0 && e.index >= 0;
        }
        if (!eigen_failed || !band_failed) {
            detail = "corrupted member was not caught";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "shift-family members equal the classical Charlier oracle (a in {1,2,1/2}, n<=12)",
              5000, classical_charlier_equivalence);
    criterion(2, "operator commutation identities hold in normal form and on the falling basis",
              5000, operator_identity_suite);
    criterion(3, "closed-form automorphism images match the series (30 modifiers x 5 betas)",
              30000, closed_forms_vs_series);
    criterion(4, "eigenvalues are exactly linear with |lambda_n| = n or |1-c| n (30 random specs)",
              60000, bispectrality);
    criterion(5, "lowering identities Delta P_n = n P_{n-1} and G P_n = n(n+beta) P_{n-1}",
              0, lowering_identities);
    criterion(6, "finite band and full orthogonality grid (depth-2 shift and second-order families)",
              60000, band_and_maroni);
    criterion(7, "truncated family: deepest band dies at n = 5 and the restricted grid passes",
              0, kravchuk_degeneracy);
    criterion(8, "negative controls: corrupted operator and member are rejected with counterexamples",
              0, negative_controls);

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
