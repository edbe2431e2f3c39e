#include "vopkit/vorth.hpp"

#include <sstream>

namespace vopkit {

std::vector<Rational> expand_in_family(const Poly& f, const PolyFamily& fam) {
    const int nmax = fam.spec.nmax;
    std::vector<Rational> out(static_cast<size_t>(nmax) + 1, Rational(0));
    Poly rem = f;
    while (!rem.is_zero()) {
        const int d = *rem.degree();
        if (d > nmax) {
            throw DegreeOverflow("polynomial of degree " + std::to_string(d) +
                                 " does not fit in a family generated up to " +
                                 std::to_string(nmax));
        }
        const Poly& basis = fam.members[static_cast<size_t>(d)];
        const Rational c = rem.leading() / basis.leading();
        out[static_cast<size_t>(d)] = c;
        rem -= c * basis;
        if (!rem.is_zero() && *rem.degree() >= d) {
            throw Error("family expansion failed to reduce degree (non-triangular basis?)");
        }
    }
    return out;
}

Rational DualFunctional::operator()(const Poly& f, const PolyFamily& fam) const {
    const auto coeffs = expand_in_family(f, fam);
    if (k < 0 || static_cast<size_t>(k) >= coeffs.size()) return Rational(0);
    return coeffs[static_cast<size_t>(k)];
}

Rational RecursionTable::gamma(int n, int j) const {
    if (n < 0 || static_cast<size_t>(n) >= rows.size()) return Rational(0);
    const auto& row = rows[static_cast<size_t>(n)];
    if (j < 0 || static_cast<size_t>(j) >= row.size()) return Rational(0);
    return row[static_cast<size_t>(j)];
}

RecursionTable recursion_table(const PolyFamily& fam, std::optional<int> expected_band) {
    RecursionTable table;
    const int nmax = fam.spec.nmax;
    for (int n = 0; n + 1 <= nmax; ++n) {
        const auto coeffs = expand_in_family(Poly::x() * fam.members[static_cast<size_t>(n)], fam);
        if (coeffs[static_cast<size_t>(n) + 1] != Rational(1)) {
            throw Error("recursion row " + std::to_string(n) + " is not monic");
        }
        std::vector<Rational> row(static_cast<size_t>(n) + 1, Rational(0));
        for (int j = 0; j <= n; ++j) {
            const Rational& g = coeffs[static_cast<size_t>(n - j)];
            row[static_cast<size_t>(j)] = g;
            if (!g.is_zero()) {
                table.d_effective = std::max(table.d_effective, j);
                if (expected_band && j > *expected_band) {
                    std::ostringstream os;
                    os << "nonzero coefficient " << g.str() << " at family index " << (n - j)
                       << " in row " << n << " is below the band of depth " << *expected_band;
                    throw BandViolation(n, n - j, os.str());
                }
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Rational charlier_recursion_prediction(const ModifierPoly& p, int n, int j) {
    if (j < 1 || j > p.degree()) return Rational(0);
    Rational falling(1);
    for (int i = 0; i < j; ++i) falling *= Rational(n - i);
    return falling * (Rational(j) * p.beta(j) + Rational(j + 1) * p.beta(j + 1));
}

MaroniReport maroni_check(const PolyFamily& fam, int d, const MaroniOptions& opts) {
    if (d < 1) throw InvalidSpec("maroni_check needs d >= 1");
    MaroniReport report;
    report.d = d;
    const int nmax = fam.spec.nmax;
    const int cap = opts.index_cap.value_or(nmax);
    const int diagonal_cap = opts.diagonal_cap.value_or(cap);

    for (int k = 0; k < d; ++k) {
        for (int lo = 0; lo <= cap; ++lo) {
            for (int hi = lo; hi <= cap && lo + hi <= nmax; ++hi) {
                const bool must_vanish = hi > lo * d + k;
                const bool must_not_vanish = hi == lo * d + k && hi <= diagonal_cap;
                if (!must_vanish && !must_not_vanish) continue;
                const Poly product =
                    fam.members[static_cast<size_t>(lo)] * fam.members[static_cast<size_t>(hi)];
                const Rational value = DualFunctional{k}(product, fam);
                if (must_vanish && !value.is_zero()) {
                    std::ostringstream os;
                    os << "u_" << k << "(P_" << hi << " P_" << lo << ") = " << value.str()
                       << " but should vanish (" << hi << " > " << lo << "*" << d << "+" << k
                       << ")";
                    throw OrthogonalityFailed(k, hi, lo, value, os.str());
                }
                if (must_not_vanish && value.is_zero()) {
                    std::ostringstream os;
                    os << "u_" << k << "(P_" << lo << " P_" << hi
                       << ") vanished but must not (diagonal index " << hi << " = " << lo << "*"
                       << d << "+" << k << ")";
                    throw OrthogonalityFailed(k, hi, lo, value, os.str());
                }
                if (must_vanish) ++report.zero_checks;
                if (must_not_vanish) ++report.nonzero_checks;
            }
        }
    }
    return report;
}

namespace {

int claimed_depth(const FamilySpec& spec) {
    // Observed band depth: deg P for the Charlier construction, 2*deg P - 1
    // for the Meixner one.
    return spec.kind == FamilyKind::CharlierAppell ? spec.p.degree() : 2 * spec.p.degree() - 1;
}

}  // namespace

DegeneracyScan degeneracy_scan(const PolyFamily& fam) {
    DegeneracyScan scan;
    if (fam.spec.nmax < claimed_depth(fam.spec) + 1) {
        scan.warning = "nmax " + std::to_string(fam.spec.nmax) +
                       " is too small to reach the deepest band (depth " +
                       std::to_string(claimed_depth(fam.spec)) + "); nothing scanned";
        return scan;
    }
    const RecursionTable table = recursion_table(fam);
    scan.band = table.d_effective;
    for (int n = scan.band; n < static_cast<int>(table.rows.size()); ++n) {
        if (table.gamma(n, scan.band).is_zero()) {
            scan.zeros.emplace_back(n, scan.band);
        }
    }
    return scan;
}

KravchukReport kravchuk_truncation(const ModifierPoly& p, int N, const Rational& c, int nmax) {
    if (N < 1) throw InvalidSpec("truncation index N must be >= 1");
    if (nmax <= N) throw InvalidSpec("nmax must exceed N to observe the truncation");
    const FamilySpec spec = FamilySpec::meixner_type(p, Rational(-N), c, nmax);
    const PolyFamily fam = generate(spec);

    KravchukReport report;
    report.truncation = N;
    report.scan = degeneracy_scan(fam);
    for (const auto& [n, j] : report.scan.zeros) {
        if (n == N) report.truncated_at_expected = true;
    }
    if (report.scan.band >= 1) {
        MaroniOptions opts;
        opts.index_cap = N;
        opts.diagonal_cap = N - 1;
        report.maroni_below = maroni_check(fam, report.scan.band, opts);

        // The diagonal that reaches index N dies with gamma_band(N): find the
        // (n, k) with nd + k == N, if any, and record its value.
        const int d = report.scan.band;
        for (int n = 0; n * d <= N; ++n) {
            const int k = N - n * d;
            if (k < 0 || k >= d) continue;
            if (n + N > nmax) continue;
            const Poly product = fam.members[static_cast<size_t>(n)] *
                                 fam.members[static_cast<size_t>(N)];
            report.boundary_diagonal_vanishes =
                DualFunctional{k}(product, fam).is_zero();
            break;
        }
    }
    return report;
}

}  // namespace vopkit
