#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vopkit/families.hpp"

namespace vopkit {

/// Input polynomial does not fit inside the family's generated range.
struct DegreeOverflow : Error {
    using Error::Error;
};

/// A recursion coefficient appeared below the expected band.
struct BandViolation : Error {
    BandViolation(int n_, int index_, std::string what_)
        : Error(std::move(what_)), n(n_), index(index_) {}
    int n;      // recursion row
    int index;  // family index of the offending coefficient (= n - j)
};

/// A Maroni condition failed: u_k(P_m P_n) had the wrong vanishing behavior.
struct OrthogonalityFailed : Error {
    OrthogonalityFailed(int k_, int m_, int n_, Rational value_, std::string what_)
        : Error(std::move(what_)), k(k_), m(m_), n(n_), value(std::move(value_)) {}
    int k, m, n;
    Rational value;
};

/// Exact expansion of f over the family basis: f = sum_m c_m P_m.
/// Valid because members are monic of every degree up to nmax.
std::vector<Rational> expand_in_family(const Poly& f, const PolyFamily& fam);

/// u_k: the coefficient-of-P_k functional over the family basis.
struct DualFunctional {
    int k = 0;
    Rational operator()(const Poly& f, const PolyFamily& fam) const;
};

/// Per-n coefficients of  x P_n = P_{n+1} + sum_{j=0}^{..} gamma_j(n) P_{n-j}.
/// rows[n][j] = gamma_j(n) for 0 <= j <= n; d_effective is the deepest j with
/// a nonzero coefficient in any row.
struct RecursionTable {
    int d_effective = 0;
    std::vector<std::vector<Rational>> rows;

    Rational gamma(int n, int j) const;
};

/// Extracts the full table; verifies the leading coefficient of each row is
/// exactly 1. With expected_band set, any nonzero coefficient deeper than the
/// band throws BandViolation.
RecursionTable recursion_table(const PolyFamily& fam,
                               std::optional<int> expected_band = std::nullopt);

/// Closed-form prediction (n)_j (j beta_j + (j+1) beta_{j+1}) for the depth-j
/// Charlier-type recursion coefficient. Compared against the extracted table;
/// mismatches are reported, never asserted.
Rational charlier_recursion_prediction(const ModifierPoly& p, int n, int j);

struct MaroniOptions {
    /// Restrict both member indices to <= index_cap (used by truncated
    /// families); products must still fit: m + n <= nmax.
    std::optional<int> index_cap;
    /// Require the diagonal values u_k(P_n P_{nd+k}) to be nonzero only for
    /// nd+k <= diagonal_cap (defaults to index_cap). Truncated families have
    /// vanishing diagonals exactly at the truncation boundary, where the
    /// deepest band coefficient dies.
    std::optional<int> diagonal_cap;
};

struct MaroniReport {
    int d = 0;
    long zero_checks = 0;     // pairs verified to vanish
    long nonzero_checks = 0;  // diagonal-type values verified nonzero
};

/// Verifies, with u_k the dual functionals of the family basis and for every
/// k < d over all products P_m P_n of degree <= nmax:
///   u_k(P_m P_n) = 0 whenever max(m,n) > d*min(m,n) + k, and
///   u_k(P_n P_{nd+k}) != 0 whenever both factors are in range.
/// Throws OrthogonalityFailed on the first violation.
MaroniReport maroni_check(const PolyFamily& fam, int d, const MaroniOptions& opts = {});

struct DegeneracyScan {
    int band = 0;                            // d_effective of the scanned table
    std::vector<std::pair<int, int>> zeros;  // (n, band) rows with gamma_band(n) == 0
    std::optional<std::string> warning;
};

/// Lists every vanishing deepest-band coefficient; these are exactly the
/// places where the hypotheses of the vector-orthogonality theorem break.
DegeneracyScan degeneracy_scan(const PolyFamily& fam);

struct KravchukReport {
    int truncation = 0;  // N, with beta = -N
    DegeneracyScan scan;
    /// Zero conditions over indices <= N, diagonals required nonzero below N.
    MaroniReport maroni_below;
    bool truncated_at_expected = false;  // gamma_band(N) == 0 observed
    /// The first diagonal touching index N vanishes along with gamma_band(N).
    bool boundary_diagonal_vanishes = false;
};

/// Builds the Meixner-type family with beta = -N and reports where the
/// deepest recursion coefficient vanishes and that every Maroni condition the
/// truncation leaves intact still holds on indices <= N.
KravchukReport kravchuk_truncation(const ModifierPoly& p, int N, const Rational& c, int nmax);

}  // namespace vopkit
