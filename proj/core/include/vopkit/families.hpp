#pragma once

#include <optional>
#include <vector>

#include "vopkit/autom.hpp"

namespace vopkit {

enum class FamilyKind { CharlierAppell, MeixnerType };

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

/// Generating data for one polynomial family.
///
/// CharlierAppell: members are e^{P(Delta)} (x)_n.
/// MeixnerType:    members are e^{P(G(beta))} (x)_n, with the extra scalar c
///                 (c != 0, 1) entering only the bispectral operator.
struct FamilySpec {
    FamilyKind kind;
    ModifierPoly p;
    Rational beta;  // MeixnerType only
    Rational c;     // MeixnerType only
    int nmax = 12;

    static FamilySpec charlier_appell(ModifierPoly p, int nmax);
    static FamilySpec meixner_type(ModifierPoly p, Rational beta, Rational c, int nmax);

    void validate() const;  // throws InvalidSpec
    /// Delta for CharlierAppell, G(beta) for MeixnerType.
    DiffOp lowering_op() const;
    /// P(Delta) or P(G(beta)).
    DiffOp exponent_op() const;
    /// n(x)_{n-1} resp. n(n+beta)(x)_{n-1}: scalar the lowering op produces.
    Rational lowering_eigenvalue(int n) const;
};

/// apply(tilde_l, members[n]) was not an exact multiple of members[n].
struct NotEigenfunction : Error {
    NotEigenfunction(int n_, Poly residual_, std::string what_)
        : Error(std::move(what_)), n(n_), residual(std::move(residual_)) {}
    int n;
    Poly residual;
};

/// The lowering identity failed at index n.
struct LoweringFailed : Error {
    LoweringFailed(int n_, Poly residual_, std::string what_)
        : Error(std::move(what_)), n(n_), residual(std::move(residual_)) {}
    int n;
    Poly residual;
};

struct PolyFamily {
    FamilySpec spec;
    std::vector<Poly> members;          // P_0 .. P_nmax, monic, deg P_n = n
    DiffOp tilde_l;                     // bispectral operator
    std::vector<Rational> eigenvalues;  // apply(tilde_l, P_n) = eigenvalues[n] * P_n
};

/// Builds members, the bispectral operator and its verified eigenvalues.
PolyFamily generate(const FamilySpec& spec, int max_order = kDefaultMaxOrder);

/// CharlierAppell: e^{ad_P(Delta)}(L).  MeixnerType: (1-c) e^{ad_P(G)}(L).
DiffOp bispectral_operator(const FamilySpec& spec, int max_order = kDefaultMaxOrder);

/// Recomputes the eigenvalue list from tilde_l and the members; checks each
/// member is an exact eigenfunction and that lambda_n = n * lambda_1.
std::vector<Rational> eigencheck(const PolyFamily& fam);

/// Verifies lowering_op() P_n = lowering_eigenvalue(n) P_{n-1} for all n.
void lowering_check(const PolyFamily& fam);

}  // namespace vopkit
