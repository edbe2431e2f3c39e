#include "vopkit/families.hpp"

#include <sstream>

namespace vopkit {

std::string family_kind_name(FamilyKind kind) {
    return kind == FamilyKind::CharlierAppell ? "charlier-appell" : "meixner-type";
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "charlier-appell" || name == "charlier") return FamilyKind::CharlierAppell;
    if (name == "meixner-type" || name == "meixner") return FamilyKind::MeixnerType;
    throw InvalidSpec("unknown family kind '" + name + "'");
}

FamilySpec FamilySpec::charlier_appell(ModifierPoly p, int nmax) {
    FamilySpec s{FamilyKind::CharlierAppell, std::move(p), Rational(0), Rational(0), nmax};
    s.validate();
    return s;
}

FamilySpec FamilySpec::meixner_type(ModifierPoly p, Rational beta, Rational c, int nmax) {
    FamilySpec s{FamilyKind::MeixnerType, std::move(p), std::move(beta), std::move(c), nmax};
    s.validate();
    return s;
}

void FamilySpec::validate() const {
    if (nmax < 0) throw InvalidSpec("nmax must be >= 0");
    if (kind == FamilyKind::MeixnerType) {
        if (c.is_zero() || c.is_one()) throw InvalidSpec("meixner-type requires c not in {0, 1}");
    }
}

DiffOp FamilySpec::lowering_op() const {
    return kind == FamilyKind::CharlierAppell ? build(OpKind::Delta) : build_g(beta);
}

DiffOp FamilySpec::exponent_op() const {
    return p.at(lowering_op());
}

Rational FamilySpec::lowering_eigenvalue(int n) const {
    const Rational rn(n);
    return kind == FamilyKind::CharlierAppell ? rn : rn * (rn + beta);
}

PolyFamily generate(const FamilySpec& spec, int max_order) {
    spec.validate();
    PolyFamily fam{spec, {}, {}, {}};
    const DiffOp exponent = spec.exponent_op();
    fam.members.reserve(static_cast<size_t>(spec.nmax) + 1);
    for (int n = 0; n <= spec.nmax; ++n) {
        Poly member = exp_apply(exponent, falling_factorial(n));
        if (member.is_zero() || *member.degree() != n || !member.leading().is_one()) {
            throw Error("generated member " + std::to_string(n) + " is not monic of degree n");
        }
        fam.members.push_back(std::move(member));
    }
    fam.tilde_l = bispectral_operator(spec, max_order);
    fam.eigenvalues = eigencheck(fam);
    return fam;
}

DiffOp bispectral_operator(const FamilySpec& spec, int max_order) {
    spec.validate();
    const DiffOp image = exp_ad(spec.exponent_op(), build(OpKind::L), max_order);
    if (spec.kind == FamilyKind::MeixnerType) {
        return (Rational(1) - spec.c) * image;
    }
    return image;
}

std::vector<Rational> eigencheck(const PolyFamily& fam) {
    std::vector<Rational> lambdas;
    lambdas.reserve(fam.members.size());
    for (size_t n = 0; n < fam.members.size(); ++n) {
        const Poly& member = fam.members[n];
        const Poly image = apply(fam.tilde_l, member);
        // Candidate eigenvalue from the top coefficient, then exact residual.
        Rational lambda(0);
        if (!image.is_zero()) {
            if (*image.degree() > *member.degree()) {
                throw NotEigenfunction(static_cast<int>(n), image,
                                       "operator raised the degree of member " + std::to_string(n));
            }
            lambda = image.coeff(*member.degree()) / member.leading();
        }
        const Poly residual = image - lambda * member;
        if (!residual.is_zero()) {
            std::ostringstream os;
            os << "member " << n << " is not an eigenfunction; residual " << residual.str();
            throw NotEigenfunction(static_cast<int>(n), residual, os.str());
        }
        lambdas.push_back(lambda);
    }
    // Eigenvalues must be exactly linear in n.
    for (size_t n = 0; n < lambdas.size(); ++n) {
        if (lambdas[n] != Rational(static_cast<long>(n)) * (lambdas.size() > 1 ? lambdas[1] : Rational(0))) {
            std::ostringstream os;
            os << "eigenvalue at n=" << n << " (" << lambdas[n].str()
               << ") is not n * lambda_1";
            throw NotEigenfunction(static_cast<int>(n), Poly(), os.str());
        }
    }
    return lambdas;
}

void lowering_check(const PolyFamily& fam) {
    const DiffOp low = fam.spec.lowering_op();
    for (size_t n = 1; n < fam.members.size(); ++n) {
        const Poly lhs = apply(low, fam.members[n]);
        const Poly rhs = fam.spec.lowering_eigenvalue(static_cast<int>(n)) * fam.members[n - 1];
        const Poly residual = lhs - rhs;
        if (!residual.is_zero()) {
            std::ostringstream os;
            os << "lowering identity failed at n=" << n << "; residual " << residual.str();
            throw LoweringFailed(static_cast<int>(n), residual, os.str());
        }
    }
}

}  // namespace vopkit
