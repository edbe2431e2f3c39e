#include "vopkit/autom.hpp"

#include <sstream>

namespace vopkit {

ModifierPoly::ModifierPoly(std::vector<Rational> betas) : betas_(std::move(betas)) {
    if (betas_.empty()) {
        throw InvalidSpec("modifier polynomial needs degree >= 1");
    }
    if (betas_.back().is_zero()) {
        throw InvalidSpec("modifier polynomial has zero top coefficient");
    }
}

Rational ModifierPoly::beta(int j) const {
    if (j < 1 || j > degree()) return Rational(0);
    return betas_[static_cast<size_t>(j) - 1];
}

Poly ModifierPoly::as_poly() const {
    std::vector<Rational> c(betas_.size() + 1, Rational(0));
    for (size_t i = 0; i < betas_.size(); ++i) c[i + 1] = betas_[i];
    return Poly(std::move(c));
}

Poly ModifierPoly::derivative() const {
    return vopkit::derivative(as_poly());
}

Poly ModifierPoly::second_derivative() const {
    return vopkit::derivative(derivative());
}

DiffOp ModifierPoly::at(const DiffOp& a) const {
    return op_eval_poly(as_poly(), a);
}

std::string ModifierPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 1; j <= degree(); ++j) {
        if (beta(j).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << beta(j).str() << ")X";
        if (j > 1) os << "^" << j;
    }
    return os.str();
}

DiffOp exp_ad(const DiffOp& p, const DiffOp& a, int max_order) {
    if (max_order < 1) throw InvalidSpec("exp_ad needs max_order >= 1");
    DiffOp total = a;
    DiffOp term = a;
    mpz_class fact(1);
    for (int j = 1;; ++j) {
        term = commutator(p, term);  // ad^j
        if (term.is_zero()) break;
        if (j > max_order) {
            throw NotNilpotent(max_order,
                               "adjoint action did not vanish within " +
                                   std::to_string(max_order) + " commutators");
        }
        fact *= j;
        total += Rational(1, fact) * term;
    }
    return total;
}

Poly exp_apply(const DiffOp& p, const Poly& f, int guard) {
    if (f.is_zero()) return f;
    if (guard < 0) guard = *f.degree() + 1;
    Poly total = f;
    Poly term = f;
    mpz_class fact(1);
    for (int j = 1; !term.is_zero(); ++j) {
        if (j > guard) {
            throw NotLowering("exponent series did not terminate within " +
                              std::to_string(guard) + " applications");
        }
        Poly next = apply(p, term);
        if (!next.is_zero() && *next.degree() >= *term.degree()) {
            throw NotLowering("operator failed to lower degree at iterate " + std::to_string(j) +
                              " (degree " + std::to_string(*term.degree()) + " -> " +
                              std::to_string(*next.degree()) + ")");
        }
        term = std::move(next);
        fact *= j;
        total += Rational(1, fact) * term;
    }
    return total;
}

DiffOp closed_sigma_charlier(const ModifierPoly& p, CharlierTarget target) {
    const DiffOp delta = build(OpKind::Delta);
    switch (target) {
        case CharlierTarget::X:
            return build(OpKind::MulX) +
                   compose(op_eval_poly(p.derivative(), delta), build(OpKind::D));
        case CharlierTarget::L:
            return build(OpKind::L) - compose(op_eval_poly(p.derivative(), delta), delta);
        case CharlierTarget::Delta:
            return delta;
    }
    throw Error("unknown Charlier target");
}

DiffOp closed_sigma_meixner(const ModifierPoly& p, const Rational& beta, MeixnerTarget target) {
    const DiffOp g = build_g(beta);
    const DiffOp dp = op_eval_poly(p.derivative(), g);
    switch (target) {
        case MeixnerTarget::X: {
            const DiffOp r = build_r(beta);
            const DiffOp ddp = op_eval_poly(p.second_derivative(), g);
            return build(OpKind::MulX) + compose(r, dp) + compose(ddp, g) +
                   compose(dp, compose(dp, g));
        }
        case MeixnerTarget::L:
            return build(OpKind::L) - compose(dp, g);
        case MeixnerTarget::G:
            return g;
    }
    throw Error("unknown Meixner target");
}

DiffOp closed_sigma_meixner_x_printed(const ModifierPoly& p, const Rational& beta) {
    const DiffOp g = build_g(beta);
    const DiffOp dp = op_eval_poly(p.derivative(), g);
    const DiffOp r = build_r(beta);
    const DiffOp ddp = op_eval_poly(p.second_derivative(), g);
    return build(OpKind::MulX) + compose(r, dp) - compose(ddp, g) - compose(dp, compose(dp, g));
}

namespace {

int nilpotency_order(const DiffOp& p, const DiffOp& a, int max_order) {
    DiffOp term = a;
    int j = 0;
    while (!term.is_zero()) {
        if (j > max_order) {
            throw NotNilpotent(max_order, "adjoint action did not vanish while measuring order");
        }
        term = commutator(p, term);
        ++j;
    }
    return j;
}

}  // namespace

AutomorphismReport report_charlier(const ModifierPoly& p, CharlierTarget target, int max_order) {
    const DiffOp exponent = p.at(build(OpKind::Delta));
    DiffOp base;
    std::string name;
    switch (target) {
        case CharlierTarget::X: base = build(OpKind::MulX); name = "x"; break;
        case CharlierTarget::L: base = build(OpKind::L); name = "L"; break;
        case CharlierTarget::Delta: base = build(OpKind::Delta); name = "Delta"; break;
    }
    AutomorphismReport rep;
    rep.input = name;
    rep.series_image = exp_ad(exponent, base, max_order);
    rep.closed_image = closed_sigma_charlier(p, target);
    rep.nilpotency_order = nilpotency_order(exponent, base, max_order);
    rep.match = rep.series_image == rep.closed_image;
    return rep;
}

AutomorphismReport report_meixner(const ModifierPoly& p, const Rational& beta,
                                  MeixnerTarget target, int max_order) {
    const DiffOp exponent = p.at(build_g(beta));
    DiffOp base;
    std::string name;
    switch (target) {
        case MeixnerTarget::X: base = build(OpKind::MulX); name = "x"; break;
        case MeixnerTarget::L: base = build(OpKind::L); name = "L"; break;
        case MeixnerTarget::G: base = build_g(beta); name = "G"; break;
    }
    AutomorphismReport rep;
    rep.input = name;
    rep.series_image = exp_ad(exponent, base, max_order);
    rep.closed_image = closed_sigma_meixner(p, beta, target);
    rep.nilpotency_order = nilpotency_order(exponent, base, max_order);
    rep.match = rep.series_image == rep.closed_image;
    return rep;
}

}  // namespace vopkit
