#include "vopkit/classical.hpp"

namespace vopkit {

Poly classical_charlier(const Rational& a, int n) {
    if (a.is_zero()) throw InvalidSpec("Charlier parameter a must be nonzero");
    if (n < 0) throw InvalidSpec("member index must be >= 0");
    const Rational minus_a = -a;
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        const Rational coef =
            Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)), 1) /
            pow(minus_a, static_cast<unsigned>(k));
        sum += coef * falling_factorial(k);
    }
    return pow(minus_a, static_cast<unsigned>(n)) * sum;
}

Poly classical_meixner(const Rational& beta, const Rational& c, int n) {
    if (c.is_zero() || c.is_one()) throw InvalidSpec("Meixner parameter c must avoid {0, 1}");
    if (n < 0) throw InvalidSpec("member index must be >= 0");
    const Rational one_minus_c = Rational(1) - c;
    Poly prev(1);               // m_0
    if (n == 0) return prev;
    Poly cur = Poly::x() - Poly(beta * c / one_minus_c);  // m_1
    for (int k = 1; k < n; ++k) {
        const Rational rk(k);
        const Rational an = (rk + (rk + beta) * c) / one_minus_c;
        const Rational cn = rk * (rk + beta - 1) * c / (one_minus_c * one_minus_c);
        Poly next = Poly::x() * cur - an * cur - cn * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

DiffOp meixner_operator(const Rational& beta, const Rational& c) {
    const Poly x_plus_beta(std::vector<Rational>{beta, Rational(1)});
    return compose(DiffOp::term(0, c * x_plus_beta), build(OpKind::Delta)) +
           build(OpKind::L);
}

std::optional<MeixnerOperatorForm> match_meixner_form(const DiffOp& op) {
    // s*(c(x+b)Delta + x Nabla) = s*c*(x+b) D + s*x D^{-1} - s*(c(x+b) + x).
    if (op.is_zero()) return std::nullopt;
    if (op.min_shift() < -1 || op.max_shift() > 1) return std::nullopt;

    const Poly down = op.coeff(-1);  // s*x
    if (down.is_zero() || *down.degree() != 1 || !down.coeff(0).is_zero()) return std::nullopt;
    const Rational s = down.coeff(1);

    const Poly up = op.coeff(1);  // s*c*(x+b)
    if (up.is_zero() || *up.degree() != 1) return std::nullopt;
    const Rational sc = up.coeff(1);
    if (sc.is_zero()) return std::nullopt;
    const Rational c = sc / s;
    const Rational b = up.coeff(0) / sc;

    const Poly mid_expect = -(up + down);  // -s*(c(x+b) + x)
    if (op.coeff(0) != mid_expect) return std::nullopt;
    return MeixnerOperatorForm{s, c, b};
}

}  // namespace vopkit
