#pragma once

#include <random>
#include <vector>

#include "vopkit/autom.hpp"

// Deterministic value generators for property-style tests. Every suite seeds
// its own std::mt19937_64, so runs are reproducible.
namespace vopkit::testgen {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 5, long max_den = 5) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long max_num = 5,
                                        long max_den = 5) {
    for (;;) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    const int d = deg(rng);
    std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
    for (auto& c : coeffs) c = random_rational(rng);
    coeffs.back() = random_nonzero_rational(rng);
    return Poly(std::move(coeffs));
}

/// Operator with shift support inside [-max_shift, max_shift] and coefficient
/// degree <= max_deg; at least one term.
inline DiffOp random_op(std::mt19937_64& rng, int max_shift, int max_deg) {
    std::uniform_int_distribution<int> shift(-max_shift, max_shift);
    std::uniform_int_distribution<int> nterms(1, 3);
    DiffOp op;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        op += DiffOp::term(shift(rng), random_poly(rng, max_deg));
    }
    if (op.is_zero()) op = DiffOp::identity();
    return op;
}

inline ModifierPoly random_modifier(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    const int d = deg(rng);
    std::vector<Rational> betas(static_cast<size_t>(d));
    for (auto& b : betas) b = random_rational(rng);
    betas.back() = random_nonzero_rational(rng);
    return ModifierPoly(std::move(betas));
}

inline const std::vector<Rational>& beta_sample() {
    static const std::vector<Rational> betas = {Rational(1, 2), Rational(-1, 2), Rational(2),
                                                Rational(-2), Rational(3)};
    return betas;
}

}  // namespace vopkit::testgen
