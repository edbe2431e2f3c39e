#pragma once

#include <optional>

#include "vopkit/diffop.hpp"

namespace vopkit {

/// Monic Charlier polynomial by the finite hypergeometric sum
///   q_n(x) = (-a)^n sum_{k=0}^{n} C(n,k) (x)_k / (-a)^k,
/// built from binomials and falling factorials only (no operator algebra).
Poly classical_charlier(const Rational& a, int n);

/// Monic Meixner polynomial by the classical three-term recurrence
///   x m_n = m_{n+1} + (n + (n+beta)c)/(1-c) m_n + n(n+beta-1)c/(1-c)^2 m_{n-1}.
Poly classical_meixner(const Rational& beta, const Rational& c, int n);

/// The classical Meixner difference operator c(x+beta)Delta + x Nabla.
DiffOp meixner_operator(const Rational& beta, const Rational& c);

/// Decomposition op = scale * (c (x+beta) Delta + x Nabla), when one exists.
struct MeixnerOperatorForm {
    Rational scale;
    Rational c;
    Rational beta;
};
std::optional<MeixnerOperatorForm> match_meixner_form(const DiffOp& op);

}  // namespace vopkit
