#pragma once

#include <map>
#include <string>

#include "vopkit/poly.hpp"

namespace vopkit {

/// Difference operator in normal form: a finite sum  sum_k p_k(x) D^k  where
/// D is the unit shift (D f)(x) = f(x+1) and negative k are powers of D^{-1}.
///
/// Normal form keeps every polynomial coefficient to the left of its shift
/// and stores no zero coefficients, so operator equality is equality of the
/// term maps.
class DiffOp {
  public:
    DiffOp() = default;  // the zero operator

    static DiffOp zero() { return {}; }
    static DiffOp identity() { return term(0, Poly(1)); }
    static DiffOp term(int shift, Poly coeff);

    const std::map<int, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of D^shift (zero polynomial when absent).
    Poly coeff(int shift) const;
    /// Smallest/largest shift with a nonzero coefficient; requires nonzero op.
    int min_shift() const;
    int max_shift() const;
    /// Largest coefficient degree over all terms; requires nonzero op.
    int coeff_degree() const;

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);

    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(const Rational& s, const DiffOp& a);
    friend DiffOp operator*(const DiffOp& a, const Rational& s) { return s * a; }
    /// Operator composition (apply b first, then a).
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    std::string str() const;

  private:
    void insert(int shift, Poly coeff);
    std::map<int, Poly> terms_;
};

std::ostream& operator<<(std::ostream& os, const DiffOp& a);

/// (A f)(x) = sum_k p_k(x) f(x+k).
Poly apply(const DiffOp& a, const Poly& f);
DiffOp compose(const DiffOp& a, const DiffOp& b);
/// AB - BA in normal form.
DiffOp commutator(const DiffOp& a, const DiffOp& b);
/// Iterated adjoint ad_P^j(A) = [P, [P, ... [P, A]]].
DiffOp ad_power(const DiffOp& p, const DiffOp& a, int j);
DiffOp op_pow(const DiffOp& a, int m);
/// q(A) for a polynomial q in one formal variable.
DiffOp op_eval_poly(const Poly& q, const DiffOp& a);

// Named generators of the operator algebra.
//
//   D        unit shift                     Delta   D - 1  (forward difference)
//   Dinv     inverse shift                  Nabla   D^{-1} - 1 (backward difference)
//   MulX     multiplication by x            L       x * Nabla
//   Number   -x * Nabla; the operator with (x)_n |-> n (x)_n
enum class OpKind { Identity, D, Dinv, Delta, Nabla, MulX, L, Number };

DiffOp build(OpKind kind);
/// G(beta) = Delta o (Number + beta); lowers (x)_n to n(n+beta) (x)_{n-1}.
DiffOp build_g(const Rational& beta);
/// R(beta) = [G(beta), x].
DiffOp build_r(const Rational& beta);

std::string op_kind_name(OpKind kind);

}  // namespace vopkit
