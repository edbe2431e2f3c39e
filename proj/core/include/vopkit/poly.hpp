#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vopkit/rational.hpp"

namespace vopkit {

/// Univariate polynomial over Rational in the monomial basis.
///
/// coeffs()[i] is the coefficient of x^i; the stored vector never ends in a
/// zero, so equality is plain vector comparison. The zero polynomial stores
/// an empty vector and reports degree() == nullopt (there is no integer
/// sentinel for "minus infinity" anywhere in the API).
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: implicit, constants appear everywhere
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x() { return monomial(1); }
    static Poly monomial(int k, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    /// Leading coefficient; requires a nonzero polynomial.
    const Rational& leading() const;
    /// Coefficient of x^k (zero beyond the stored range).
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Rendering like "x^2 - 3x + 1" for diagnostics.
    std::string str() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// p(x+s), computed exactly.
Poly shift(const Poly& p, long s);
/// Horner evaluation.
Rational eval(const Poly& p, const Rational& v);
Poly derivative(const Poly& p);

/// The falling factorial (x)_k = x(x-1)...(x-k+1); (x)_0 = 1.
Poly falling_factorial(int k);

/// Coefficients over the falling-factorial basis: coeff(k) multiplies (x)_k.
class FallingCoeffs {
  public:
    FallingCoeffs() = default;
    explicit FallingCoeffs(std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend bool operator==(const FallingCoeffs& a, const FallingCoeffs& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const FallingCoeffs& a, const FallingCoeffs& b) { return !(a == b); }

  private:
    std::vector<Rational> coeffs_;
};

FallingCoeffs to_falling(const Poly& p);
Poly from_falling(const FallingCoeffs& c);

}  // namespace vopkit
