#include "vopkit/poly.hpp"

#include <ostream>
#include <sstream>

namespace vopkit {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Poly Poly::monomial(int k, const Rational& c) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return {};
    Poly r = p;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = *degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0 || !mag.is_one()) os << mag.str();
        if (k > 0) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

Poly shift(const Poly& p, long s) {
    if (s == 0 || p.is_zero()) return p;
    // Horner in (x+s): result = (((c_d)(x+s) + c_{d-1})(x+s) + ...)
    const Poly xs = Poly(std::vector<Rational>{Rational(s), Rational(1)});
    Poly r;
    for (int k = *p.degree(); k >= 0; --k) {
        r = r * xs + Poly(p.coeff(k));
    }
    return r;
}

Rational eval(const Poly& p, const Rational& v) {
    Rational r(0);
    if (p.is_zero()) return r;
    for (int k = *p.degree(); k >= 0; --k) {
        r = r * v + p.coeff(k);
    }
    return r;
}

Poly derivative(const Poly& p) {
    if (p.is_zero() || *p.degree() == 0) return {};
    std::vector<Rational> r(static_cast<size_t>(*p.degree()), Rational(0));
    for (size_t k = 1; k < p.coeffs().size(); ++k) {
        r[k - 1] = Rational(static_cast<long>(k)) * p.coeffs()[k];
    }
    return Poly(std::move(r));
}

Poly falling_factorial(int k) {
    if (k < 0) throw Error("falling_factorial requires k >= 0");
    Poly r(1);
    for (int i = 0; i < k; ++i) {
        r = r * Poly(std::vector<Rational>{Rational(-i), Rational(1)});
    }
    return r;
}

FallingCoeffs::FallingCoeffs(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> FallingCoeffs::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

Rational FallingCoeffs::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

FallingCoeffs to_falling(const Poly& p) {
    // Descending elimination: (x)_k is monic of degree k, so the leading
    // monomial coefficient of the remainder is the next falling coefficient.
    if (p.is_zero()) return FallingCoeffs{};
    std::vector<Rational> out(static_cast<size_t>(*p.degree()) + 1, Rational(0));
    Poly rem = p;
    while (!rem.is_zero()) {
        const int d = *rem.degree();
        const Rational c = rem.leading();
        out[static_cast<size_t>(d)] = c;
        rem -= c * falling_factorial(d);
        if (!rem.is_zero() && *rem.degree() >= d) {
            throw Error("falling-basis elimination failed to reduce degree");
        }
    }
    return FallingCoeffs(std::move(out));
}

Poly from_falling(const FallingCoeffs& c) {
    Poly r;
    for (size_t k = 0; k < c.coeffs().size(); ++k) {
        if (c.coeffs()[k].is_zero()) continue;
        r += c.coeffs()[k] * falling_factorial(static_cast<int>(k));
    }
    return r;
}

}  // namespace vopkit
