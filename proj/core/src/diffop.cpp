#include "vopkit/diffop.hpp"

#include <ostream>
#include <sstream>

namespace vopkit {

DiffOp DiffOp::term(int shift, Poly coeff) {
    DiffOp r;
    r.insert(shift, std::move(coeff));
    return r;
}

void DiffOp::insert(int shift, Poly coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(shift);
    if (it == terms_.end()) {
        terms_.emplace(shift, std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly DiffOp::coeff(int shift) const {
    auto it = terms_.find(shift);
    return it == terms_.end() ? Poly() : it->second;
}

int DiffOp::min_shift() const {
    if (terms_.empty()) throw Error("shift support of the zero operator");
    return terms_.begin()->first;
}

int DiffOp::max_shift() const {
    if (terms_.empty()) throw Error("shift support of the zero operator");
    return terms_.rbegin()->first;
}

int DiffOp::coeff_degree() const {
    if (terms_.empty()) throw Error("coefficient degree of the zero operator");
    int d = 0;
    for (const auto& [shift, p] : terms_) d = std::max(d, *p.degree());
    return d;
}

DiffOp DiffOp::operator-() const {
    DiffOp r;
    for (const auto& [shift, p] : terms_) r.terms_.emplace(shift, -p);
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    for (const auto& [shift, p] : o.terms_) {
        auto it = terms_.find(shift);
        if (it == terms_.end()) {
            terms_.emplace(shift, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    return *this += -o;
}

DiffOp operator*(const Rational& s, const DiffOp& a) {
    DiffOp r;
    if (s.is_zero()) return r;
    for (const auto& [shift, p] : a.terms_) r.terms_.emplace(shift, s * p);
    return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    return compose(a, b);
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        if (it->first != 0) os << "*D^" << it->first;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffOp& a) {
    return os << a.str();
}

Poly apply(const DiffOp& a, const Poly& f) {
    Poly r;
    for (const auto& [shift, p] : a.terms()) {
        r += p * vopkit::shift(f, shift);
    }
    return r;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
    // D^j p(x) = p(x+j) D^j, so (p_j D^j)(q_k D^k) = p_j * q_k(x+j) D^{j+k}.
    DiffOp r;
    for (const auto& [j, pj] : a.terms()) {
        for (const auto& [k, qk] : b.terms()) {
            r += DiffOp::term(j + k, pj * shift(qk, j));
        }
    }
    return r;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
    return compose(a, b) - compose(b, a);
}

DiffOp ad_power(const DiffOp& p, const DiffOp& a, int j) {
    if (j < 0) throw Error("ad_power requires j >= 0");
    DiffOp r = a;
    for (int i = 0; i < j; ++i) r = commutator(p, r);
    return r;
}

DiffOp op_pow(const DiffOp& a, int m) {
    if (m < 0) throw Error("op_pow requires m >= 0");
    DiffOp r = DiffOp::identity();
    for (int i = 0; i < m; ++i) r = compose(r, a);
    return r;
}

DiffOp op_eval_poly(const Poly& q, const DiffOp& a) {
    // Horner over operator composition.
    DiffOp r;
    if (q.is_zero()) return r;
    for (int k = *q.degree(); k >= 0; --k) {
        r = compose(r, a) + DiffOp::term(0, Poly(q.coeff(k)));
    }
    return r;
}

DiffOp build(OpKind kind) {
    switch (kind) {
        case OpKind::Identity:
            return DiffOp::identity();
        case OpKind::D:
            return DiffOp::term(1, Poly(1));
        case OpKind::Dinv:
            return DiffOp::term(-1, Poly(1));
        case OpKind::Delta:
            return build(OpKind::D) - DiffOp::identity();
        case OpKind::Nabla:
            return build(OpKind::Dinv) - DiffOp::identity();
        case OpKind::MulX:
            return DiffOp::term(0, Poly::x());
        case OpKind::L:
            return compose(build(OpKind::MulX), build(OpKind::Nabla));
        case OpKind::Number:
            return -compose(build(OpKind::MulX), build(OpKind::Nabla));
    }
    throw Error("unknown operator kind");
}

DiffOp build_g(const Rational& beta) {
    return compose(build(OpKind::Delta), build(OpKind::Number) + beta * DiffOp::identity());
}

DiffOp build_r(const Rational& beta) {
    return commutator(build_g(beta), build(OpKind::MulX));
}

std::string op_kind_name(OpKind kind) {
    switch (kind) {
        case OpKind::Identity: return "1";
        case OpKind::D: return "D";
        case OpKind::Dinv: return "D^-1";
        case OpKind::Delta: return "Delta";
        case OpKind::Nabla: return "Nabla";
        case OpKind::MulX: return "x";
        case OpKind::L: return "L";
        case OpKind::Number: return "N";
    }
    return "?";
}

}  // namespace vopkit
