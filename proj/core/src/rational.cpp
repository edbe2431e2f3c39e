#include "vopkit/rational.hpp"

#include <cctype>
#include <ostream>

namespace vopkit {

namespace {

void require_nonzero_den(const mpq_class& v, const std::string& context) {
    if (sgn(mpq_class(v.get_den())) == 0) {
        throw ParseError("zero denominator in rational " + context);
    }
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    require_nonzero_den(v_, "(" + std::to_string(num) + "/" + std::to_string(den) + ")");
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : v_(std::move(num), std::move(den)) {
    require_nonzero_den(v_, "(bignum)");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    require_nonzero_den(v_, "(mpq)");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    // Strict shape: -?digits(/-?digits)?  with a nonzero denominator.
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        }
        return true;
    };
    const auto slash = s.find('/');
    const std::string_view num_part = s.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_int(num_part) || !is_int(den_part)) {
        throw ParseError("malformed rational '" + std::string(s) + "'");
    }
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), std::string(s).c_str(), 10) != 0) {
        throw ParseError("malformed rational '" + std::string(s) + "'");
    }
    if (sgn(mpq_class(v.get_den())) == 0) {
        throw ParseError("zero denominator in rational '" + std::string(s) + "'");
    }
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow(const Rational& base, unsigned e) {
    Rational acc(1);
    Rational b = base;
    for (unsigned k = e; k > 0; k >>= 1) {
        if (k & 1u) acc *= b;
        if (k > 1) b *= b;
    }
    return acc;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace vopkit
