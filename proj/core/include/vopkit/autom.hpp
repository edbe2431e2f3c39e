#pragma once

#include <string>
#include <vector>

#include "vopkit/diffop.hpp"

namespace vopkit {

/// exp_ad did not truncate: ad_P^(max_order+1)(A) is still nonzero, so P is
/// not locally nilpotent on A (or the order guard is too small).
struct NotNilpotent : Error {
    NotNilpotent(int max_order_, std::string what_) : Error(std::move(what_)), max_order(max_order_) {}
    int max_order;
};

/// exp_apply found an iterate whose degree did not drop; the exponent
/// operator has a degree-preserving part (e.g. a free term).
struct NotLowering : Error {
    using Error::Error;
};

inline constexpr int kDefaultMaxOrder = 64;

/// Modifier polynomial P(X) = sum_{j=1}^{d} beta_j X^j with beta_d != 0.
/// The missing constant term is structural: only beta_1.. are stored.
class ModifierPoly {
  public:
    explicit ModifierPoly(std::vector<Rational> betas);

    int degree() const { return static_cast<int>(betas_.size()); }
    /// beta_j for 1 <= j; zero beyond the degree.
    Rational beta(int j) const;
    const std::vector<Rational>& betas() const { return betas_; }

    /// P as a polynomial in the formal variable X (constant term zero).
    Poly as_poly() const;
    Poly derivative() const;
    Poly second_derivative() const;
    /// P(A) for an operator argument.
    DiffOp at(const DiffOp& a) const;

    friend bool operator==(const ModifierPoly& a, const ModifierPoly& b) {
        return a.betas_ == b.betas_;
    }

    std::string str() const;

  private:
    std::vector<Rational> betas_;
};

/// e^{ad_P}(A) = sum_j ad_P^j(A)/j!, summed until the adjoint power
/// vanishes. Throws NotNilpotent when it has not vanished after max_order
/// steps.
DiffOp exp_ad(const DiffOp& p, const DiffOp& a, int max_order = kDefaultMaxOrder);

/// e^{P} f = sum_j P^j f / j!  for an operator P that strictly lowers
/// polynomial degree. Each iterate is checked; a non-dropping degree throws
/// NotLowering. guard < 0 means deg(f)+1.
Poly exp_apply(const DiffOp& p, const Poly& f, int guard = -1);

enum class CharlierTarget { X, L, Delta };
enum class MeixnerTarget { X, L, G };

/// Closed-form images of e^{ad_P(Delta)} on the generators:
///   x     -> x + P'(Delta) D
///   L     -> L - P'(Delta) Delta
///   Delta -> Delta
DiffOp closed_sigma_charlier(const ModifierPoly& p, CharlierTarget target);

/// Closed-form images of e^{ad_P(G)} on the generators, with the correction
/// signs this engine derives from [G, R] = 2G:
///   x -> x + R P'(G) + P''(G) G + P'(G)^2 G
///   L -> L - P'(G) G
///   G -> G
DiffOp closed_sigma_meixner(const ModifierPoly& p, const Rational& beta, MeixnerTarget target);

/// The commonly printed variant of the closed form for x, which negates both
/// correction terms: x + R P'(G) - P''(G) G - P'(G)^2 G. Kept for comparison
/// reporting; it does not match the series for this G ordering.
DiffOp closed_sigma_meixner_x_printed(const ModifierPoly& p, const Rational& beta);

/// Comparison record between the series automorphism and a closed form.
struct AutomorphismReport {
    std::string input;       // generator name
    DiffOp series_image;     // exp_ad result
    DiffOp closed_image;     // closed-form result
    int nilpotency_order;    // smallest j with ad_P^j(input) == 0
    bool match;              // series_image == closed_image
};

AutomorphismReport report_charlier(const ModifierPoly& p, CharlierTarget target,
                                   int max_order = kDefaultMaxOrder);
AutomorphismReport report_meixner(const ModifierPoly& p, const Rational& beta,
                                  MeixnerTarget target, int max_order = kDefaultMaxOrder);

}  // namespace vopkit
