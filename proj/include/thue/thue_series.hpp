#ifndef THUE_THUE_SERIES_HPP
#define THUE_THUE_SERIES_HPP

#include <optional>
#include <vector>

#include "thue/complexhp.hpp"
#include "thue/polynomial.hpp"
#include "thue/quadfield.hpp"

namespace thue {

// Form classification of F(x) = gamma1 (x-beta1)^n + gamma2 (x-beta2)^n over
// the ground field K:
//   A: some gamma_i = 0 — diophantinely trivial, rejected by the pipelines.
//   B: beta1, beta2, gamma1, gamma2 all in K.
//   C: beta2, gamma2 are the quadratic conjugates of beta1, gamma1 over K.
//   Invalid: anything else.
enum class PolyFormCase { A, B, C, Invalid };

PolyFormCase classify_poly_form(const QuadraticElement& beta1, const QuadraticElement& beta2,
                                const QuadraticElement& gamma1, const QuadraticElement& gamma2,
                                const FieldDescriptor& K);

// One problem instance: the quartic data of F plus the evaluation point.
// `ambient` is the field the betas/gammas live in; `K` is the ground field of
// the final measure statement (equal to ambient in case B, index 2 under it
// in case C).  x always lies in K.
struct ThueSetup {
    long n = 3;
    FieldDescriptor K;
    QuadraticElement beta1, beta2, gamma1, gamma2;
    QuadraticElement x;

    FieldDescriptor ambient() const;
    PolyFormCase form_case() const { return classify_poly_form(beta1, beta2, gamma1, gamma2, K); }
    void validate() const;  // betas distinct & integral, gammas nonzero, n >= 2, x integral in K

    QuadraticElement U() const;  // -gamma2 (x-beta2)^n
    QuadraticElement Z() const;  //  gamma1 (x-beta1)^n
    QuadraticElement W() const;  // Z/U

    Poly<QuadraticElement> F_poly() const;  // gamma1 (X-beta1)^n + gamma2 (X-beta2)^n
    Poly<QuadraticElement> G_poly() const;  // (X-beta1)(X-beta2)
};

// Exact per-setup constants of the three-term recurrence machinery, in the
// monic-G normalization: thue_h = (n^2-1)(beta1-beta2)^2/4, lambda = thue_h/(n^2-1),
// and Y(x) = n(beta1-beta2)(gamma1(x-beta1)^n - gamma2(x-beta2)^n) — i.e. the
// generic 2GF' - nG'F with the square root of lambda fixed as (beta1-beta2)/2.
struct ThueAuxiliaries {
    QuadraticElement thue_h, lambda, sqrt_lambda;
    Poly<QuadraticElement> F, G, Y;
};
ThueAuxiliaries thue_auxiliaries(const ThueSetup& s);

// Residual of the defining differential equation:
//   sum_{i=0}^{m} (-1)^i binom(n-m+i, i) G^{(i)} F^{(m-i)},  m = deg G.
// Zero exactly when F is a combination sum gamma_j (x-beta_j)^n over the
// roots beta_j of the monic squarefree G.
Poly<QuadraticElement> diff_eqn_residual(const Poly<QuadraticElement>& G,
                                         const Poly<QuadraticElement>& F, long n);

// Closed form of the approximation pair:
//   Q_r = (x-beta2) X*(Z(x),U(x)) - (x-beta1) X*(U(x),Z(x)),
//   P_r = beta1 (x-beta2) X*(Z(x),U(x)) - beta2 (x-beta1) X*(U(x),Z(x)),
// expanded as exact polynomials in x (U, Z substituted as polynomials).
std::pair<Poly<QuadraticElement>, Poly<QuadraticElement>> thue_pq_closed(const ThueSetup& s,
                                                                         long r);

// The primed recurrence sequences (P'_r, Q'_r), r = 0..r_max, from the
// original three-term recurrence
//   lambda (n(r+1)-1) X'_{r+1} = (r+1/2) Y X'_r - (nr+1) F^2 X'_{r-1}
// seeded by Q'_0 = 2h/3, Q'_1 = (2(n+1)/3)(GF' - ((n-1)/2) G'F), P'_0 = 2hx/3,
// P'_1 = x Q'_1 - 2(n+1)GF/3.  Related to the closed form by
//   (P_r, Q_r) = 6/((n^2-1)(beta1-beta2)) * sqrt_lambda^r * (P'_r, Q'_r),
// which tests verify exactly; this route exists purely as an independent
// derivation of the same objects.
std::vector<std::pair<Poly<QuadraticElement>, Poly<QuadraticElement>>> thue_pq_recurrence(
    const ThueSetup& s, long r_max);

// S_r = alpha Q_r - P_r as an exact polynomial, for alpha an exact root of F
// in the ambient field (checked: F(alpha) = 0, else NotARoot).  Divisible by
// (x-alpha)^{2r+1}.
Poly<QuadraticElement> s_r_poly(const ThueSetup& s, long r, const QuadraticElement& alpha);

// alpha = (beta1 zeta - beta2)/(zeta - 1) for zeta the k-th n-th root of
// -gamma1/gamma2 (k = 0 names the principal root); throws ExcludedBranch when
// zeta = 1 (only possible if gamma1 = -gamma2).
Complex root_from_branch(const ThueSetup& s, long k, long prec);

// The same root exactly, when -gamma1/gamma2 is the n-th power of a rational
// number (the only exact case the library claims); nullopt otherwise.
std::optional<QuadraticElement> exact_root(const ThueSetup& s);

// Real-root census for ground field Q with quadratic beta1 = a + b sqrt(t):
//   t < 0: all n roots of F are real.
//   t > 0, rho = -gamma1/gamma2 > 0: roots a + b sqrt(t) (omega+1)/(omega-1)
//     with omega the positive real n-th root of rho, plus for n even the
//     companion a + t b^2/(alpha1 - a); n odd: just the first.
//   t > 0, rho < 0: none for n even; one (omega the negative real root) for
//     n odd.
// Inputs outside these cases throw Unclassified.
struct RealRootReport {
    long count = 0;
    std::vector<Real> roots;
};
RealRootReport classify_real_roots(const ThueSetup& s, long prec);

// A(x) = (beta1 (x-beta2) W^{1/n} - beta2 (x-beta1)) /
//        ((x-beta2) W^{1/n} - (x-beta1)),  principal branch of W^{1/n}.
// Requires W(x) neither zero nor a negative real (UnsupportedBranch).
Complex script_A(const ThueSetup& s, long prec);

// Exact test P_{r+1}(x)Q_r(x) != P_r(x)Q_{r+1}(x) at the setup's x; requires
// (x-beta1)(x-beta2)F(x) != 0 there (DegeneratePoint).
bool distinctness_check(const ThueSetup& s, long r);

} // namespace thue

#endif
