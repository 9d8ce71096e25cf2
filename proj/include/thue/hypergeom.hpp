#ifndef THUE_HYPERGEOM_HPP
#define THUE_HYPERGEOM_HPP

#include <utility>

#include "thue/polynomial.hpp"
#include "thue/prime_power.hpp"
#include "thue/rational.hpp"

namespace thue {

// The approximation polynomials and their arithmetic invariants.
//
// xpoly(m,n,r) is the degree-r polynomial with X(0) = 1 whose coefficients
// satisfy
//     c_0 = 1,   c_{i+1}/c_i = (r-i)((r-i)n + m) / ((i+1)((i+1)n - m)),
// the incremental form of the hypergeometric series 2F1(-r, -r-m/n; 1-m/n; x).
// Requires 0 < m < n and gcd(m,n) = 1 (so no denominator (i+1)n - m vanishes).
Poly<Rat> xpoly(long m, long n, long r);

// X_{m,n,r}(1 - d x), computed by direct summation:
//     a_0 = r! n^r binom(2r,r) / ((n-m)(2n-m)...(rn-m)),
//     a_{i+1}/a_i = -d (r-i)((r-i)n + m) / (n (i+1)(2r-i)).
// This is an independent route from composing xpoly with 1 - d x; the two are
// cross-checked in tests rather than collapsed into one implementation.
Poly<Rat> xpoly_shifted(long m, long n, long r, const Int& d);

void check_xpoly_params(long m, long n, long r);

// Homogeneous evaluation X*(z, u) = u^r X(z/u) = sum_i c_i z^i u^{r-i},
// expanded without division so u = 0 is fine (the i = r term survives).
// Works over any ring R with R*R and Rat-scalar action via `embed`.
template <typename R, typename Embed>
R xstar_eval_with(long m, long n, long r, const R& z, const R& u, Embed embed) {
    Poly<Rat> X = xpoly(m, n, r);
    // u^{r-i} descending: precompute ascending powers of u once.
    std::vector<R> upow;
    upow.reserve(static_cast<size_t>(r) + 1);
    upow.push_back(embed(Rat(1)));
    for (long i = 1; i <= r; ++i) upow.push_back(upow.back() * u);
    R acc = embed(Rat(0));
    R zp = embed(Rat(1));
    for (long i = 0; i <= r; ++i) {
        acc = acc + embed(X.coeff(static_cast<size_t>(i))) * zp * upow[static_cast<size_t>(r - i)];
        if (i < r) zp = zp * z;
    }
    return acc;
}

inline QuadraticElement xstar_eval(long m, long n, long r, const QuadraticElement& z,
                                   const QuadraticElement& u) {
    FieldDescriptor f = QuadraticElement::common_field(z, u);
    return xstar_eval_with(m, n, r, z, u, [&](const Rat& c) {
        return QuadraticElement::rational(c).in_field(f);
    });
}
inline Rat xstar_eval(long m, long n, long r, const Rat& z, const Rat& u) {
    return xstar_eval_with(m, n, r, z, u, [](const Rat& c) { return c; });
}

// Smallest positive integer whose product with xpoly(m,n,r) has integer
// coefficients: the lcm of the lowest-terms coefficient denominators.
Int big_D(long m, long n, long r);

// Greatest common divisor of the lowest-terms numerators of the coefficients
// of X_{m,n,r}(1-dx).  A valuation argument shows this equals the integer
// content of big_D * X(1-dx); the implementation computes both and asserts
// they agree.
Int big_N(long m, long n, long r, const Int& d);

// Both invariants of one (m,n,r,d) in a single pass, sharing the polynomial
// constructions; used by the long denominator-certificate scans.
std::pair<Int, Int> big_D_and_N(long m, long n, long r, const Int& d);

// mu_n = prod_{p | n} p^{1/(p-1)}, kept exact as a prime-power product.
PrimePowerProduct mu_n(long n);

// cal_N(d, n) = prod_{p | n} p^{min(v_p(d), v_p(n) + 1/(p-1))}.
PrimePowerProduct cal_N(const Int& d, long n);

// cal_N(d,n) is an integer dividing n exactly when v_p(d) <= v_p(n) for every
// prime p | n (for p | n, the competing exponent v_p(n) + 1/(p-1) is either
// fractional or exceeds v_p(n), so integrality forces the v_p(d) branch).
bool cal_N_divides_n(const Int& d, long n);

// Exact values of the two Gamma-quotient products controlling the polynomial
// and remainder bounds:
//   first  = Gamma(1-m/n) r! / Gamma(r+1-m/n) = prod_{i=1..r} in/(in - m),
//   second = Gamma(r+1+m/n) / (Gamma(1+m/n) r!) = prod_{i=1..r} (in + m)/(in).
// Both are >= 1 and first >= second.
std::pair<Rat, Rat> gamma_ratios(long m, long n, long r);

} // namespace thue

#endif
