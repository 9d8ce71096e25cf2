#ifndef THUE_BOUNDS_HPP
#define THUE_BOUNDS_HPP

#include <string>
#include <vector>

#include "thue/certtable.hpp"
#include "thue/complexhp.hpp"
#include "thue/rational.hpp"

namespace thue {

// Scan result for the denominator-growth inequality
//   max(1, G1(r), G2(r)) * D_{m,n,r}/N_{d,n,r} < C * (D_n / calN(d,n))^r
// over 0 <= r <= r_checked and d in d_set, where G1/G2 are the exact
// Gamma-quotient products and D_n = exp(logD).  LHS exact rational; RHS
// evaluated with round-down so a pass is rigorous.
struct DenominatorCertificate {
    long n = 0;
    long m = 1;
    Rat C;
    Rat logD;
    long r_checked = -1;
    std::vector<Int> d_set;
    bool verified = false;
    long failed_r = -1;  // set when !verified
    Int failed_d = 0;

    std::string status_str() const;
    std::string to_text() const;  // line-oriented serialization
};

DenominatorCertificate verify_denominator_inequality(long n, long m, const Rat& C, const Rat& logD,
                                                     const std::vector<Int>& d_set, long r_max);

// {1} plus p^{v_p(n)+1} for each prime p | n: the d values stressing both the
// trivial and the fractional-exponent branches of calN(d,n).
std::vector<Int> default_d_set(long n);

enum class BoundCase {
    ARealPair,  // u, z distinct positive reals
    ACircle,    // |u| = |z| != 0 (remainder check additionally wants z/u != -1)
    BDisk,      // |1-z/u| < 1 (poly check: also |1-u/z| < 1)
};

struct BoundCheck {
    Real lhs, lhs2, rhs;  // lhs2 only used by the polynomial check (the swapped arguments)
    bool pass = false;
};

// Remainder bound: |u^r R_{m,n,r}(z/u)| against
//   case A:  2.38 |1-w^{m/n}| * G2 * min(|sqrt u - sqrt z|, |sqrt u + sqrt z|)^{2r}
//   case B:  |w^{m/n}-1| * G2 * (|z-u|^2 / (4(|u|-|z-u|)))^r
// where G2 is the exact Gamma product Gamma(r+1+m/n)/(Gamma(1+m/n) r!).
// The left side comes from quadrature; pass = (lhs <= rhs + guard band).
BoundCheck remainder_bound_check(long m, long n, long r, const Complex& u, const Complex& z,
                                 BoundCase bc, long prec);

// Polynomial bound: |X*(z,u)| and |X*(u,z)| against
//   case A:  2 * G1 * max(|sqrt u - sqrt z|, |sqrt u + sqrt z|)^{2r}
//   case B:  2 * G1 * (2(|u| + |z|))^r
// with G1 = Gamma(1-m/n) r! / Gamma(r+1-m/n) exact.
BoundCheck poly_bound_check(long m, long n, long r, const Complex& u, const Complex& z,
                            BoundCase bc, long prec);

// Scan mu_n < 1.94 log n on [3, n_max] and mu_n < 1.18 log n on (420, n_max],
// via a smallest-prime-factor sieve.  Returns violations of the first bound in
// its range and of the second in its range; also reports the n <= 2310 values
// violating the 1.18 bound (the classical exception list).
struct MuScanResult {
    std::vector<long> violations_194;       // in [3, n_max]
    std::vector<long> violations_118;      // in (420, n_max]
    std::vector<long> exceptions_118_low;  // n in [3, min(n_max, 2310)] with mu_n >= 1.18 log n
};
MuScanResult mu_bound_scan(long n_max);

} // namespace thue

#endif
