#include "thue/hypergeom.hpp"

#include <numeric>

#include "thue/errors.hpp"

namespace thue {

void check_xpoly_params(long m, long n, long r) {
    if (!(0 < m && m < n)) throw Error(ErrorCode::InvalidParameters, "require 0 < m < n");
    if (std::gcd(m, n) != 1) throw Error(ErrorCode::InvalidParameters, "require gcd(m, n) = 1");
    if (r < 0) throw Error(ErrorCode::InvalidParameters, "require r >= 0");
}

Poly<Rat> xpoly(long m, long n, long r) {
    check_xpoly_params(m, n, r);
    std::vector<Rat> c(static_cast<size_t>(r) + 1);
    c[0] = 1;
    for (long i = 0; i < r; ++i) {
        // c_{i+1}/c_i = (r-i)((r-i)n + m) / ((i+1)((i+1)n - m)); the
        // denominator never vanishes because gcd(m,n)=1 and 0 < m < n.
        Rat ratio(Int(r - i) * Int((r - i) * n + m), Int(i + 1) * Int((i + 1) * n - m));
        ratio.canonicalize();
        c[static_cast<size_t>(i) + 1] = c[static_cast<size_t>(i)] * ratio;
    }
    return Poly<Rat>(std::move(c));
}

Poly<Rat> xpoly_shifted(long m, long n, long r, const Int& d) {
    check_xpoly_params(m, n, r);
    if (d < 1) throw Error(ErrorCode::InvalidParameters, "require d >= 1");
    // a_0 = X(1) = r! n^r binom(2r,r) / prod_{k=1..r}(kn - m).
    Int num = factorial(static_cast<unsigned long>(r)) * int_pow(Int(n), static_cast<unsigned long>(r)) *
              binomial(static_cast<unsigned long>(2 * r), static_cast<unsigned long>(r));
    Int den = 1;
    for (long k = 1; k <= r; ++k) den *= Int(k * n - m);
    std::vector<Rat> a(static_cast<size_t>(r) + 1);
    a[0] = Rat(num, den);
    a[0].canonicalize();
    for (long i = 0; i < r; ++i) {
        // a_{i+1}/a_i = -d (r-i)((r-i)n + m) / (n (i+1)(2r-i)).
        Rat ratio(-d * Int(r - i) * Int((r - i) * n + m), Int(n) * Int(i + 1) * Int(2 * r - i));
        ratio.canonicalize();
        a[static_cast<size_t>(i) + 1] = a[static_cast<size_t>(i)] * ratio;
    }
    return Poly<Rat>(std::move(a));
}

Int big_D(long m, long n, long r) {
    Poly<Rat> X = xpoly(m, n, r);
    Int D = 1;
    for (long i = 0; i <= X.degree(); ++i) {
        const Rat& c = X.coeff(static_cast<size_t>(i));
        D = lcm(D, c.get_den());
    }
    return D;
}

std::pair<Int, Int> big_D_and_N(long m, long n, long r, const Int& d) {
    Int D = big_D(m, n, r);
    Poly<Rat> Xs = xpoly_shifted(m, n, r, d);
    // Two routes to the shifted content, asserted equal:
    //  (1) gcd of the lowest-terms numerators of the coefficients of X(1-dx);
    //  (2) integer content of D * X(1-dx).
    // They coincide exactly when the lcm of the shifted denominators is still
    // D; the valuation argument behind the growth certificates needs (1), and
    // (2) is kept as a cheap structural cross-check.
    Int g = 0;
    Int content = 0;
    if (Xs.degree() != r) throw Error(ErrorCode::ConstructionBug, "shifted polynomial lost its degree");
    for (long i = 0; i <= r; ++i) {
        const Rat& c = Xs.coeff(static_cast<size_t>(i));
        g = gcd(g, c.get_num());
        if (!mpz_divisible_p(D.get_mpz_t(), c.get_den().get_mpz_t()))
            throw Error(ErrorCode::ConstructionBug, "shifted coefficient denominator does not divide D");
        content = gcd(content, c.get_num() * (D / c.get_den()));
    }
    g = abs(g);
    content = abs(content);
    if (g == 0) throw Error(ErrorCode::ConstructionBug, "shifted polynomial is zero");
    if (g != content)
        throw Error(ErrorCode::ConstructionBug, "content cross-check failed for the shifted polynomial");
    return {D, g};
}

Int big_N(long m, long n, long r, const Int& d) { return big_D_and_N(m, n, r, d).second; }

PrimePowerProduct mu_n(long n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameters, "mu_n requires n >= 1");
    PrimePowerProduct out;
    for (const auto& [p, e] : factor(Int(n))) {
        (void)e;
        out.multiply_by(p, Rat(Int(1), p - 1));
    }
    return out;
}

PrimePowerProduct cal_N(const Int& d, long n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameters, "cal_N requires n >= 1");
    if (d < 1) throw Error(ErrorCode::InvalidParameters, "cal_N requires d >= 1");
    PrimePowerProduct out;
    for (const auto& [p, e] : factor(Int(n))) {
        Rat cap = Rat(e) + Rat(Int(1), p - 1);
        Rat vd(v_p(d, p));
        out.multiply_by(p, vd < cap ? vd : cap);
    }
    return out;
}

bool cal_N_divides_n(const Int& d, long n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameters, "cal_N_divides_n requires n >= 1");
    if (d < 1) throw Error(ErrorCode::InvalidParameters, "cal_N_divides_n requires d >= 1");
    for (const auto& [p, e] : factor(Int(n))) {
        if (v_p(d, p) > e) return false;
    }
    return true;
}

std::pair<Rat, Rat> gamma_ratios(long m, long n, long r) {
    check_xpoly_params(m, n, r);
    Rat first(1), second(1);
    for (long i = 1; i <= r; ++i) {
        Rat f(Int(i) * n, Int(i) * n - m);
        Rat s(Int(i) * n + m, Int(i) * n);
        f.canonicalize();
        s.canonicalize();
        first *= f;
        second *= s;
    }
    return {first, second};
}

} // namespace thue
