#include "thue/quadrature.hpp"

#include <cmath>

#include "thue/errors.hpp"
#include "thue/hypergeom.hpp"

namespace thue {

Complex tanh_sinh_integrate(
    const std::function<Complex(const Real& s, const Real& om, const Real& op)>& f, long prec,
    const Real& tol) {
    const long wp = prec;
    const Real pi_half = Real::mul_q(Real::pi(wp), Rat(1, 2), MPFR_RNDN);
    const Real one = Real::one(wp);

    // Truncation point: the weight decays like exp(-2u) with u = (pi/2)sinh t,
    // so u ~ (pi/4)e^t must exceed the working precision in nats plus margin.
    double tmax = std::log((4.0 / 3.14159265) * (static_cast<double>(wp) * 0.6931 + 40.0)) + 0.5;
    if (tmax < 3.0) tmax = 3.0;

    // One symmetric node pair at abscissa t > 0 (or the single node at t = 0).
    // x = tanh((pi/2) sinh t); om = 1-x and op = 1+x are formed from exp(-2u)
    // style expressions so the endpoint distances keep full relative accuracy.
    auto node_sum = [&](const Real& t, bool origin) -> Complex {
        Real et = exp(t);
        Real iet = one / et;
        Real sh = Real::mul_q(et - iet, Rat(1, 2), MPFR_RNDN);
        Real ch = Real::mul_q(et + iet, Rat(1, 2), MPFR_RNDN);
        Real u = pi_half * sh;
        Real eu = exp(u);
        Real emu = one / eu;
        Real den = eu + emu;
        Real x = (eu - emu) / den;
        Real om = (emu + emu) / den;
        Real op = (eu + eu) / den;
        Real weight = Real::mul_q(pi_half * ch / (den * den), Rat(4), MPFR_RNDN);
        if (origin) return weight * f(x, om, op);
        return weight * (f(x, om, op) + f(-x, op, om));
    };

    const int level_cap = 15;
    Complex sum(wp);
    Complex prev(wp);
    bool have_prev = false;
    for (int level = 0; level <= level_cap; ++level) {
        Real h = Real::pow2(-level, wp);
        long N = static_cast<long>(std::floor(tmax * std::pow(2.0, level)));
        Complex add(wp);
        if (level == 0) {
            add = add + node_sum(Real::zero(wp), true);
            for (long k = 1; k <= N; ++k)
                add = add + node_sum(Real::of(k, wp), false);
            sum = h * add;
        } else {
            for (long k = 1; k <= N; k += 2)
                add = add + node_sum(Real::of(k, wp) * h, false);
            Complex refined = Real::mul_q(Real::one(wp), Rat(1, 2), MPFR_RNDN) * sum + h * add;
            prev = sum;
            have_prev = true;
            sum = refined;
        }
        if (have_prev && level >= 2) {
            Real diff = abs(sum - prev);
            if (cmp(diff, tol) <= 0) return sum;
        }
    }
    throw Error(ErrorCode::PrecisionInsufficient,
                "tanh-sinh level cap reached before reaching the requested tolerance");
}

Complex remainder_R(long m, long n, long r, const Complex& w, RemainderPath path, long prec) {
    check_xpoly_params(m, n, r);
    const long wp = prec + 40;
    const Real one = Real::one(wp);
    const Complex one_c = Complex::of(Rat(1), wp);

    // w = 1: the contour is empty.
    if (w.im.is_zero() && w.re.cmp_si(1) == 0) return Complex(wp);

    if (r == 0) return w.pow_rat(Rat(m, n)) - one_c;

    // Exact Gamma prefactor prod_{j=0..r}(j + m/n) / r!.
    Int pnum = 1;
    for (long j = 0; j <= r; ++j) pnum *= Int(j * n + m);
    Rat pref(pnum, int_pow(Int(n), static_cast<unsigned long>(r) + 1) *
                       factorial(static_cast<unsigned long>(r)));
    pref.canonicalize();

    if (path == RemainderPath::Segment) {
        bool w_real = w.im.is_zero();
        Real dist1 = abs(one_c - w);
        Real tmin(wp);
        if (w_real) {
            if (w.re.sign() <= 0)
                throw Error(ErrorCode::CaseMismatch, "segment path needs w real positive or |1-w| < 1");
            tmin = (w.re.cmp_si(1) < 0) ? w.re : one;
        } else {
            if (cmp(dist1, one) >= 0)
                throw Error(ErrorCode::CaseMismatch, "segment path needs w real positive or |1-w| < 1");
            tmin = one - dist1;  // Re t >= 1 - |1-w| > 0 along the segment
        }
        Real em = Real::of(Rat(m - n * (r + 1), n), wp);  // m/n - r - 1 < 0
        // |t^{em}| <= tmin^{em}; scale the absolute tolerance by it so the
        // relative accuracy of the integral survives large integrands.
        Real mscale = pow(tmin, em);
        Real tol = Real::pow2(-(prec + 10), wp) * (cmp(mscale, one) > 0 ? mscale : one);

        Complex c0 = Real::mul_q(one, Rat(1, 2), MPFR_RNDN) * (one_c + w);
        Complex c1 = Real::mul_q(one, Rat(1, 2), MPFR_RNDN) * (w - one_c);
        auto f = [&](const Real& s, const Real& om, const Real& op) -> Complex {
            Complex t = c0 + s * c1;
            Real g = Real::pow_ui(om * op, static_cast<unsigned long>(r), MPFR_RNDN);
            return g * t.pow_real(em);
        };
        Complex I = tanh_sinh_integrate(f, wp, tol);
        Complex factor = (w - one_c).pow_int(static_cast<unsigned long>(2 * r + 1));
        Rat sc = pref / (Rat(2) * Rat(int_pow(Int(4), static_cast<unsigned long>(r))));
        return Real::of(sc, wp) * (factor * I);
    }

    // Unit-arc path.
    Real wabs = abs(w);
    if (cmp(abs(wabs - one), Real::pow2(-prec / 2, wp)) > 0)
        throw Error(ErrorCode::CaseMismatch, "unit-arc path needs |w| = 1");
    Real phi = w.arg();
    Rat quarter(1, 4);
    Rat mo2n(m, 2 * n);
    mo2n.canonicalize();
    auto f = [&](const Real& s, const Real& om, const Real& op) -> Complex {
        (void)s;
        Real s1 = sin(Real::mul_q(phi * op, quarter, MPFR_RNDN));
        Real s2 = sin(Real::mul_q(phi * om, quarter, MPFR_RNDN));
        Real g = Real::pow_ui(s1 * s2, static_cast<unsigned long>(r), MPFR_RNDN);
        Real ang = Real::mul_q(phi * op, mo2n, MPFR_RNDN);
        return Complex(g * cos(ang), g * sin(ang));
    };
    Real tol = Real::pow2(-(prec + 10), wp);
    Complex I = tanh_sinh_integrate(f, wp, tol);
    // R = pref * i (-1)^r 4^r e^{i r phi / 2} (phi/2) * I.
    Rat ro2(r, 2);
    ro2.canonicalize();
    Real rot = Real::mul_q(phi, ro2, MPFR_RNDN);
    Complex iphase(-sin(rot), cos(rot));  // i * e^{i rot}
    Rat sc = pref * Rat(int_pow(Int(4), static_cast<unsigned long>(r))) / Rat(2);
    if (r % 2 != 0) sc = -sc;
    Real mag = Real::mul_q(phi, sc, MPFR_RNDN);
    return mag * (iphase * I);
}

} // namespace thue
