#ifndef THUE_COMPLEXHP_HPP
#define THUE_COMPLEXHP_HPP

#include <string>

#include "thue/real.hpp"

namespace thue {

// High-precision complex number over Real.  Principal-branch convention
// throughout: for w = s*e^{i*phi} with s > 0 and -pi < phi <= pi, the
// principal n-th root is s^{1/n} * e^{i*phi/n}, and w^e for real e is
// s^e * e^{i*e*phi}.
struct Complex {
    Real re, im;

    explicit Complex(long prec = Real::kDefaultPrec)
        : re(Real::zero(prec)), im(Real::zero(prec)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Complex of(const Rat& r, long prec) { return {Real::of(r, prec), Real::zero(prec)}; }

    long prec() const { return std::max(re.prec(), im.prec()); }
    bool is_nan() const { return re.is_nan() || im.is_nan(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    Complex operator-() const { return {-re, -im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    Complex conj() const { return {re, -im}; }
    friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
    Real abs2() const { return re * re + im * im; }
    // Principal argument in (-pi, pi]; arg(0) returns 0.
    Real arg() const {
        if (im.is_zero() && re.sign() >= 0) return Real::zero(prec());
        return atan2(im, re);
    }

    // Integer power by repeated squaring (single-valued; no branch issues).
    Complex pow_int(unsigned long e) const {
        long p = prec();
        Complex acc = of(Rat(1), p), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Principal power with real exponent, via the polar form.
    Complex pow_real(const Real& e) const {
        long p = prec();
        if (im.is_zero() && re.sign() > 0) {
            return {pow(re, e), Real::zero(p)};
        }
        Real s = abs(*this);
        if (s.is_zero()) {
            if (e.sign() <= 0)
                throw Error(ErrorCode::InvalidInput, "0 to a non-positive complex power");
            return Complex(p);
        }
        Real mag = pow(s, e);
        Real ang = e * arg();
        return {mag * cos(ang), mag * sin(ang)};
    }
    Complex pow_rat(const Rat& e) const { return pow_real(Real::of(e, prec())); }

    // Principal n-th root: |w|^{1/n} e^{i arg(w)/n}.
    Complex nth_root(long n) const { return pow_rat(Rat(1, n)); }

    // Principal square root.
    Complex sqrt_principal() const { return pow_rat(Rat(1, 2)); }

    std::string str(int digits = 20) const {
        if (im.is_zero()) return re.str(digits);
        return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + abs(im).str(digits) + "i";
    }
};

} // namespace thue

#endif
