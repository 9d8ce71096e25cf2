#ifndef THUE_QUADRATURE_HPP
#define THUE_QUADRATURE_HPP

#include <functional>

#include "thue/complexhp.hpp"

namespace thue {

// Tanh-sinh (double-exponential) quadrature of f over [-1, 1].
//
// The integrand is handed each abscissa three ways: s itself plus the exactly
// tracked endpoint distances om = 1-s and op = 1+s, because our integrands
// carry ((1-s)(1+s))^r factors whose accuracy near the endpoints would be
// destroyed by forming 1-s from a rounded s.
//
// Levels are doubled until two successive refinements agree within tol (an
// absolute tolerance).  Throws PrecisionInsufficient if the level cap is hit
// before convergence.
Complex tanh_sinh_integrate(
    const std::function<Complex(const Real& s, const Real& om, const Real& op)>& f, long prec,
    const Real& tol);

enum class RemainderPath {
    Segment,  // straight line from 1 to w: real 0 < w != 1, or |1-w| < 1
    UnitArc,  // along the unit circle from 1 to w, |w| = 1, w != 1
};

// The hypergeometric remainder
//   R_{m,n,r}(w) = Gamma(r+1+m/n)/(Gamma(m/n) r!) *
//                  integral_1^w ((1-t)(t-w))^r t^{m/n-r-1} dt
// with the Gamma prefactor equal to the exact rational prod_{j=0..r}(j+m/n)/r!.
//
// Segment path, t = (1+w)/2 + s(w-1)/2 for s in [-1,1]:
//   (1-t)(t-w) = (1-w)^2 (1+s)(1-s)/4 and dt = (w-1)/2 ds, so the integral is
//   (w-1)^{2r+1}/(2*4^r) * integral ((1+s)(1-s))^r t^{m/n-r-1} ds,
//   keeping the catastrophic (1-w) powers in one exact prefactor.
// Arc path, t = e^{i theta}, theta = phi*(1+s)/2 with phi = arg w:
//   (1-t)(t-w) = -4 sin(theta/2) sin((phi-theta)/2) e^{i(theta+phi/2)} and the
//   whole integrand (with dt = i e^{i theta} d theta) collapses to
//   i (-1)^r 4^r e^{i r phi/2} (sin(theta/2) sin((phi-theta)/2))^r e^{i theta m/n},
//   all evaluated in real trigonometric form (the sin product is >= 0 for
//   either sign of phi).  Cross-check: r = 0 recovers (n/m)(w^{m/n}-1) times
//   the prefactor m/n, i.e. w^{m/n}-1.
//
// r = 0 shortcut: R_{m,n,0}(w) = w^{m/n} - 1 (principal branch).
Complex remainder_R(long m, long n, long r, const Complex& w, RemainderPath path, long prec);

} // namespace thue

#endif
