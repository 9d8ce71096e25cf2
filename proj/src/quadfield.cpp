#include "thue/quadfield.hpp"

namespace thue {

Real RadicalScalar::abs_value(long prec, mpfr_rnd_t rnd) const {
    // |q * sqrt(s)| = |q| * sqrt(|s|); all factors nonnegative, so a single
    // rounding direction applied to every step rounds the product that way.
    Rat aq = abs(q);
    Real rq = Real::of(aq, prec, rnd);
    if (s == 1) return rq;
    Real rs = Real::sqrt(Real::of(abs(s), prec, rnd), rnd);
    return Real::mul(rq, rs, rnd);
}

} // namespace thue
