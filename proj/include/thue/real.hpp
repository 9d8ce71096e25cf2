#ifndef THUE_REAL_HPP
#define THUE_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "thue/rational.hpp"

namespace thue {

// Value-semantic MPFR wrapper.  Every Real carries its own precision; binary
// operations allocate the result at the larger operand precision and round to
// nearest unless a directed variant is used.  Directed variants exist for the
// handful of certified one-sided computations (table right-hand sides, the mu
// scan, conservative E/Q/kappa/c rounding).
class Real {
public:
    static constexpr long kDefaultPrec = 200;

    explicit Real(long prec = kDefaultPrec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }
    Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, o.prec()); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    static Real of(long x, long prec) { Real r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
    static Real of(double x, long prec) { Real r(prec); mpfr_set_d(r.v_, x, MPFR_RNDN); return r; }
    static Real of(const Int& x, long prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(prec); mpfr_set_z(r.v_, x.get_mpz_t(), rnd); return r;
    }
    static Real of(const Rat& x, long prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(prec); mpfr_set_q(r.v_, x.get_mpq_t(), rnd); return r;
    }
    static Real zero(long prec) { return of(0L, prec); }
    static Real one(long prec) { return of(1L, prec); }
    static Real pi(long prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(prec); mpfr_const_pi(r.v_, rnd); return r;
    }
    static Real nan(long prec) { return Real(prec); }

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Deterministic decimal rendering: same bits -> same string.
    std::string str(int digits = 20) const {
        char buf[512];
        mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
        return std::string(buf);
    }

    // ---- arithmetic, nearest rounding, result at max precision ----------
    friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add, MPFR_RNDN); }
    friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub, MPFR_RNDN); }
    friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul, MPFR_RNDN); }
    friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div, MPFR_RNDN); }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    // ---- directed variants ----------------------------------------------
    static Real add(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin(a, b, mpfr_add, rnd); }
    static Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin(a, b, mpfr_sub, rnd); }
    static Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin(a, b, mpfr_mul, rnd); }
    static Real div(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin(a, b, mpfr_div, rnd); }

    static Real mul_q(const Real& a, const Rat& q, mpfr_rnd_t rnd) {
        Real r(a.prec()); mpfr_mul_q(r.v_, a.v_, q.get_mpq_t(), rnd); return r;
    }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    // Exact comparison against a rational (no rounding of the rational).
    int cmp_rat(const Rat& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }
    int cmp_si(long s) const { return mpfr_cmp_si(v_, s); }

    // ---- functions --------------------------------------------------------
    friend Real abs(const Real& a) { return un(a, mpfr_abs, MPFR_RNDN); }
    friend Real sqrt(const Real& a) { return un(a, mpfr_sqrt, MPFR_RNDN); }
    friend Real exp(const Real& a) { return un(a, mpfr_exp, MPFR_RNDN); }
    friend Real log(const Real& a) { return un(a, mpfr_log, MPFR_RNDN); }
    friend Real sin(const Real& a) { return un(a, mpfr_sin, MPFR_RNDN); }
    friend Real cos(const Real& a) { return un(a, mpfr_cos, MPFR_RNDN); }
    friend Real sinh(const Real& a) { return un(a, mpfr_sinh, MPFR_RNDN); }
    friend Real cosh(const Real& a) { return un(a, mpfr_cosh, MPFR_RNDN); }
    friend Real tanh(const Real& a) { return un(a, mpfr_tanh, MPFR_RNDN); }
    static Real abs(const Real& a, mpfr_rnd_t rnd) { return un(a, mpfr_abs, rnd); }
    static Real sqrt(const Real& a, mpfr_rnd_t rnd) { return un(a, mpfr_sqrt, rnd); }
    static Real exp(const Real& a, mpfr_rnd_t rnd) { return un(a, mpfr_exp, rnd); }
    static Real log(const Real& a, mpfr_rnd_t rnd) { return un(a, mpfr_log, rnd); }

    friend Real atan2(const Real& y, const Real& x) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real hypot(const Real& x, const Real& y) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow(const Real& a, const Real& b) { return bin(a, b, mpfr_pow, MPFR_RNDN); }
    static Real pow(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin(a, b, mpfr_pow, rnd); }
    static Real pow_ui(const Real& a, unsigned long e, mpfr_rnd_t rnd) {
        Real r(a.prec()); mpfr_pow_ui(r.v_, a.v_, e, rnd); return r;
    }
    friend Real round(const Real& a) { Real r(a.prec()); mpfr_round(r.v_, a.v_); return r; }
    friend Real floor(const Real& a) { Real r(a.prec()); mpfr_floor(r.v_, a.v_); return r; }
    friend Real ceil(const Real& a) { Real r(a.prec()); mpfr_ceil(r.v_, a.v_); return r; }

    Int to_int_round() const {
        Int out;
        Real r = round(*this);
        mpfr_get_z(out.get_mpz_t(), r.v_, MPFR_RNDN);
        return out;
    }

    // 2^-e at this value's precision (guard bands, tolerances).
    static Real pow2(long e, long prec) {
        Real r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

private:
    using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real un(const Real& a, UnOp op, mpfr_rnd_t rnd) {
        Real r(a.prec());
        op(r.v_, a.v_, rnd);
        return r;
    }
    static Real bin(const Real& a, const Real& b, BinOp op, mpfr_rnd_t rnd) {
        Real r(std::max(a.prec(), b.prec()));
        op(r.v_, a.v_, b.v_, rnd);
        return r;
    }

    mpfr_t v_;
};

// Guard band for threshold comparisons at a given working precision: values
// within a relative 2^-(prec/2) of the threshold are treated as inconclusive.
inline Real guard_band(long prec) { return Real::pow2(-prec / 2, prec); }

} // namespace thue

#endif
