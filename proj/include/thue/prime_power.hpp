#ifndef THUE_PRIME_POWER_HPP
#define THUE_PRIME_POWER_HPP

#include <map>
#include <optional>
#include <string>

#include "thue/rational.hpp"
#include "thue/real.hpp"

namespace thue {

// A formal product  prod_p p^{e_p}  with rational exponents e_p, kept exact.
// This is the natural house for mu_n = prod_{p|n} p^{1/(p-1)} and
// N_{d,n} = prod_{p|n} p^{min(v_p(d), v_p(n)+1/(p-1))}, whose exponents are
// not integers in general.
class PrimePowerProduct {
public:
    PrimePowerProduct() = default;

    void multiply_by(const Int& p, const Rat& e) {
        if (e == 0) return;
        Rat& slot = exps_[p];
        slot += e;
        if (slot == 0) exps_.erase(p);
    }

    PrimePowerProduct operator*(const PrimePowerProduct& o) const {
        PrimePowerProduct out = *this;
        for (const auto& [p, e] : o.exps_) out.multiply_by(p, e);
        return out;
    }
    PrimePowerProduct operator/(const PrimePowerProduct& o) const {
        PrimePowerProduct out = *this;
        for (const auto& [p, e] : o.exps_) out.multiply_by(p, -e);
        return out;
    }

    const std::map<Int, Rat>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    Rat exponent_of(const Int& p) const {
        auto it = exps_.find(p);
        return it == exps_.end() ? Rat(0) : it->second;
    }

    // Exact integer value when all exponents are non-negative integers.
    std::optional<Int> exact_integer() const {
        Int out = 1;
        for (const auto& [p, e] : exps_) {
            if (!is_integer(e) || e < 0) return std::nullopt;
            out *= int_pow(p, e.get_num().get_ui());
        }
        return out;
    }

    // Directed numeric value.  Monotonicity bookkeeping: the value is
    // exp(sum_p e_p log p); to round the result toward `rnd` it suffices to
    // round each term e_p * log(p) the same way (exp is increasing) and each
    // log(p) toward rnd if e_p > 0, away from rnd if e_p < 0.
    Real value(long prec, mpfr_rnd_t rnd = MPFR_RNDN) const {
        mpfr_rnd_t opp = rnd == MPFR_RNDU ? MPFR_RNDD : (rnd == MPFR_RNDD ? MPFR_RNDU : rnd);
        Real acc = Real::zero(prec);
        for (const auto& [p, e] : exps_) {
            Real lp = Real::log(Real::of(p, prec), e > 0 ? rnd : opp);
            acc = Real::add(acc, Real::mul_q(lp, e, rnd), rnd);
        }
        return Real::exp(acc, rnd);
    }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string out;
        for (const auto& [p, e] : exps_) {
            if (!out.empty()) out += " * ";
            out += p.get_str() + "^(" + e.get_num().get_str() + "/" + e.get_den().get_str() + ")";
        }
        return out;
    }

private:
    std::map<Int, Rat> exps_;
};

} // namespace thue

#endif
