#ifndef THUE_RATIONAL_HPP
#define THUE_RATIONAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "thue/errors.hpp"

namespace thue {

using Int = mpz_class;
using Rat = mpq_class;

// ---- elementary integer utilities --------------------------------------

inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat out;
        mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        out.canonicalize();
        return out;
    }
    if (base == 0) throw Error(ErrorCode::InvalidInput, "rat_pow: 0 to a negative power");
    return rat_pow(Rat(base.get_den(), base.get_num()), -e);
}

inline Int factorial(unsigned long r) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), r);
    return out;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline size_t bit_length(const Int& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

// Exact p-adic valuation of a non-zero integer.
inline long v_p(const Int& x, const Int& p) {
    if (x == 0) throw Error(ErrorCode::ValuationUndefined, "v_p(0) is undefined");
    if (p < 2) throw Error(ErrorCode::InvalidInput, "v_p: p must be >= 2");
    Int q;
    return static_cast<long>(mpz_remove(q.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// v_p extended to non-zero rationals: v_p(num) - v_p(den).
inline long v_p(const Rat& x, const Int& p) {
    if (x == 0) throw Error(ErrorCode::ValuationUndefined, "v_p(0) is undefined");
    return v_p(Int(x.get_num()), p) - v_p(Int(x.get_den()), p);
}

// Legendre's formula: v_p(r!).
inline long v_p_factorial(unsigned long r, const Int& p) {
    long total = 0;
    Int pk = p;
    while (pk <= static_cast<long>(r)) {
        total += static_cast<long>(Int(r / pk).get_ui());
        pk *= p;
    }
    return total;
}

// ---- factorization ------------------------------------------------------
//
// Trial division up to 10^5, then recursive Pollard-Brent rho with
// Miller-Rabin primality.  Inputs in this project are either small or made
// of moderate prime factors (traces/norms of constructed elements), so this
// is entirely adequate.

namespace detail {

inline Int pollard_brent(const Int& n, unsigned long seed) {
    // Brent's cycle variant of Pollard rho; n must be composite and odd.
    Int y = seed % n, c = (seed * 2654435761UL + 1) % n, m = 128;
    if (c == 0) c = 1;
    Int g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int lim = std::min(m, Int(r - k));
            for (Int i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

inline void factor_rec(Int n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        primes.push_back(n);
        return;
    }
    // perfect powers first: cheap and guarantees progress on p^k
    if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
        for (unsigned long k = 2; k <= bit_length(n); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                for (unsigned long i = 0; i < k; ++i) factor_rec(root, primes);
                return;
            }
        }
    }
    Int d = n;
    for (unsigned long seed = 2; d == n; ++seed) d = pollard_brent(n, seed);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

} // namespace detail

// Factor |n| into (prime, exponent) pairs, primes ascending.  n must be non-zero.
inline std::vector<std::pair<Int, long>> factor(const Int& n_in) {
    if (n_in == 0) throw Error(ErrorCode::InvalidInput, "factor(0)");
    Int n = abs(n_in);
    std::vector<std::pair<Int, long>> out;
    if (n == 1) return out;
    for (unsigned long p = 2; p < 100000 && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p == 0) {
            long e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(Int(p), e);
        }
    }
    if (n > 1) {
        std::vector<Int> primes;
        detail::factor_rec(n, primes);
        std::sort(primes.begin(), primes.end());
        for (size_t i = 0; i < primes.size();) {
            size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            out.emplace_back(primes[i], static_cast<long>(j - i));
            i = j;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Squarefree kernel, preserving sign: core(n) = sign(n) * prod of primes with
// odd exponent in |n|.  core(0) is undefined.
inline Int core(const Int& n) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "core(0)");
    Int out = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factor(n))
        if (e % 2 != 0) out *= p;
    return out;
}

inline bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    return abs(core(n)) == abs(n);
}

// Largest k with k^2 | n (so n = core(n) * k^2 up to sign).
inline Int square_part(const Int& n) {
    Int out = 1;
    for (const auto& [p, e] : factor(n))
        if (e >= 2) out *= int_pow(p, static_cast<unsigned long>(e / 2));
    return out;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

} // namespace thue

#endif
