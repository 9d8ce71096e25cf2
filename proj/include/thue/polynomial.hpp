#ifndef THUE_POLYNOMIAL_HPP
#define THUE_POLYNOMIAL_HPP

#include <vector>

#include "thue/quadfield.hpp"
#include "thue/rational.hpp"

namespace thue {

inline bool coeff_is_zero(const Rat& r) { return r == 0; }
inline bool coeff_is_zero(const Int& z) { return z == 0; }
inline bool coeff_is_zero(const QuadraticElement& x) { return x.is_zero(); }

// Dense polynomial sum c[i] x^i over an exact coefficient ring (Rat, Int, or
// QuadraticElement).  The zero polynomial has an empty coefficient vector and
// degree -1.
template <typename T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    // a + b x
    static Poly linear(const T& a, const T& b) { return Poly(std::vector<T>{a, b}); }

    void trim() {
        while (!c.empty() && coeff_is_zero(c.back())) c.pop_back();
    }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const T& coeff(size_t i) const {
        static const T zero{};
        return i < c.size() ? c[i] : zero;
    }
    T leading() const {
        if (c.empty()) throw Error(ErrorCode::Undefined, "leading coefficient of 0");
        return c.back();
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<T> out(std::max(f.c.size(), g.c.size()), T{});
        for (size_t i = 0; i < f.c.size(); ++i) out[i] = out[i] + f.c[i];
        for (size_t i = 0; i < g.c.size(); ++i) out[i] = out[i] + g.c[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }
    Poly operator-() const {
        std::vector<T> out;
        out.reserve(c.size());
        for (const T& v : c) out.push_back(-v);
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly();
        std::vector<T> out(f.c.size() + g.c.size() - 1, T{});
        for (size_t i = 0; i < f.c.size(); ++i)
            for (size_t j = 0; j < g.c.size(); ++j) out[i + j] = out[i + j] + f.c[i] * g.c[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const T& s, const Poly& f) {
        std::vector<T> out;
        out.reserve(f.c.size());
        for (const T& v : f.c) out.push_back(s * v);
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& f, const Poly& g) {
        if (f.c.size() != g.c.size()) return false;
        for (size_t i = 0; i < f.c.size(); ++i)
            if (!coeff_is_zero(f.c[i] - g.c[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<T> out;
        out.reserve(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) out.push_back(Rat(static_cast<long>(i)) * c[i]);
        return Poly(std::move(out));
    }

    // Horner evaluation into any ring P, given an embedding T -> P.
    template <typename P, typename Embed>
    P eval_with(const P& x, Embed embed) const {
        if (c.empty()) return P{};
        P acc = embed(c.back());
        for (size_t i = c.size() - 1; i-- > 0;) acc = acc * x + embed(c[i]);
        return acc;
    }
    T eval(const T& x) const {
        return eval_with(x, [](const T& v) { return v; });
    }

    template <typename U, typename F>
    Poly<U> map(F f) const {
        std::vector<U> out;
        out.reserve(c.size());
        for (const T& v : c) out.push_back(f(v));
        return Poly<U>(std::move(out));
    }

    // f(a + b x): Horner over polynomials; multiplying by a linear factor is
    // linear work, so the whole composition is O(deg^2) coefficient ops.
    Poly compose_linear(const T& a, const T& b) const {
        Poly lin = Poly::linear(a, b);
        Poly acc;
        for (size_t i = c.size(); i-- > 0;) acc = acc * lin + Poly::constant(c[i]);
        return acc;
    }

    std::string str() const {
        if (c.empty()) return "0";
        std::string s;
        for (size_t i = c.size(); i-- > 0;) {
            if (!s.empty()) s += " + ";
            s += "(" + coeff_str(c[i]) + ")";
            if (i == 1) s += "*x";
            else if (i > 1) s += "*x^" + std::to_string(i);
        }
        return s;
    }

private:
    static std::string coeff_str(const Rat& r) { return r.get_str(); }
    static std::string coeff_str(const Int& z) { return z.get_str(); }
    static std::string coeff_str(const QuadraticElement& x) { return x.str(); }
};

// Exact division with remainder over a field-like coefficient ring (the
// divisor's leading coefficient must be invertible).
template <typename T>
std::pair<Poly<T>, Poly<T>> poly_divmod(const Poly<T>& f, const Poly<T>& g) {
    if (g.is_zero()) throw Error(ErrorCode::InvalidInput, "polynomial division by zero");
    Poly<T> r = f;
    if (f.degree() < g.degree()) return {Poly<T>(), r};
    std::vector<T> q(static_cast<size_t>(f.degree() - g.degree()) + 1, T{});
    T lead = g.leading();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - g.degree());
        T t = r.leading() / lead;
        q[shift] = t;
        // r -= t * x^shift * g
        std::vector<T> sub(shift + g.c.size(), T{});
        for (size_t i = 0; i < g.c.size(); ++i) sub[shift + i] = t * g.c[i];
        r = r - Poly<T>(std::move(sub));
    }
    return {Poly<T>(std::move(q)), r};
}

// Multiplicity of `root` as a zero of f (0 if f(root) != 0); exact synthetic
// division, capped by cap to keep pathological inputs cheap.
template <typename T>
long root_multiplicity(Poly<T> f, const T& root, long cap) {
    long mult = 0;
    while (!f.is_zero() && mult < cap) {
        // synthetic division by (x - root): f = (x - root) q + f(root)
        std::vector<T> q(f.c.size() > 1 ? f.c.size() - 1 : 0, T{});
        T rem = f.c.back();
        for (size_t i = f.c.size() - 1; i-- > 0;) {
            if (i < q.size()) q[i] = rem;
            rem = rem * root + f.c[i];
        }
        if (!coeff_is_zero(rem)) break;
        ++mult;
        f = Poly<T>(std::move(q));
    }
    return mult;
}

} // namespace thue

#endif
