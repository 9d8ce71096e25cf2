#ifndef THUE_QUADFIELD_HPP
#define THUE_QUADFIELD_HPP

#include <optional>
#include <string>

#include "thue/complexhp.hpp"
#include "thue/rational.hpp"

namespace thue {

enum class FieldKind { Rationals, RealQuadratic, ImaginaryQuadratic };

// Q or Q(sqrt(t)) with t squarefree, t != 0, 1.  Elements are always written
// on the basis {1, sqrt(t)} with rational coordinates; half-integer rings are
// reached through rational coordinates like 3/2 + (1/2)sqrt(5), never through
// a separate basis.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    Int t = 1; // radicand; 1 for the rationals

    static FieldDescriptor rationals() { return {}; }
    static FieldDescriptor quadratic(const Int& t) {
        if (t == 0 || t == 1 || !is_squarefree(t))
            throw Error(ErrorCode::InvalidInput,
                        "quadratic field radicand must be squarefree and not 0 or 1");
        FieldDescriptor f;
        f.kind = t < 0 ? FieldKind::ImaginaryQuadratic : FieldKind::RealQuadratic;
        f.t = t;
        return f;
    }

    bool is_rationals() const { return kind == FieldKind::Rationals; }
    bool is_imaginary() const { return kind == FieldKind::ImaginaryQuadratic; }
    bool operator==(const FieldDescriptor& o) const { return kind == o.kind && t == o.t; }
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    std::string str() const {
        if (is_rationals()) return "Q";
        return "Q(sqrt(" + t.get_str() + "))";
    }
};

// a + b*sqrt(t).  Rational numbers embed with b = 0 and promote into any
// quadratic field on contact, so mixed arithmetic "just works" while genuinely
// distinct quadratic fields stay incompatible.
struct QuadraticElement {
    FieldDescriptor field;
    Rat a, b;

    QuadraticElement() : a(0), b(0) {}
    explicit QuadraticElement(const Rat& r) : a(r), b(0) {}
    QuadraticElement(FieldDescriptor f, Rat a_, Rat b_)
        : field(std::move(f)), a(std::move(a_)), b(std::move(b_)) {
        if (field.is_rationals() && b != 0)
            throw Error(ErrorCode::InvalidInput, "rational element with sqrt coordinate");
    }
    static QuadraticElement rational(const Rat& r) { return QuadraticElement(r); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational_value() const { return b == 0; }

    // Promote the pair (x, y) to a common field; throws on a genuine mismatch.
    static FieldDescriptor common_field(const QuadraticElement& x, const QuadraticElement& y) {
        if (x.field == y.field) return x.field;
        if (x.field.is_rationals() || x.b == 0) return y.field;
        if (y.field.is_rationals() || y.b == 0) return x.field;
        throw Error(ErrorCode::InvalidInput,
                    "elements of different quadratic fields: " + x.field.str() + " vs " + y.field.str());
    }
    QuadraticElement in_field(const FieldDescriptor& f) const {
        if (field == f) return *this;
        if (b != 0) throw Error(ErrorCode::InvalidInput, "cannot move irrational element between fields");
        return {f, a, 0};
    }

    friend QuadraticElement operator+(const QuadraticElement& x, const QuadraticElement& y) {
        FieldDescriptor f = common_field(x, y);
        return {f, x.a + y.a, x.b + y.b};
    }
    friend QuadraticElement operator-(const QuadraticElement& x, const QuadraticElement& y) {
        FieldDescriptor f = common_field(x, y);
        return {f, x.a - y.a, x.b - y.b};
    }
    QuadraticElement operator-() const { return {field, -a, -b}; }
    friend QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y) {
        FieldDescriptor f = common_field(x, y);
        Rat t(f.t);
        return {f, x.a * y.a + x.b * y.b * t, x.a * y.b + x.b * y.a};
    }
    friend QuadraticElement operator*(const Rat& s, const QuadraticElement& y) {
        return {y.field, s * y.a, s * y.b};
    }
    friend QuadraticElement operator/(const QuadraticElement& x, const QuadraticElement& y) {
        if (y.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero element");
        FieldDescriptor f = common_field(x, y);
        // multiply by the conjugate: 1/(a+b sqrt t) = (a - b sqrt t)/(a^2 - t b^2)
        Rat nrm = y.a * y.a - Rat(f.t) * y.b * y.b;
        QuadraticElement num = x * QuadraticElement{f, y.a, -y.b};
        return {f, num.a / nrm, num.b / nrm};
    }
    friend bool operator==(const QuadraticElement& x, const QuadraticElement& y) {
        if (x.a != y.a || x.b != y.b) return false;
        if (x.b != 0) common_field(x, y); // must be compatible to be equal
        return true;
    }
    friend bool operator!=(const QuadraticElement& x, const QuadraticElement& y) { return !(x == y); }

    QuadraticElement conj() const { return {field, a, -b}; }
    Rat trace() const { return 2 * a; }
    Rat norm() const { return a * a - Rat(field.t) * b * b; }

    QuadraticElement pow_int(unsigned long e) const {
        QuadraticElement acc = rational(1).in_field(field), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Exact sign of the real number a + b*sqrt(t) under the embedding
    // sqrt(t) > 0 (real fields and rationals only).
    int sign_real() const {
        if (field.is_imaginary())
            throw Error(ErrorCode::InvalidInput, "sign_real on an imaginary-field element");
        if (b == 0) return sgn(a);
        if (a == 0) return sgn(b);
        if (sgn(a) == sgn(b)) return sgn(a);
        // opposite signs: |a| vs |b| sqrt(t) decides, i.e. a^2 vs t b^2
        int c = cmp(a * a, Rat(field.t) * b * b);
        return c == 0 ? 0 : (c > 0 ? sgn(a) : sgn(b));
    }

    Complex to_complex(long prec) const {
        Real ra = Real::of(a, prec);
        if (b == 0) return {ra, Real::zero(prec)};
        Real sq = sqrt(Real::of(abs(Int(field.t)), prec));
        Real bs = Real::of(b, prec) * sq;
        if (field.t < 0) return {ra, bs};
        return {ra + bs, Real::zero(prec)};
    }

    std::string str() const {
        if (b == 0) return a.get_str();
        return a.get_str() + " + " + b.get_str() + "*sqrt(" + field.t.get_str() + ")";
    }

private:
    static int sgn(const Rat& r) { return sgn_int(r.get_num()); }
    static int sgn_int(const Int& z) { return z < 0 ? -1 : (z > 0 ? 1 : 0); }
};

// x is an algebraic integer iff its minimal polynomial is monic integral:
// for rational x that means x in Z; for quadratic x it means
// trace(x) = 2a in Z and norm(x) = a^2 - t b^2 in Z.
inline bool is_algebraic_integer(const QuadraticElement& x) {
    if (x.b == 0) return is_integer(x.a);
    return is_integer(x.trace()) && is_integer(x.norm());
}

// Largest positive rational integer dividing x in the ring of integers:
// the biggest d such that x/d is still an algebraic integer.
//   rational_content_divisor(6) = 6
//   rational_content_divisor(3 + 3 sqrt(-1)) = 3
//   rational_content_divisor((3 + 3 sqrt(5))/2) = 3     ((1+sqrt 5)/2 is integral)
// x/d is integral iff trace(x)/d and norm(x)/d^2 are both rational integers,
// so v_p(d) <= min(v_p(trace), floor(v_p(norm)/2)) for every prime p, and the
// largest valid d is the product of those prime powers.
inline Int rational_content_divisor(const QuadraticElement& x) {
    if (x.is_zero()) throw Error(ErrorCode::Undefined, "content divisor of 0");
    if (!is_algebraic_integer(x))
        throw Error(ErrorCode::InvalidInput, "content divisor of a non-integral element");
    if (x.b == 0) return abs(Int(x.a.get_num()));
    Int T(x.trace().get_num()), N(x.norm().get_num());
    // N != 0: a^2 = t b^2 with t squarefree != 1 forces a = b = 0.
    Int d = 1;
    if (T == 0) {
        for (const auto& [p, e] : factor(N))
            if (e >= 2) d *= int_pow(p, static_cast<unsigned long>(e / 2));
        return d;
    }
    Int g = gcd(T, N);
    for (const auto& [p, e] : factor(g)) {
        long cap = std::min(v_p(T, p), v_p(N, p) / 2);
        if (cap > 0) d *= int_pow(p, static_cast<unsigned long>(cap));
    }
    return d;
}

// The same divisor extracted through a square: given y^2 (an element of a
// quadratic field or Q), the largest d with y/d an algebraic integer.  Sound
// because y is integral iff y^2 is (y satisfies the monic X^2 - y^2 over the
// integral y^2), and y/d is integral iff trace(y^2)/d^2 and norm(y^2)/d^4 are
// rational integers.
inline Int rational_content_divisor_from_square(const QuadraticElement& y2) {
    if (y2.is_zero()) throw Error(ErrorCode::Undefined, "content divisor of 0");
    if (!is_algebraic_integer(y2))
        throw Error(ErrorCode::InvalidInput, "square of element is not integral");
    Int d = 1;
    if (y2.b == 0) {
        Int N(y2.a.get_num());
        for (const auto& [p, e] : factor(N))
            if (e >= 2) d *= int_pow(p, static_cast<unsigned long>(e / 2));
        return d;
    }
    Int T(y2.trace().get_num()), N(y2.norm().get_num());
    if (T == 0) {
        for (const auto& [p, e] : factor(N))
            if (e >= 4) d *= int_pow(p, static_cast<unsigned long>(e / 4));
        return d;
    }
    Int g = gcd(T, N);
    for (const auto& [p, e] : factor(g)) {
        long cap = std::min(v_p(T, p) / 2, v_p(N, p) / 4);
        if (cap > 0) d *= int_pow(p, static_cast<unsigned long>(cap));
    }
    return d;
}

// q * sqrt(s) with q rational and s a squarefree nonzero integer; sqrt of a
// negative s means the principal branch i*sqrt(|s|).  Closed under product,
// reciprocal and integer powers, which is exactly the algebra the scalar
// factors t_r * h_r / g^r of the approximation sequences need.
struct RadicalScalar {
    Rat q;
    Int s = 1;

    RadicalScalar() : q(0) {}
    static RadicalScalar of(const Rat& q_, const Int& s_) {
        if (s_ == 0) throw Error(ErrorCode::InvalidInput, "radical scalar with radicand 0");
        RadicalScalar r;
        Int k = square_part(s_);
        r.q = q_ * Rat(k);
        r.s = s_ / (k * k);
        if (r.q == 0) r.s = 1;
        return r;
    }
    static RadicalScalar rational(const Rat& q_) { return of(q_, 1); }

    bool is_zero() const { return q == 0; }
    bool is_rational() const { return s == 1; }

    friend RadicalScalar operator*(const RadicalScalar& x, const RadicalScalar& y) {
        // sqrt(s1)sqrt(s2) = sqrt(s1 s2), except both-negative principal
        // branches multiply to -sqrt(|s1 s2|).
        Rat sign(x.s < 0 && y.s < 0 ? -1 : 1);
        return of(sign * x.q * y.q, x.s * y.s);
    }
    RadicalScalar reciprocal() const {
        if (q == 0) throw Error(ErrorCode::InvalidInput, "reciprocal of zero scalar");
        // 1/(q sqrt(s)) = sqrt(s)/(q s), valid for either sign of s.
        return of(Rat(1) / (q * Rat(s)), s);
    }
    RadicalScalar pow(unsigned long e) const {
        // (q sqrt(s))^e with (sqrt(s))^2 = s on the principal branch.
        RadicalScalar out;
        out.q = rat_pow(q, static_cast<long>(e)) * rat_pow(Rat(s), static_cast<long>(e / 2));
        out.s = (e % 2 == 1) ? s : Int(1);
        if (out.q == 0) out.s = 1;
        return out;
    }

    // |q|*sqrt(|s|), rounded in direction rnd.
    Real abs_value(long prec, mpfr_rnd_t rnd = MPFR_RNDN) const;

    // Multiply into a quadratic element; representable only when s = 1 or
    // s equals the element's field radicand (sqrt(s)(a+b sqrt(t)) = bt + a sqrt(t)).
    QuadraticElement times(const QuadraticElement& x) const {
        if (s == 1) return q * x;
        if (!x.field.is_rationals() && x.field.t == s)
            return {x.field, q * x.b * Rat(s), q * x.a};
        if (x.is_zero()) return QuadraticElement::rational(0).in_field(x.field);
        throw Error(ErrorCode::ConstructionBug,
                    "radical scalar sqrt(" + s.get_str() + ") leaves the field " + x.field.str());
    }

    std::string str() const {
        if (s == 1) return q.get_str();
        return q.get_str() + "*sqrt(" + s.get_str() + ")";
    }
};

} // namespace thue

#endif
