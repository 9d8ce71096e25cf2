#include "thue/thue_series.hpp"

#include <algorithm>
#include <utility>

#include "thue/hypergeom.hpp"

namespace thue {

namespace {

// (X - root)^n expanded by the binomial theorem, coefficients in root's field.
Poly<QuadraticElement> linear_power(const QuadraticElement& root, long n) {
    std::vector<QuadraticElement> c(static_cast<size_t>(n) + 1);
    QuadraticElement neg = -root;
    QuadraticElement p = QuadraticElement::rational(1).in_field(root.field);
    // coefficient of X^{n-k} is binom(n,k) (-root)^k
    for (long k = 0; k <= n; ++k) {
        c[static_cast<size_t>(n - k)] =
            Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) * p;
        if (k < n) p = p * neg;
    }
    return Poly<QuadraticElement>(std::move(c));
}

Poly<QuadraticElement> scale(const Rat& q, const Poly<QuadraticElement>& f) {
    return f.map<QuadraticElement>([&](const QuadraticElement& v) { return q * v; });
}

} // namespace

PolyFormCase classify_poly_form(const QuadraticElement& beta1, const QuadraticElement& beta2,
                                const QuadraticElement& gamma1, const QuadraticElement& gamma2,
                                const FieldDescriptor& K) {
    if (gamma1.is_zero() || gamma2.is_zero()) return PolyFormCase::A;
    auto in_K = [&](const QuadraticElement& v) {
        return v.b == 0 || (!K.is_rationals() && v.field == K);
    };
    if (in_K(beta1) && in_K(beta2) && in_K(gamma1) && in_K(gamma2)) return PolyFormCase::B;
    // Conjugate data: beta2 = conj(beta1), gamma2 = conj(gamma1) over K, with
    // at least one pair genuinely quadratic.  Only representable over K = Q:
    // conjugates over a quadratic K would live in a degree-4 lattice this
    // element type cannot hold.
    if (!K.is_rationals()) return PolyFormCase::Invalid;
    FieldDescriptor amb;
    bool found = false;
    for (const QuadraticElement* v : {&beta1, &beta2, &gamma1, &gamma2}) {
        if (v->b != 0) {
            if (!found) {
                amb = v->field;
                found = true;
            } else if (v->field != amb) {
                return PolyFormCase::Invalid;
            }
        }
    }
    if (!found) return PolyFormCase::Invalid; // all rational would already be case B
    if (beta2 != beta1.conj() || gamma2 != gamma1.conj()) return PolyFormCase::Invalid;
    return PolyFormCase::C;
}

FieldDescriptor ThueSetup::ambient() const {
    FieldDescriptor f = K;
    for (const QuadraticElement* v : {&beta1, &beta2, &gamma1, &gamma2, &x}) {
        if (v->b != 0) {
            if (f.is_rationals())
                f = v->field;
            else if (v->field != f)
                throw Error(ErrorCode::InvalidInput,
                            "setup elements span more than one quadratic field");
        }
    }
    return f;
}

void ThueSetup::validate() const {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "require n >= 2");
    if (K.kind == FieldKind::RealQuadratic)
        throw Error(ErrorCode::InvalidInput, "ground field must be Q or an imaginary quadratic field");
    (void)ambient(); // all data in one quadratic field
    PolyFormCase pc = form_case();
    if (pc == PolyFormCase::A)
        throw Error(ErrorCode::InvalidInput, "a gamma coefficient is zero: the form degenerates");
    if (pc == PolyFormCase::Invalid)
        throw Error(ErrorCode::InvalidInput,
                    "coefficient data is neither inside the ground field nor conjugate over it");
    if (beta1 == beta2) throw Error(ErrorCode::InvalidInput, "beta1 = beta2");
    if (!is_algebraic_integer(beta1) || !is_algebraic_integer(beta2))
        throw Error(ErrorCode::InvalidInput, "beta1 and beta2 must be algebraic integers");
    if (x.b != 0 && x.field != K)
        throw Error(ErrorCode::InvalidInput, "x must lie in the ground field");
    if (!is_algebraic_integer(x))
        throw Error(ErrorCode::InvalidInput, "x must be an algebraic integer");
}

QuadraticElement ThueSetup::U() const {
    return -(gamma2 * (x - beta2).pow_int(static_cast<unsigned long>(n)));
}

QuadraticElement ThueSetup::Z() const {
    return gamma1 * (x - beta1).pow_int(static_cast<unsigned long>(n));
}

QuadraticElement ThueSetup::W() const {
    QuadraticElement u = U();
    if (u.is_zero()) throw Error(ErrorCode::DegeneratePoint, "U(x) = 0: W undefined");
    return Z() / u;
}

Poly<QuadraticElement> ThueSetup::F_poly() const {
    return gamma1 * linear_power(beta1, n) + gamma2 * linear_power(beta2, n);
}

Poly<QuadraticElement> ThueSetup::G_poly() const {
    QuadraticElement one = QuadraticElement::rational(1);
    return Poly<QuadraticElement>::linear(-beta1, one) * Poly<QuadraticElement>::linear(-beta2, one);
}

ThueAuxiliaries thue_auxiliaries(const ThueSetup& s) {
    s.validate();
    ThueAuxiliaries a;
    QuadraticElement diff = s.beta1 - s.beta2;
    a.lambda = Rat(1, 4) * (diff * diff);
    a.thue_h = Rat(Int(s.n) * s.n - 1) * a.lambda;
    a.sqrt_lambda = Rat(1, 2) * diff;
    a.F = s.F_poly();
    a.G = s.G_poly();
    // Y = 2 G F' - n G' F; must equal n(beta1-beta2)(gamma1(x-beta1)^n - gamma2(x-beta2)^n).
    a.Y = scale(Rat(2), a.G * a.F.derivative()) - scale(Rat(s.n), a.G.derivative() * a.F);
    Poly<QuadraticElement> closed =
        (Rat(s.n) * diff) *
        (s.gamma1 * linear_power(s.beta1, s.n) - s.gamma2 * linear_power(s.beta2, s.n));
    if (a.Y != closed) throw Error(ErrorCode::ConstructionBug, "two routes to Y disagree");
    return a;
}

Poly<QuadraticElement> diff_eqn_residual(const Poly<QuadraticElement>& G,
                                         const Poly<QuadraticElement>& F, long n) {
    long m = G.degree();
    if (m < 1) throw Error(ErrorCode::InvalidInput, "G must be nonconstant");
    if (n < m) throw Error(ErrorCode::InvalidInput, "require n >= deg G");
    std::vector<Poly<QuadraticElement>> Gd(static_cast<size_t>(m) + 1),
        Fd(static_cast<size_t>(m) + 1);
    Gd[0] = G;
    Fd[0] = F;
    for (long i = 1; i <= m; ++i) {
        Gd[static_cast<size_t>(i)] = Gd[static_cast<size_t>(i) - 1].derivative();
        Fd[static_cast<size_t>(i)] = Fd[static_cast<size_t>(i) - 1].derivative();
    }
    Poly<QuadraticElement> acc;
    for (long i = 0; i <= m; ++i) {
        Rat coef(binomial(static_cast<unsigned long>(n - m + i), static_cast<unsigned long>(i)));
        if (i % 2 == 1) coef = -coef;
        acc = acc + scale(coef, Gd[static_cast<size_t>(i)] * Fd[static_cast<size_t>(m - i)]);
    }
    return acc;
}

std::pair<Poly<QuadraticElement>, Poly<QuadraticElement>> thue_pq_closed(const ThueSetup& s,
                                                                         long r) {
    s.validate();
    if (r < 0) throw Error(ErrorCode::InvalidParameters, "require r >= 0");
    using PQ = Poly<QuadraticElement>;
    QuadraticElement one = QuadraticElement::rational(1);
    PQ Zp = s.gamma1 * linear_power(s.beta1, s.n);
    PQ Up = (-s.gamma2) * linear_power(s.beta2, s.n);
    auto embed = [](const Rat& c) { return PQ::constant(QuadraticElement::rational(c)); };
    PQ XZU = xstar_eval_with(1, s.n, r, Zp, Up, embed);
    PQ XUZ = xstar_eval_with(1, s.n, r, Up, Zp, embed);
    PQ xm1 = PQ::linear(-s.beta1, one);
    PQ xm2 = PQ::linear(-s.beta2, one);
    PQ Q = xm2 * XZU - xm1 * XUZ;
    PQ P = s.beta1 * (xm2 * XZU) - s.beta2 * (xm1 * XUZ);
    return {P, Q};
}

std::vector<std::pair<Poly<QuadraticElement>, Poly<QuadraticElement>>> thue_pq_recurrence(
    const ThueSetup& s, long r_max) {
    if (r_max < 0) throw Error(ErrorCode::InvalidParameters, "require r_max >= 0");
    ThueAuxiliaries aux = thue_auxiliaries(s);
    using PQ = Poly<QuadraticElement>;
    const long n = s.n;
    QuadraticElement one = QuadraticElement::rational(1);
    PQ xmono = PQ::linear(QuadraticElement::rational(0), one);
    std::vector<std::pair<PQ, PQ>> out;
    out.reserve(static_cast<size_t>(r_max) + 1);

    QuadraticElement q0c = Rat(2, 3) * aux.thue_h;
    out.push_back({q0c * xmono, PQ::constant(q0c)});
    if (r_max == 0) return out;

    Rat c1(2 * (n + 1), 3);
    c1.canonicalize();
    Rat half_nm1(n - 1, 2);
    half_nm1.canonicalize();
    PQ Q1 = scale(c1, aux.G * aux.F.derivative() - scale(half_nm1, aux.G.derivative() * aux.F));
    PQ P1 = xmono * Q1 - scale(c1, aux.G * aux.F);
    out.push_back({P1, Q1});

    PQ F2 = aux.F * aux.F;
    for (long r = 1; r < r_max; ++r) {
        // lambda (n(r+1)-1) X_{r+1} = (r+1/2) Y X_r - (nr+1) F^2 X_{r-1}
        Rat rph(2 * r + 1, 2);
        rph.canonicalize();
        QuadraticElement inv = one / (Rat(Int(n) * (r + 1) - 1) * aux.lambda);
        auto step = [&](const PQ& cur, const PQ& prev) {
            PQ t = scale(rph, aux.Y * cur) - scale(Rat(Int(n) * r + 1), F2 * prev);
            return inv * t;
        };
        const auto& cur = out[static_cast<size_t>(r)];
        const auto& prev = out[static_cast<size_t>(r) - 1];
        out.push_back({step(cur.first, prev.first), step(cur.second, prev.second)});
    }
    return out;
}

Poly<QuadraticElement> s_r_poly(const ThueSetup& s, long r, const QuadraticElement& alpha) {
    s.validate();
    if (!s.F_poly().eval(alpha).is_zero())
        throw Error(ErrorCode::NotARoot, "alpha is not a root of F");
    auto [P, Q] = thue_pq_closed(s, r);
    return alpha * Q - P;
}

Complex root_from_branch(const ThueSetup& s, long k, long prec) {
    s.validate();
    QuadraticElement rho = -(s.gamma1 / s.gamma2);
    long kk = ((k % s.n) + s.n) % s.n;
    if (kk == 0 && rho == QuadraticElement::rational(1))
        throw Error(ErrorCode::ExcludedBranch,
                    "zeta = 1 is not a root branch (the degree of F drops)");
    Complex zeta = rho.to_complex(prec).nth_root(s.n);
    if (kk != 0) {
        Rat frac(2 * kk, s.n);
        frac.canonicalize();
        Real ang = Real::mul_q(Real::pi(prec), frac, MPFR_RNDN);
        zeta = zeta * Complex(cos(ang), sin(ang));
    }
    Complex one = Complex::of(Rat(1), prec);
    Complex b1 = s.beta1.to_complex(prec);
    Complex b2 = s.beta2.to_complex(prec);
    return (b1 * zeta - b2) / (zeta - one);
}

std::optional<QuadraticElement> exact_root(const ThueSetup& s) {
    s.validate();
    QuadraticElement rho = -(s.gamma1 / s.gamma2);
    if (!rho.is_rational_value()) return std::nullopt;
    Rat rq = rho.a;
    Int num = rq.get_num(), den = rq.get_den();
    bool neg = num < 0;
    if (neg && s.n % 2 == 0) return std::nullopt; // no rational n-th root
    Int anum = abs(num), rn, rd;
    bool e1 = mpz_root(rn.get_mpz_t(), anum.get_mpz_t(), static_cast<unsigned long>(s.n)) != 0;
    bool e2 = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(s.n)) != 0;
    if (!e1 || !e2) return std::nullopt;
    Rat zq(neg ? Int(-rn) : rn, rd);
    zq.canonicalize();
    std::vector<Rat> candidates{zq};
    if (s.n % 2 == 0) candidates.push_back(-zq);
    for (const Rat& z : candidates) {
        if (z == 1) continue; // zeta = 1 is the excluded branch
        QuadraticElement zeta = QuadraticElement::rational(z);
        QuadraticElement alpha =
            (s.beta1 * zeta - s.beta2) / (zeta - QuadraticElement::rational(1));
        if (!s.F_poly().eval(alpha).is_zero())
            throw Error(ErrorCode::ConstructionBug, "exact root candidate fails F(alpha) = 0");
        return alpha;
    }
    return std::nullopt;
}

RealRootReport classify_real_roots(const ThueSetup& s, long prec) {
    s.validate();
    if (!s.K.is_rationals() || s.form_case() != PolyFormCase::C)
        throw Error(ErrorCode::Unclassified,
                    "real-root census requires conjugate quadratic data over Q");
    const Int& t = s.beta1.field.t; // beta1 is genuinely quadratic in the conjugate case
    QuadraticElement rho = -(s.gamma1 / s.gamma2);
    RealRootReport rep;
    if (t < 0) {
        // beta2 is the complex conjugate of beta1 and |rho| = 1: every branch
        // gives a real root (alpha equals its own conjugate).
        for (long k = 0; k < s.n; ++k) {
            try {
                rep.roots.push_back(root_from_branch(s, k, prec).re);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ExcludedBranch) throw;
            }
        }
    } else {
        // Real embedding: real roots correspond to real branches zeta with
        // zeta^n = rho, i.e. zeta = +/- |rho|^{1/n} as sign and parity allow.
        if (rho == QuadraticElement::rational(1))
            throw Error(ErrorCode::Unclassified, "-gamma1/gamma2 = 1: branch zeta = 1 degenerates");
        int sr = rho.sign_real();
        if (sr == 0) throw Error(ErrorCode::Unclassified, "-gamma1/gamma2 = 0");
        Real rabs = abs(rho.to_complex(prec).re);
        Real omega = exp(log(rabs) / Real::of(s.n, prec));
        Real one = Real::one(prec);
        Real a = Real::of(s.beta1.a, prec);
        Real bsq = Real::of(s.beta1.b, prec) * sqrt(Real::of(t, prec));
        auto from_zeta = [&](const Real& z) {
            // alpha = a + b sqrt(t) (zeta+1)/(zeta-1)
            rep.roots.push_back(a + bsq * ((z + one) / (z - one)));
        };
        if (sr > 0) {
            from_zeta(omega);
            if (s.n % 2 == 0) from_zeta(-omega);
        } else if (s.n % 2 == 1) {
            from_zeta(-omega);
        } // rho < 0, n even: no real branch, no real roots
    }
    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const Real& x, const Real& y) { return x < y; });
    rep.count = static_cast<long>(rep.roots.size());
    return rep;
}

Complex script_A(const ThueSetup& s, long prec) {
    s.validate();
    QuadraticElement w = s.W();
    if (w.is_zero()) throw Error(ErrorCode::UnsupportedBranch, "W(x) = 0");
    bool on_cut = false;
    if (w.field.is_imaginary())
        on_cut = (w.b == 0 && w.a < 0);
    else
        on_cut = (w.sign_real() < 0);
    if (on_cut)
        throw Error(ErrorCode::UnsupportedBranch, "W(x) is a negative real: on the branch cut");
    Complex omega = w.to_complex(prec).nth_root(s.n);
    Complex b1 = s.beta1.to_complex(prec);
    Complex b2 = s.beta2.to_complex(prec);
    Complex xc = s.x.to_complex(prec);
    Complex num = b1 * (xc - b2) * omega - b2 * (xc - b1);
    Complex den = (xc - b2) * omega - (xc - b1);
    return num / den;
}

bool distinctness_check(const ThueSetup& s, long r) {
    s.validate();
    if (r < 0) throw Error(ErrorCode::InvalidParameters, "require r >= 0");
    QuadraticElement u = s.U(), z = s.Z();
    QuadraticElement xm1 = s.x - s.beta1, xm2 = s.x - s.beta2;
    if (xm1.is_zero() || xm2.is_zero() || (z - u).is_zero())
        throw Error(ErrorCode::DegeneratePoint,
                    "(x-beta1)(x-beta2)F(x) = 0: distinctness unavailable");
    auto pq_at = [&](long rr) {
        QuadraticElement XZU = xstar_eval(1, s.n, rr, z, u);
        QuadraticElement XUZ = xstar_eval(1, s.n, rr, u, z);
        QuadraticElement Qv = xm2 * XZU - xm1 * XUZ;
        QuadraticElement Pv = s.beta1 * (xm2 * XZU) - s.beta2 * (xm1 * XUZ);
        return std::make_pair(Pv, Qv);
    };
    auto [pr, qr] = pq_at(r);
    auto [pn, qn] = pq_at(r + 1);
    return !(pn * qr - pr * qn).is_zero();
}

} // namespace thue
