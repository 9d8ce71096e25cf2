#ifndef THUE_MEASURES_HPP
#define THUE_MEASURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "thue/certtable.hpp"
#include "thue/prime_power.hpp"
#include "thue/thue_series.hpp"

namespace thue {

enum class Pipeline { Thm1, Thm2, Cor1, Cor2, Approx, Transform };
std::string pipeline_name(Pipeline p);

// A computed effective irrationality measure
//     |theta - p/q| > 1 / (c |q|^{kappa+1})   for p, q in O_K, q != 0,
// with conservative rounding: E down, Q/kappa/c up, so the published tuple is
// a valid certificate despite floating arithmetic.  `slack` is the relative
// guard 2^{-prec/2} applied at the rounding boundary.
struct MeasureResult {
    Pipeline pipeline = Pipeline::Approx;
    bool applicable = false;
    Real E, Q, kappa, c;  // E rounded down; Q, kappa, c rounded up
    long precision_bits = 0;
    Real slack;
    std::string reason;  // set when !applicable (e.g. "E = 0.258... <= 1")
    FieldDescriptor K;   // field of the p, q quantifier
    Complex theta;       // the approximated number, at precision_bits
    bool has_EQ = true;  // Transform results carry only (c, kappa)
    std::vector<std::pair<std::string, std::string>> inputs;  // ordered, for serialization

    std::string to_json() const;
    std::string to_text() const;
};

// Sequence data feeding the approximation lemma; producers supply k0/l0/Q
// rounded up and E rounded down.
struct SequenceParams {
    Real k0, l0, E, Q;
};

// kappa = log Q/log E and c = 2 k0 Q (2 l0 E)^kappa; applicable iff E, Q > 1.
// The measure then holds for |q| >= 1/(2 l0).
MeasureResult measure_from_sequence(const SequenceParams& params, long prec);

// |q theta' - p| > C' |q|^{-kappa} for theta' = (a1 theta + a2)/(a3 theta + a4),
// given |q theta - p| > C |q|^{-kappa}:
//     C' = C / (|a4 + a3 theta| (|a3|(1+|theta'|) + |a1|)^kappa),
// rounded down.  kappa is unchanged.  Requires a1 a4 != a2 a3
// (SingularTransform).  Returned as a MeasureResult with c = 1/C' (rounded up)
// and theta = theta'.
MeasureResult transform_measure(const Real& C, const Real& kappa, const Complex& theta,
                                const QuadraticElement& a1, const QuadraticElement& a2,
                                const QuadraticElement& a3, const QuadraticElement& a4, long prec);

// The divisor g of U(x), Z(x): an element of the ambient field, or a rational
// multiple of a square root of an integer (the shape the corollaries need).
struct GSpec {
    bool is_element = true;
    QuadraticElement elem;  // when is_element
    RadicalScalar rad;      // otherwise

    static GSpec element(QuadraticElement e) {
        GSpec g;
        g.is_element = true;
        g.elem = std::move(e);
        return g;
    }
    static GSpec radical(RadicalScalar r) {
        GSpec g;
        g.is_element = false;
        g.rad = std::move(r);
        return g;
    }
    bool is_zero() const { return is_element ? elem.is_zero() : rad.is_zero(); }
    Real abs_value(long prec) const;
    std::string str() const { return is_element ? elem.str() : rad.str(); }
};

// Per-parity h_r rule (|h_r| <= h, h_r/g^r in K): h_r = even for even r, odd
// for odd r.
struct HRule {
    RadicalScalar even = RadicalScalar::rational(1);
    RadicalScalar odd = RadicalScalar::rational(1);
};

// Everything the main theorem computes on the way to a measure; exposed so
// tests can cross-check the sequence bounds against the same constants.
struct PipelineInternals {
    Int d;                  // largest rational integer with (U-Z)/(dg) integral
    PrimePowerProduct calN; // calN(d, n)
    Real E_down, Q_up;      // the measure's E and Q
    Real k0_up, l0_up;      // sequence constants of the approximation lemma
    Complex theta;          // A(x)
    Real absW_root_dist;    // |1 - W^{1/n}|, for reporting
};

// Theorem pipeline over F = gamma1 (x-beta1)^n + gamma2 (x-beta2)^n:
//   E = |g| calN/D * min(|sqrt U - sqrt Z|, |sqrt U + sqrt Z|)^{-2}
//   Q = D/(|g| calN) * max(...)^2
//   c = 4 h |sqrt tau| (|x-b1|+|x-b2|) C Q *
//       max(1, 5 h |sqrt tau| |1-W^{1/n}| |x-b2| |A(x)-b1| C E)^kappa
// valid when E > 1 and either 0 < W < 1 exactly or |W| = 1 with W != -1
// (decided in exact arithmetic).  tau must be 1 in the supported tower
// (K = Q, or beta1 in K); K imaginary with quadratic beta1 is rejected.
MeasureResult theorem1(const ThueSetup& s, const GSpec& g, const RadicalScalar& h,
                       const QuadraticElement& tau, const Certificate& cert, long prec,
                       PipelineInternals* internals = nullptr);

// Unit-disk variant (K imaginary quadratic, all data in K):
//   E = |g| calN/D * 4(|U| - |Z-U|)/|Z-U|^2,  Q = D/(|g| calN) * 2(|U|+|Z|),
//   c as above with the constant 2 in place of 5,
// valid when E > 1 and max(|1-W|, |1-1/W|) < 1 (exact norm comparisons).
MeasureResult theorem2(const ThueSetup& s, const GSpec& g, const RadicalScalar& h,
                       const QuadraticElement& tau, const Certificate& cert, long prec,
                       PipelineInternals* internals = nullptr);

// Measure for (a/b)^{1/n}, for coprime algebraic integers a, b in Q or an
// imaginary quadratic field with a/b > 1 rational or |a/b| = 1, a/b != -1:
//   E = calN/D min(|sqrt a - sqrt b|, |sqrt a + sqrt b|)^{-2},
//   Q = D/calN max(...)^2,  c = 4|a| C Q (2.5 |a(a-b)/b| C E)^kappa,
// with d the largest rational integer dividing a - b in the ring of integers.
MeasureResult corollary1(const QuadraticElement& a, const QuadraticElement& b, long n,
                         CertKind ck, const CertTable& table, long prec,
                         PipelineInternals* internals = nullptr);

// The arithmetic data of the quadratic-conjugate corollary, from
// U(x) = (u1 + u2 sqrt t)/2.
struct Cor2GData {
    Int u1, u2;
    Int g1, g2, g3, g4;
    RadicalScalar g;  // g1 sqrt(g2)/sqrt(g3 g4)
    Int d;            // largest with u1/(dg) an algebraic integer
    std::string str() const;
};
Cor2GData corollary2_gdata(const Int& u1, const Int& u2, const Int& t, long n);

// Measure for A(x) with beta1 = a + b sqrt(t) quadratic over Q (b != 0),
// gamma1 integral in Q(sqrt t), x a rational integer:
//   E = |g| calN / (D min|u2 sqrt t +- sqrt(u2^2 t - u1^2)|)   (not squared),
//   Q = D max(...) / (|g| calN),
//   c = 4 sqrt|2t| (|x-b1|+|x-b2|) C Q (max(1, 5 sqrt|2t| |1-W^{1/n}| |x-b2| |A-b1| C E))^kappa,
// with the conclusion over rational integers p, q.
MeasureResult corollary2(long n, const Int& t, const Int& x, const QuadraticElement& beta1,
                         const QuadraticElement& gamma1, CertKind ck, const CertTable& table,
                         long prec, PipelineInternals* internals = nullptr);

// One constructed approximation: q_r A(x) - p_r = s_r.
struct ApproximationState {
    long r = 0;
    QuadraticElement p, q;  // algebraic integers in K
    RadicalScalar t_r, h_r;
    Complex s;    // from the remainder formula
    Real abs_q, abs_s;
};

// The explicit approximation sequence (r = 0..r_max):
//   q_r = t_r h_r D_{n,r}/(g^r N_{d,n,r}) Q_r(x),  same for p_r with P_r(x),
// where t_r is 1 (beta1 in K, or r odd), or 1/sqrt(t) (K = Q, quadratic
// beta1, r even).  Each state is verified: p_r, q_r are algebraic integers in
// K (ConstructionBug otherwise), and q_r A(x) - p_r matches the remainder
// formula for s_r at elevated precision.
std::vector<ApproximationState> build_sequence(const ThueSetup& s, const GSpec& g,
                                               const HRule& hrule, const QuadraticElement& tau,
                                               const Certificate& cert, long r_max, long prec);

// Brute-force audit of a measure over the ring of integers of result.K:
// every q with 0 < |q| <= qmax (and the nearest lattice numerators p) must
// satisfy |theta - p/q| > 1/(c |q|^{kappa+1}).  Returns descriptions of any
// violations (expected empty).
std::vector<std::string> brute_force_check(const MeasureResult& result, long qmax, long prec);

// Embeds corollary 1's (a, b, n) into the theorem-1 data
// (beta1=0, beta2=b-a, gamma1=1, gamma2=-(b/a)^{n-1}, x=b, g=b^{n-1}, h=1),
// used by tests to confirm the two pipelines agree.
struct Cor1Embedding {
    ThueSetup setup;
    GSpec g;
    RadicalScalar h;
    QuadraticElement tau;
};
Cor1Embedding corollary1_embedding(const QuadraticElement& a, const QuadraticElement& b, long n);

} // namespace thue

#endif
