#ifndef THUE_ERRORS_HPP
#define THUE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thue {

// Every failure mode the library distinguishes.  Pipelines that merely find a
// result inapplicable (E <= 1) do NOT throw; they return a result flagged
// not-applicable.  Errors here are for contract violations and computations
// that cannot proceed.
enum class ErrorCode {
    InvalidInput,          // caller broke a precondition
    InvalidParameters,     // bad (m, n, r, d) combination
    ValuationUndefined,    // v_p(0)
    Undefined,             // content divisor of 0, etc.
    NotARoot,              // alpha does not annihilate F
    ExcludedBranch,        // the n-th root 1 of -gamma1/gamma2 when gamma1 = -gamma2
    Unclassified,          // real-root classification outside the lemma's cases
    UnsupportedBranch,     // W(x) on the cut (negative real or zero), or out of range
    DegenerateG,           // quadratic G with zero discriminant: recurrence invalid
    DegeneratePoint,       // (x-beta1)(x-beta2)F(x) = 0: distinctness unavailable
    CaseMismatch,          // bound check invoked with data violating the case hypothesis
    SingularTransform,     // a1*a4 - a2*a3 = 0
    NotApplicable,         // no certificate row / default certificate hypothesis fails
    PrecisionInsufficient, // certified comparison fell inside the guard band
    ConstructionBug,       // internal identity failed: implementation error, not user error
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::ValuationUndefined: return "ValuationUndefined";
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::ExcludedBranch: return "ExcludedBranch";
    case ErrorCode::Unclassified: return "Unclassified";
    case ErrorCode::UnsupportedBranch: return "UnsupportedBranch";
    case ErrorCode::DegenerateG: return "DegenerateG";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::PrecisionInsufficient: return "PrecisionInsufficient";
    case ErrorCode::ConstructionBug: return "ConstructionBug";
    }
    return "Unknown";
}

} // namespace thue

#endif
