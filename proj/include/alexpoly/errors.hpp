#pragma once

#include <stdexcept>
#include <string>

namespace alexpoly {

// Every failure the library can signal, by name. The CLI maps categories to
// exit codes: input errors -> 2, resource/consistency errors -> 3.
enum class errc {
    // input-side
    syntax_error,
    negative_exponent,
    zero_denominator,
    empty_input,
    non_positive_order,
    non_primitive,
    duplicate_branch,
    degenerate_parametrization,
    same_branch,
    too_many_branches,
    // resource / stabilization
    budget_exceeded,
    out_of_box,
    not_stabilized,
    not_divisible,
    window_exceeded,
    certification_failed,
    internal,
};

const char* errc_name(errc k);

// True for errors caused by user input rather than budgets/consistency.
bool errc_is_input(errc k);

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& msg)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}

    errc kind() const { return kind_; }
    bool is_input_error() const { return errc_is_input(kind_); }

  private:
    errc kind_;
};

inline const char* errc_name(errc k) {
    switch (k) {
        case errc::syntax_error: return "SyntaxError";
        case errc::negative_exponent: return "NegativeExponent";
        case errc::zero_denominator: return "ZeroDenominator";
        case errc::empty_input: return "EmptyInput";
        case errc::non_positive_order: return "NonPositiveOrder";
        case errc::non_primitive: return "NonPrimitive";
        case errc::duplicate_branch: return "DuplicateBranch";
        case errc::degenerate_parametrization: return "DegenerateParametrization";
        case errc::same_branch: return "SameBranch";
        case errc::too_many_branches: return "TooManyBranches";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::out_of_box: return "OutOfBox";
        case errc::not_stabilized: return "NotStabilized";
        case errc::not_divisible: return "NotDivisible";
        case errc::window_exceeded: return "WindowExceeded";
        case errc::certification_failed: return "CertificationFailed";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

inline bool errc_is_input(errc k) {
    switch (k) {
        case errc::syntax_error:
        case errc::negative_exponent:
        case errc::zero_denominator:
        case errc::empty_input:
        case errc::non_positive_order:
        case errc::non_primitive:
        case errc::duplicate_branch:
        case errc::degenerate_parametrization:
        case errc::same_branch:
        case errc::too_many_branches:
            return true;
        default:
            return false;
    }
}

} // namespace alexpoly
