#pragma once

#include <stdexcept>
#include <string>

namespace plaus {

enum class Errc {
    division_by_zero,
    infinite,
    domain,
    undefined_sum,
    trivial_kernel,
    unit_exhausted,
    refinement,
    exclusivity_impossible,
    scenario_undefined,
    unknown_atom,
    impossible_conditioning,
    incompatible,
    total_conflict,
    budget_exceeded,
    invalid_argument,
    parse,
    validation,
};

/// Errors raised by the library. The code lets callers tell semantic
/// findings (total conflict, undefined sums, ...) apart from bad input.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace plaus
