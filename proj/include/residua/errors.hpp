#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace residua {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax, undeclared-variable, and exponent problems in polynomial text.
struct parse_error : error {
    parse_error(std::string msg, std::size_t position)
        : error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// Gröbner pair budget or degree guard exceeded.
struct budget_error : error {
    using error::error;
};

// Quotient ring is not finite-dimensional; names an unbounded variable.
struct not_zero_dimensional_error : error {
    explicit not_zero_dimensional_error(std::string var)
        : error("quotient is not zero-dimensional: no pure power of '" + var +
                "' among the leading terms"),
          variable(std::move(var)) {}
    std::string variable;
};

// The origin is not an isolated critical point (non-isolated Jacobian locus,
// or no critical point at all).
struct non_isolated_error : error {
    using error::error;
};

// The origin is not a critical point: nonzero constant term or linear part.
struct non_critical_error : error {
    using error::error;
};

// The Jacobian scheme has points away from the origin; the global quotient
// would misreport the local one. Re-center or change the representative.
struct non_local_error : error {
    using error::error;
};

struct degenerate_gram_error : error {
    using error::error;
};

// A condition the theory asserts impossible; indicates an implementation bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace residua
