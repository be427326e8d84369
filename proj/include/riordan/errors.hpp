#ifndef RIORDAN_ERRORS_HPP
#define RIORDAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riordan {

enum class errc {
    division_by_zero,
    context_mismatch,
    zero_scalar,
    not_a_unit,
    inner_not_positive_order,
    not_invertible,
    not_unit_normalized,
    not_positive_order,
    rows_exceed_precision,
    not_composable,
    bad_residue,
    not_a_root_of_unity,
    not_finite_order,
    spec_period_mismatch,
    theta_leading_zero,
    substitution_not_positive_order,
    arity_mismatch,
    not_bi_invertible,
    bad_leading_scalar,
    invalid_pair,
    syntax_error,
    domain_error,
};

const char* errc_name(errc code) noexcept;

/// All library failures derive from Error; code() identifies the condition.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Parse failure; offset is the byte position in the input text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(errc::syntax_error, what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Evaluation failure; fragment holds the offending sub-expression.
class DomainError : public Error {
public:
    DomainError(std::string fragment, const std::string& what)
        : Error(errc::domain_error, what + " in `" + fragment + "`"),
          fragment_(std::move(fragment)) {}

    const std::string& fragment() const noexcept { return fragment_; }

private:
    std::string fragment_;
};

} // namespace riordan

#endif
