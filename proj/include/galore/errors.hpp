#pragma once

#include <stdexcept>
#include <string>

namespace galore {

// Every failure the library can report, as a stable code the CLI maps to
// exit statuses and tests match on.
enum class Errc {
    duplicate_label,
    universe_too_large,
    unknown_element,
    universe_mismatch,
    budget_exceeded,
    family_budget_exceeded,
    not_endo,
    not_interior,
    not_closure,
    not_interior_or_closure,
    not_monotone,
    kind_mismatch,
    not_a_fixpoint_member,
    wrong_form,
    verification_failed,
    syntax_error,
    duplicate_name,
    unknown_name,
    type_mismatch,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Error(Errc code, std::string message, int line, int col)
        : std::runtime_error(std::move(message)), code_(code), line_(line), col_(col) {}

    Errc code() const { return code_; }
    bool has_span() const { return line_ > 0; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    Errc code_;
    int line_ = 0;
    int col_ = 0;
};

} // namespace galore
