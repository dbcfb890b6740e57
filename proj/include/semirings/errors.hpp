#pragma once

#include <stdexcept>
#include <string>

namespace semirings {

/// Malformed input: bad tables, violated preconditions, unknown names.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a documented size guard.
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A congruence-simple semiring fell outside every classification case.
/// Carries a JSON dump of the offending semiring; this must never fire
/// on valid input.
class theorem_violation : public std::logic_error {
public:
    theorem_violation(const std::string& what, std::string dump)
        : std::logic_error(what), dump_(std::move(dump)) {}

    const std::string& dump() const noexcept { return dump_; }

private:
    std::string dump_;
};

}  // namespace semirings
