#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixsq {

/// An input or intermediate value exceeds the supported 64-bit ceiling.
struct width_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Input lies outside an operation's mathematical domain.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// The number is of the form 4^k(8l+7) and has no three-square representation.
struct not_representable : domain_error {
    using domain_error::domain_error;
};

/// A caller-side precondition (such as a parity requirement) was violated.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A congruence or exact-division step inside a construction did not hold.
/// Seeing one of these means the implementation is wrong, not the input.
struct construction_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed textual input; position() is a 0-based character offset.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

} // namespace mixsq
