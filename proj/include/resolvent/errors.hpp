#ifndef RESOLVENT_ERRORS_HPP
#define RESOLVENT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resolvent {

// Malformed textual input. `offset` is the byte position of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A certified computation could not be decided within the precision budget.
class indeterminate_error : public std::runtime_error {
public:
    explicit indeterminate_error(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a documented size cap (degree, group order, ...).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated mathematical precondition (zero divisor, bad conductor, ...).
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace resolvent

#endif
