#ifndef CHARP_ERROR_HPP
#define CHARP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace charp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two values from different ring contexts were mixed.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& msg) : Error(msg) {}
};

/// An operation was invoked outside its mathematical domain
/// (e.g. gcd in a quotient ring).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Input hit a degenerate-case convention, e.g. the colon (0 : 0).
class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& msg) : Error(msg) {}
};

/// A configured guard rail (degree cap, term cap, pair queue, level cap)
/// was exceeded.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

/// Text input did not conform to the grammar; carries a byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace charp

#endif
