#ifndef STARLAB_ERRORS_HPP
#define STARLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starlab {

enum class ErrorKind {
    domain,      // precondition violated by the caller
    size_limit,  // a blowup guard tripped before memory did
    parse,       // malformed text input
    overflow,    // exact arithmetic left the 64-bit range
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

struct SizeLimitError : Error {
    explicit SizeLimitError(const std::string& what) : Error(ErrorKind::size_limit, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(ErrorKind::overflow, what) {}
};

} // namespace starlab

#endif
