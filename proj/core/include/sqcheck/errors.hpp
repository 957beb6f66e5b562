#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqcheck {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A degree or index outside the truncation of the object it refers to.
class RangeError : public Error {
public:
    using Error::Error;
};

// Bad argument: invalid generator index, mismatched truncation, foreign element.
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A subspace claimed to be an E-submodule is not closed under Q0 or Q1.
class ClosureError : public Error {
public:
    ClosureError(const std::string& what, int degree, std::string escaping)
        : Error(what), degree_(degree), escaping_(std::move(escaping))
    {
    }
    int degree() const noexcept { return degree_; }
    const std::string& escaping() const noexcept { return escaping_; }

private:
    int degree_;
    std::string escaping_;
};

// A module violates Q0^2 = 0, Q1^2 = 0 or Q0Q1 = Q1Q0.
class IntegrityError : public Error {
public:
    using Error::Error;
};

// Series arithmetic produced a negative dimension.
class AccountingError : public Error {
public:
    AccountingError(const std::string& what, int degree) : Error(what), degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

// An element is too close to the truncation cap for the requested statement.
class WindowError : public Error {
public:
    using Error::Error;
};

// A structural claim checked during construction turned out false.
// `element` names the offending basis element, `detail` the escaping image.
class ViolationError : public Error {
public:
    ViolationError(const std::string& what, int degree, std::string element, std::string detail)
        : Error(what), degree_(degree), element_(std::move(element)), detail_(std::move(detail))
    {
    }
    int degree() const noexcept { return degree_; }
    const std::string& element() const noexcept { return element_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    int degree_;
    std::string element_;
    std::string detail_;
};

} // namespace sqcheck
