#pragma once

#include <stdexcept>
#include <string>

namespace strathom {

/// Raised when structurally well-formed input violates a semantic rule
/// (bad vertex index, non-monotone filtration, mismatched domains, ...).
/// Maps to exit code 1 at the command line.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when input text cannot be parsed at all. Carries a position when
/// one is known. Maps to exit code 2 at the command line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t byte_offset = 0)
        : std::runtime_error(what), byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

}  // namespace strathom
