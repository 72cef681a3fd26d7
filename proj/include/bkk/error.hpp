#pragma once

#include <stdexcept>
#include <string>

namespace bkk {

// Machine-readable category carried by every library exception. The CLI maps
// these onto exit codes and JSON error objects.
enum class ErrorCode {
    dimension,     // shape or ambient-dimension mismatch
    precondition,  // input violates a documented precondition
    range,         // numeric overflow or a size guard was exceeded
    genericity,    // certified-generic lifting could not be found
    parse,         // malformed input document
    internal,      // invariant broken inside the library
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(ErrorCode::dimension, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorCode::precondition, what) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(ErrorCode::range, what) {}
};

class GenericityError : public Error {
public:
    explicit GenericityError(const std::string& what) : Error(ErrorCode::genericity, what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(ErrorCode::internal, what) {}
};

}  // namespace bkk
