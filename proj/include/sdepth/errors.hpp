#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdepth {

// Machine-readable error codes; the CLI maps every code except Verification to exit status 2.
enum class ErrorCode {
    Input,
    Degeneracy,
    Parse,
    ExtractionExhausted,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(ErrorCode::Input, what) {}
};

// Raised only when strict general position was requested and the input violates it.
class DegeneracyError : public Error {
public:
    explicit DegeneracyError(const std::string& what) : Error(ErrorCode::Degeneracy, what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(ErrorCode::Parse,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace sdepth
