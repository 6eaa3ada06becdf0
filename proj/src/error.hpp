#pragma once

#include <stdexcept>
#include <string>

namespace gal {

enum class ErrKind {
    Parse,     // tower DSL syntax / semantic errors (carry line/column)
    Config,    // invalid run configuration
    Input,     // precondition violations (field-tag mismatch, zero division, ...)
    Budget,    // a bounded search exhausted its budget
    Numeric,   // numeric layer could not certify (precision insufficient)
    Theorem,   // a verified statement failed on concrete data
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, std::string msg, int line = 0, int col = 0)
        : std::runtime_error(std::move(msg)), kind_(kind), line_(line), col_(col) {}

    ErrKind kind() const { return kind_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    ErrKind kind_;
    int line_;
    int col_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg, int line = 0, int col = 0) {
    throw Error(kind, msg, line, col);
}

}  // namespace gal
