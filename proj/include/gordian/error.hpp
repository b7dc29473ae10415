#pragma once

#include <stdexcept>
#include <string>

namespace gordian {

enum class ErrorKind {
    MultiComponentClosure,
    InvalidArc,
    InvalidCrossing,
    MalformedDiagram,
    MalformedSection,
    SpecMismatch,
    NotSurjective,
    SynthesisExhausted,
    BudgetExceeded,
    ParseError,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

// Domain errors map to CLI exit 1, parse errors to 2, budget to 3.
inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return 2;
        case ErrorKind::BudgetExceeded: return 3;
        default: return 1;
    }
}

#define GORDIAN_CHECK(cond, msg) \
    do { \
        if (!(cond)) ::gordian::fail(::gordian::ErrorKind::Internal, std::string("internal check failed: ") + (msg)); \
    } while (0)

} // namespace gordian
