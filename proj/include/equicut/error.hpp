#pragma once

#include <stdexcept>
#include <string>

namespace equicut {

// Every failure mode the library reports. Verification *check* failures are
// not errors; they come back as report entries.
enum class ErrKind {
    ZeroDenominator,
    DivisionByZero,
    TowerLimitExceeded,
    NegativeRadicand,
    DegenerateInput,
    NonConvexInput,
    InvalidInput,
    InvalidWidth,
    MidspaceMismatch,
    AreaMismatch,
    ParseError,
    Internal,
};

inline const char* to_cstring(ErrKind k) {
    switch (k) {
        case ErrKind::ZeroDenominator:    return "ZeroDenominator";
        case ErrKind::DivisionByZero:     return "DivisionByZero";
        case ErrKind::TowerLimitExceeded: return "TowerLimitExceeded";
        case ErrKind::NegativeRadicand:   return "NegativeRadicand";
        case ErrKind::DegenerateInput:    return "DegenerateInput";
        case ErrKind::NonConvexInput:     return "NonConvexInput";
        case ErrKind::InvalidInput:       return "InvalidInput";
        case ErrKind::InvalidWidth:       return "InvalidWidth";
        case ErrKind::MidspaceMismatch:   return "MidspaceMismatch";
        case ErrKind::AreaMismatch:       return "AreaMismatch";
        case ErrKind::ParseError:         return "ParseError";
        case ErrKind::Internal:           return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_cstring(kind)) + ": " + msg), kind_(kind) {}

    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace equicut
