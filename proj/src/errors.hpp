#pragma once

#include <stdexcept>
#include <string>

namespace logsymp {

enum class ErrorKind {
    ChartMismatch,
    DegreeError,
    NonPolynomialCoefficients,
    InvalidCenter,
    NotPoisson,
    DegeneratePfaffian,
    LogSymplecticViolation,
    NotClosed,
    StarHypothesisFails,
    UnsupportedGrading,
    NotIdentityMultiple,
    PoleOnStratum,
    ParseError,
    InvalidDiamond,
    RequiresSmoothBranch,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ChartMismatch: return "ChartMismatch";
        case ErrorKind::DegreeError: return "DegreeError";
        case ErrorKind::NonPolynomialCoefficients: return "NonPolynomialCoefficients";
        case ErrorKind::InvalidCenter: return "InvalidCenter";
        case ErrorKind::NotPoisson: return "NotPoisson";
        case ErrorKind::DegeneratePfaffian: return "DegeneratePfaffian";
        case ErrorKind::LogSymplecticViolation: return "LogSymplecticViolation";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::StarHypothesisFails: return "StarHypothesisFails";
        case ErrorKind::UnsupportedGrading: return "UnsupportedGrading";
        case ErrorKind::NotIdentityMultiple: return "NotIdentityMultiple";
        case ErrorKind::PoleOnStratum: return "PoleOnStratum";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidDiamond: return "InvalidDiamond";
        case ErrorKind::RequiresSmoothBranch: return "RequiresSmoothBranch";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, std::string(error_kind_name(kind)) + ": " + msg);
}

} // namespace logsymp
