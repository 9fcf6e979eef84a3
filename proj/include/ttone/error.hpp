#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ttone {

enum class ErrorKind {
    InvalidEdge,
    InvalidVertex,
    InvalidLabel,
    InvalidArgument,
    AlreadyColored,
    NotValid,
    NotBipartite,
    NotChordal,
    NotATree,
    DegreeTooHigh,
    BadAnchor,
    TooLarge,
    Infeasible,
    ParseError,
    InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::AlreadyColored: return "AlreadyColored";
    case ErrorKind::NotValid: return "NotValid";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::NotChordal: return "NotChordal";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::BadAnchor: return "BadAnchor";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

}  // namespace ttone
