#pragma once

#include <stdexcept>
#include <string>

namespace layoutforge {

enum class ErrorKind {
    InvalidArgument,
    DegeneratePoint,
    DegenerateSegment,
    InconsistentAnnotation,
    InvalidPolygon,
    UndefinedMetric,
    Render,
    Generation,
    Placement,
    Parse,
    Format,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind() when the
// category matters (the CLI maps kinds onto exit codes).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::DegeneratePoint: return "degenerate-point";
    case ErrorKind::DegenerateSegment: return "degenerate-segment";
    case ErrorKind::InconsistentAnnotation: return "inconsistent-annotation";
    case ErrorKind::InvalidPolygon: return "invalid-polygon";
    case ErrorKind::UndefinedMetric: return "undefined-metric";
    case ErrorKind::Render: return "render";
    case ErrorKind::Generation: return "generation";
    case ErrorKind::Placement: return "placement";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Format: return "format";
    }
    return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace layoutforge
