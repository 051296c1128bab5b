// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace conformal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A light-like vector orthogonal to the chart direction: the point at
// infinity of the current Euclidean chart.
struct DegeneratePoint : Error {
    using Error::Error;
};

// Three embedded points with a rank-deficient span.
struct DegenerateCircle : Error {
    using Error::Error;
};

struct OutOfDomain : Error {
    using Error::Error;
};

// |dm/dt| below tolerance; no arc-length reparametrization possible.
struct SingularParametrization : Error {
    using Error::Error;
};

// kappa ~ 0.
struct InflectionPoint : Error {
    using Error::Error;
};

// nu = sqrt(kappa'^2 + kappa^2 tau^2) ~ 0; conformal arc-length degenerates.
struct VertexPoint : Error {
    using Error::Error;
};

// Conformal torsion ~ 0; the osculating-sphere curve is stationary.
struct PlanarOrSpherical : Error {
    using Error::Error;
};

struct StationarySigma : Error {
    using Error::Error;
};

struct NotSpaceLike : Error {
    using Error::Error;
};

struct NotACanal : Error {
    using Error::Error;
};

struct IntersectionDegenerate : Error {
    using Error::Error;
};

struct WindowTooLarge : Error {
    using Error::Error;
};

struct StepFailure : Error {
    using Error::Error;
};

struct ConfigError : Error {
    ConfigError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace conformal
