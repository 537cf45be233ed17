#pragma once

#include <stdexcept>
#include <string>

namespace mrc {

/// Base class for runtime numerical failures (singular steps, divergent
/// quadrature, stalled coverings, non-converging iterations).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class CoveringError : public NumericError {
public:
    CoveringError(const std::string& what, double stall_time)
        : NumericError(what), stall_time(stall_time) {}
    double stall_time;
};

class ResolutionError : public NumericError {
public:
    using NumericError::NumericError;
};

class IntegrabilityError : public NumericError {
public:
    using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

class StepSingularityError : public NumericError {
public:
    StepSingularityError(const std::string& what, int step) : NumericError(what), step(step) {}
    int step;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

} // namespace mrc
