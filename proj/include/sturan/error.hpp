#pragma once

#include <stdexcept>
#include <string>

namespace sturan {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the range its operation accepts.
class InvalidParameter : public Error
{
public:
    using Error::Error;
};

/// Input exceeds vertex capacity or a documented feasibility limit.
class CapacityExceeded : public Error
{
public:
    using Error::Error;
};

/// Malformed graph6 or adjacency-list text.
class FormatError : public Error
{
public:
    using Error::Error;
};

/// Power iteration hit its iteration cap before reaching the tolerance.
class ConvergenceError : public Error
{
public:
    using Error::Error;
};

/// The input violates an operation's precondition (e.g. a disconnected graph).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// The λ ≥ 1+√(m−2) hypothesis behind the neighbourhood inequality fails.
class HypothesisViolated : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

} // namespace sturan
