#ifndef WINDOWCALC_ERRORS_HPP
#define WINDOWCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace windowcalc
{

// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

class EmptyIntervalError : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

class LengthMismatchError : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

class SymmetryError : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

// The window parameter places an endpoint of the interval on the integer lattice.
class GenericityError : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

// An internal identity failed. Never expected to fire; reaching it is a bug.
class ConsistencyError : public Error
{
public:
    using Error::Error;
};

} // namespace windowcalc

#endif
