#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

/// Bad or inconsistent caller input. The CLI maps these to exit status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Valid input that names a case this library does not handle.
class UnsupportedError : public InputError {
public:
    using InputError::InputError;
};

/// Failure of a numerical or algebraic computation. The CLI maps these to
/// exit status 3.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericalError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// Shifted secular polynomial has a nonzero odd-power coefficient.
class OddTermError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// Elimination produced an identically zero resultant (positive-dimensional
/// solution set).
class ComponentError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class CertificationError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// Spectrum is complex or degenerate where a real simple one is required.
class SpectrumError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class ConditioningError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class AmbiguityError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

} // namespace qcat
