#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mtcat {

using Scalar = double;
using Complex = std::complex<Scalar>;
using MatrixXc = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXc = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using MatrixXr = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXr = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Index of a simple object. Index 0 is always the unit.
using Label = int;
inline constexpr Label kUnit = 0;

/// Default absolute tolerance for numerical comparisons.
inline constexpr Scalar kDefaultTolerance = 1e-9;

inline constexpr Scalar kPi = 3.141592653589793238462643383279502884;

/// e^{i x}
inline Complex expi(Scalar x) { return std::polar(Scalar{1}, x); }

// Error hierarchy. Every error thrown by the library derives from mtcat::Error.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments: unknown labels, inadmissible channels, unsupported parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// An admissible F or R entry is missing.
class IncompleteData : public Error {
public:
    IncompleteData(std::string what, std::vector<int> key)
        : Error(std::move(what)), key_(std::move(key)) {}
    const std::vector<int>& key() const noexcept { return key_; }

private:
    std::vector<int> key_;
};

/// The unit-channel F element for a label vanishes.
class RigidityDegenerate : public Error {
public:
    using Error::Error;
};

/// The S-matrix is singular or has a vanishing unit row entry.
class DegenerateSMatrix : public Error {
public:
    using Error::Error;
};

/// Supplied conformal weights disagree with the twist derived from braiding.
class WeightsInconsistent : public Error {
public:
    using Error::Error;
};

/// Numerical routine failed to converge or produced an invalid result.
class ComputationError : public Error {
public:
    using Error::Error;
};

}  // namespace mtcat
