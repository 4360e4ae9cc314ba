#pragma once

#include <stdexcept>

#include <Eigen/Dense>

namespace augmres {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Index = Eigen::Index;

/// Plane rotation coefficients; always satisfies c^2 + s^2 = 1.
struct GivensPair {
  double c = 1.0;
  double s = 0.0;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix required to have full column rank is numerically rank deficient.
class RankDeficiencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A triangular or small dense system is singular to working precision.
class SingularSystemError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The Krylov start vector vanished (e.g. A r0 = 0 under range restriction).
class ZeroStartError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace augmres
