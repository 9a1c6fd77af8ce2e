#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace aperiodica {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using Complex = std::complex<double>;

// Ordered, hashable identity of an exact configuration (label differences or
// quantized coordinates, flattened).
using Key = std::vector<long long>;

// Raised for violated preconditions and failed computations. The message
// starts with the name of the failing operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;

// Volume of the Euclidean ball of the given radius (dim 1..3).
double ball_volume(int dim, double radius);

Key to_key(const IVec& v);
IVec from_key(const Key& k);

}  // namespace aperiodica
