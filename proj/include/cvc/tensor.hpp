#pragma once

#include <Eigen/Dense>

#include <array>

namespace cvc {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Dense fixed-size tensors over a 3-dimensional frame, indexed t[i][j][k]...
using Tensor3 = std::array<std::array<std::array<double, 3>, 3>, 3>;
using Tensor4 = std::array<Tensor3, 3>;

inline Tensor3 zero_tensor3() { return Tensor3{}; }
inline Tensor4 zero_tensor4() { return Tensor4{}; }

/// Default tolerance for symmetry/Jacobi style checks on O(1) entries.
inline constexpr double kStructureTol = 1e-9;

}  // namespace cvc
