#pragma once

namespace cvc {

/// Connection coefficients of an adapted frame {e1, e2, e3}:
///
///   nabla_{e1} e3 = a11 e1 + a12 e2        nabla_{e2} e3 = a21 e1 + a22 e2
///   nabla_{e3} e1 = c e2                   nabla_{e3} e2 = -c e1
///   nabla_{e2} e1 = f e2 - a21 e3          nabla_{e2} e2 = -f e1 - a22 e3
///   nabla_{e1} e2 = g e1 - a12 e3          nabla_{e1} e1 = -g e2 - a11 e3
///   nabla_{e3} e3 = 0
///
/// Any real values are admissible; whether they describe a homogeneous cvc
/// metric is decided by verify_homogeneous().
struct ChristoffelTable {
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;
  double f = 0.0;
  double g = 0.0;
  double c = 0.0;
};

}  // namespace cvc
