#pragma once

#include "qgalois/scalar.hpp"

namespace qgalois {

/// Balanced q-integer [m]_v = (v^m - v^-m) / (v - v^-1).
/// Rejects v = 0 and v^2 = 1 (DegenerateParameterError); over the rationals
/// these are the only points where the balanced forms degenerate.
Scalar q_int(long m, const Scalar& v);

/// [n]_v! = [1]_v [2]_v ... [n]_v, with [0]_v! = 1. Requires n >= 0.
Scalar q_factorial(long n, const Scalar& v);

/// Balanced Gaussian binomial [n; r]_v = [n]_v! / ([r]_v! [n-r]_v!).
/// Requires 0 <= r <= n.
Scalar q_binomial(long n, long r, const Scalar& v);

}  // namespace qgalois
