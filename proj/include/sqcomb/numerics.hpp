#pragma once

#include <complex>

namespace sqcomb::numerics {

// Recurrence-stability guard for the Bessel evaluator.
inline constexpr int max_bessel_order = 512;

/// Bessel function of the first kind J_n(m) for integer order and m >= 0.
/// Miller downward recurrence normalized by the even-order sum rule;
/// direct power series below m = 1e-3.
double bessel_j(int order, double m);

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) on the closed upper
/// half-plane (Im z >= 0). Region-switched: exact axis formulas at
/// Im z = 0, a sampling series with pole correction near the origin,
/// and the Laplace continued fraction far from it.
std::complex<double> faddeeva(std::complex<double> z);

/// Dawson integral F(x) = exp(-x^2) * int_0^x exp(t^2) dt.
double dawson(double x);

}  // namespace sqcomb::numerics
