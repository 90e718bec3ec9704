#include "sqcomb/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqcomb::numerics {

namespace {

constexpr double sqrt_pi = 1.7724538509055160273;
constexpr double two_over_sqrt_pi = 2.0 / sqrt_pi;

double bessel_series(int n, double m) {
    // J_n(m) = sum_k (-1)^k (m/2)^{2k+n} / (k! (k+n)!), a few terms for m << 1
    const double half = 0.5 * m;
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= half / k;
    double sum = 0.0;
    for (int k = 0; k < 40; ++k) {
        sum += term;
        term *= -half * half / (double(k + 1) * double(k + 1 + n));
        if (std::abs(term) < 1e-20 * std::abs(sum) + 1e-320) break;
    }
    return sum;
}

double bessel_miller(int n, double m) {
    const int top = std::max(n, static_cast<int>(m));
    int start = top + 20 + static_cast<int>(3.0 * std::sqrt(double(top) + 1.0));
    if (start % 2) ++start;

    double jp = 0.0;          // J_{k+1}
    double jc = 1e-300;       // J_k seed, rescaled away by the sum rule
    double norm = 0.0;        // J_0 + 2 sum_{k even > 0} J_k
    double result = 0.0;
    for (int k = start; k >= 1; --k) {
        const double jm = (2.0 * k / m) * jc - jp;
        jp = jc;
        jc = jm;  // now holds J_{k-1}
        const int kk = k - 1;
        if (kk == n) result = jc;
        if (kk > 0 && kk % 2 == 0) norm += 2.0 * jc;
        if (std::abs(jc) > 1e250) {
            jp *= 1e-250;
            jc *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
    }
    norm += jc;  // J_0
    return result / norm;
}

// ------------------------------------------------------------------
// Faddeeva regions

std::complex<double> w_axis(double x) {
    return {std::exp(-x * x), two_over_sqrt_pi * dawson(x)};
}

// Second-order Taylor step off the real axis; keeps the exponentially
// small real part accurate where the sampling series cancels badly.
std::complex<double> w_taylor_off_axis(double x, double y) {
    const std::complex<double> w0 = w_axis(x);
    const std::complex<double> w1 =
        -2.0 * x * w0 + std::complex<double>(0.0, two_over_sqrt_pi);
    const std::complex<double> w2 = -2.0 * w0 - 2.0 * x * w1;
    const std::complex<double> iy(0.0, y);
    return w0 + iy * (w1 + 0.5 * iy * w2);
}

// Midpoint sampling of (i/pi) int exp(-t^2)/(z-t) dt with the residue
// correction 2 exp(-z^2) / (1 + exp(-2 pi i z / h)); discretization
// error is O(exp(-pi^2/h^2)).
std::complex<double> w_midpoint(double x, double y) {
    constexpr double h = 0.5;
    constexpr int kmax = 17;  // nodes out to |t| = 8.25
    const std::complex<double> z(x, y);

    std::complex<double> sum = 0.0;
    for (int k = -kmax; k < kmax; ++k) {
        const double t = (k + 0.5) * h;
        sum += std::exp(-t * t) / (z - t);
    }
    std::complex<double> w = std::complex<double>(0.0, h / std::numbers::pi) * sum;

    // stable denominator: 1 + e^a e^{-2 pi i u}, u = x/h - round(x/h)
    const double a = 2.0 * std::numbers::pi * y / h;
    const double u = x / h - std::round(x / h);
    const double cos_piu = std::cos(std::numbers::pi * u);
    const double re_d = -std::expm1(a) + 2.0 * std::exp(a) * cos_piu * cos_piu;
    const double im_d = -std::exp(a) * std::sin(2.0 * std::numbers::pi * u);
    w += 2.0 * std::exp(-z * z) / std::complex<double>(re_d, im_d);
    return w;
}

std::complex<double> w_continued_fraction(std::complex<double> z) {
    std::complex<double> f = 0.0;
    for (int k = 40; k >= 1; --k) f = (0.5 * k) / (z - f);
    return std::complex<double>(0.0, 1.0 / sqrt_pi) / (z - f);
}

}  // namespace

double bessel_j(int order, double m) {
    if (!std::isfinite(m) || m < 0.0)
        throw std::domain_error("bessel_j: modulation depth must be finite and >= 0");
    if (order > max_bessel_order || order < -max_bessel_order)
        throw std::domain_error("bessel_j: |order| exceeds " +
                                std::to_string(max_bessel_order));
    if (order < 0) {
        const double v = bessel_j(-order, m);
        return (-order) % 2 ? -v : v;  // J_{-n}(m) = (-1)^n J_n(m)
    }
    if (m == 0.0) return order == 0 ? 1.0 : 0.0;
    if (m < 1e-3) return bessel_series(order, m);
    return bessel_miller(order, m);
}

double dawson(double x) {
    if (x == 0.0) return 0.0;
    const double ax = std::abs(x);
    if (ax <= 4.2) {
        // F(x) = sum_k (-2)^k x^{2k+1} / (2k+1)!!
        double sum = 0.0;
        double term = x;
        for (int k = 1; k < 200; ++k) {
            sum += term;
            term *= -2.0 * x * x / (2 * k + 1);
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    // asymptotic series, sum to the smallest term
    double sum = 0.0;
    double term = 1.0 / (2.0 * x);
    for (int k = 0; k < 60; ++k) {
        sum += term;
        const double next = term * (2 * k + 1) / (2.0 * x * x);
        if (std::abs(next) >= std::abs(term) || std::abs(next) < 1e-18 * std::abs(sum))
            break;
        term = next;
    }
    return sum;
}

std::complex<double> faddeeva(std::complex<double> z) {
    const double x = z.real();
    const double y = z.imag();
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("faddeeva: argument must be finite");
    if (y < 0.0)
        throw std::domain_error("faddeeva: lower half-plane (Im z < 0) not supported");
    if (x < 0.0) return std::conj(faddeeva({-x, y}));  // w(-conj z) = conj(w(z))

    if (y == 0.0) return w_axis(x);
    if (y < 1e-6) return w_taylor_off_axis(x, y);
    if (x * x + y * y <= 56.25) return w_midpoint(x, y);
    return w_continued_fraction(z);
}

}  // namespace sqcomb::numerics
