#pragma once

// Kernel machinery. A KernelSpec carries the density together with the
// antiderivatives that make convolution against piecewise-constant
// slope processes exact:
//   K(u) = int_{-1}^u k,  M(u) = int_{-1}^u v k(v) dv,
//   V(u) = int_{-1}^u v^2 k(v) dv,
// plus the scalar second moment V(1) and roughness int k^2.
//
// The boundary coefficients phi(s), psi(s) solve
//   phi K(s) + psi M(s) = 1,   phi M(s) + psi V(s) = 0,
// so the corrected kernel phi k(u) + psi u k(u) integrates to one with
// vanishing first moment over the truncated window.

#include <cmath>
#include <functional>
#include <stdexcept>

#include "monohaz/numeric.hpp"

namespace monohaz {

struct KernelSpec {
  std::function<double(double)> density;
  std::function<double(double)> derivative;             // k'
  std::function<double(double)> antiderivative;         // K
  std::function<double(double)> first_moment_integral;  // M
  std::function<double(double)> second_moment_integral; // V
  double second_moment = 0.0;
  double roughness = 0.0;
};

// Triweight kernel k(u) = (35/32)(1-u^2)^3 on [-1,1]. All integrals are
// polynomials, so the convolutions downstream need no quadrature.
inline KernelSpec triweight() {
  KernelSpec k;
  k.density = [](double u) {
    if (u < -1.0 || u > 1.0) return 0.0;
    double w = 1.0 - u * u;
    return 35.0 / 32.0 * w * w * w;
  };
  k.derivative = [](double u) {
    if (u < -1.0 || u > 1.0) return 0.0;
    double w = 1.0 - u * u;
    return -105.0 / 16.0 * u * w * w;
  };
  k.antiderivative = [](double u) {
    if (u <= -1.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double u2 = u * u;
    double p = u * (1.0 + u2 * (-1.0 + u2 * (0.6 - u2 / 7.0)));
    return 35.0 / 32.0 * (p + 16.0 / 35.0);
  };
  k.first_moment_integral = [](double u) {
    if (u <= -1.0 || u >= 1.0) return 0.0;
    double u2 = u * u;
    double p = u2 * (0.5 + u2 * (-0.75 + u2 * (0.5 - u2 / 8.0)));
    return 35.0 / 32.0 * (p - 0.125);
  };
  k.second_moment_integral = [](double u) {
    if (u <= -1.0) return 0.0;
    if (u >= 1.0) return 1.0 / 9.0;
    double u2 = u * u;
    double p = u * u2 * (1.0 / 3.0 + u2 * (-0.6 + u2 * (3.0 / 7.0 - u2 / 9.0)));
    return 35.0 / 32.0 * (p + 16.0 / 315.0);
  };
  k.second_moment = 1.0 / 9.0;
  k.roughness = 350.0 / 429.0;
  return k;
}

// Fallback for kernels without closed-form antiderivatives: integrals
// are filled in by adaptive quadrature at tolerance 1e-9.
inline KernelSpec kernel_from_density(std::function<double(double)> density,
                                      std::function<double(double)> derivative) {
  KernelSpec k;
  k.density = density;
  k.derivative = std::move(derivative);
  k.antiderivative = [density](double u) {
    if (u <= -1.0) return 0.0;
    return adaptive_simpson(density, -1.0, std::min(u, 1.0), 1e-9);
  };
  k.first_moment_integral = [density](double u) {
    if (u <= -1.0) return 0.0;
    return adaptive_simpson([&](double v) { return v * density(v); }, -1.0,
                            std::min(u, 1.0), 1e-9);
  };
  k.second_moment_integral = [density](double u) {
    if (u <= -1.0) return 0.0;
    return adaptive_simpson([&](double v) { return v * v * density(v); }, -1.0,
                            std::min(u, 1.0), 1e-9);
  };
  k.second_moment = k.second_moment_integral(1.0);
  k.roughness = adaptive_simpson(
      [&](double v) { return density(v) * density(v); }, -1.0, 1.0, 1e-9);
  return k;
}

struct BoundaryCoefficients {
  double s = 1.0;
  double phi = 1.0;
  double psi = 0.0;
};

inline BoundaryCoefficients boundary_coefficients(const KernelSpec& k,
                                                  double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("boundary_coefficients: s must lie in [0,1]");
  }
  double K = k.antiderivative(s);
  double M = k.first_moment_integral(s);
  double V = k.second_moment_integral(s);
  double det = K * V - M * M;
  if (!(std::fabs(det) > 1e-300)) {
    throw std::domain_error("boundary_coefficients: singular moment system");
  }
  return {s, V / det, -M / det};
}

}  // namespace monohaz
