#pragma once

// Chebyshev polynomials of the first and second kind on [1, inf), allowing
// real (half-integer) orders, plus the exponential substitution
// 2(1+alpha) = r + 1/r used by the shifted cycle Green's functions.
//
// With x = cosh(theta), r = e^theta:
//   T_nu(x) = cosh(nu theta),   U_nu(x) = sinh((nu+1) theta) / sinh(theta).

#include <cmath>
#include <stdexcept>

namespace greenfn {

struct SpectralParameter {
  double alpha;
  double r;      // >= 1, root of r + 1/r = 2(1 + alpha)
  double theta;  // ln r
};

inline SpectralParameter param_from_alpha(double alpha) {
  if (alpha < 0.0)
    throw std::domain_error("param_from_alpha requires alpha >= 0");
  double s = std::sqrt(alpha * (alpha + 2.0));
  // log1p keeps theta accurate down to alpha ~ 1e-300 (theta ~ sqrt(2 alpha)).
  return SpectralParameter{alpha, 1.0 + alpha + s, std::log1p(alpha + s)};
}

namespace detail {

// base^e by squaring, e >= 0; O(log e) multiplies.
inline double pow_integer(double base, long long e) {
  double acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

// r^nu: binary exponentiation for integer orders, exp(nu theta) otherwise.
inline double r_power(double nu, double r, double theta) {
  if (std::nearbyint(nu) == nu && std::abs(nu) < 9.0e15) {
    long long e = static_cast<long long>(nu);
    double p = pow_integer(r, e < 0 ? -e : e);
    return e < 0 ? 1.0 / p : p;
  }
  return std::exp(nu * theta);
}

}  // namespace detail

inline double cheb_t(double nu, double x) {
  if (x < 1.0) throw std::domain_error("cheb_t is implemented for x >= 1 only");
  double theta = std::acosh(x);
  if (theta < 1e-8) {
    double nt = nu * theta;  // cosh series; next term is O((nu theta)^4)
    return 1.0 + 0.5 * nt * nt;
  }
  double rho = detail::r_power(std::abs(nu), std::exp(theta), theta);
  return 0.5 * (rho + 1.0 / rho);
}

inline double cheb_u(double nu, double x) {
  if (x < 1.0) throw std::domain_error("cheb_u is implemented for x >= 1 only");
  double theta = std::acosh(x);
  double mu = nu + 1.0;
  if (theta < 1e-8) {
    // sinh(mu theta)/sinh(theta) expanded at theta -> 0; exact limit mu at 0
    return mu * (1.0 + (mu * mu - 1.0) * theta * theta / 6.0);
  }
  double rho = detail::r_power(mu, std::exp(theta), theta);
  return (rho - 1.0 / rho) / (2.0 * std::sinh(theta));
}

// T_{m/2-a}(1+alpha) / (alpha (alpha+2) U_{m/2-1}(1+alpha)), the ratio the
// shifted cycle Green's function is built from. Factoring the dominant
// exponentials first keeps every intermediate in [0, 1]:
//
//   ratio = (e^{-a theta} + e^{-(m-a) theta}) / (sinh(theta) (1 - e^{-m theta}))
//
// whereas r^{m/2} on its own overflows once m theta exceeds ~1420. Also even
// in a <-> m-a by inspection, matching the cycle's distance symmetry.
inline double cheb_shift_ratio(double m, double a, const SpectralParameter& p) {
  if (!(p.theta > 0.0))
    throw std::domain_error("cheb_shift_ratio has a pole at alpha = 0");
  double denom = std::sinh(p.theta) * (-std::expm1(-m * p.theta));
  return (std::exp(-a * p.theta) + std::exp(-(m - a) * p.theta)) / denom;
}

}  // namespace greenfn
