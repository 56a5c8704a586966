#pragma once

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace greenfn {

inline constexpr double kPi = std::numbers::pi;

inline std::complex<double> cis(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

// Extracts the real part of a sum that is real on paper. `scale` should be
// an upper bound on the magnitudes that entered the sum, so the tolerance
// tracks accumulated rounding rather than a fixed absolute figure.
inline double checked_real(std::complex<double> z, double scale,
                           double tol = 1e-9) {
  double bound = tol * (scale > 1.0 ? scale : 1.0);
  if (!(std::abs(z.imag()) <= bound))
    throw std::runtime_error("imaginary residue " + std::to_string(z.imag()) +
                             " exceeds tolerance; sum should be real");
  return z.real();
}

// Runs body(i) for i in [0, count). threads <= 1 stays on the calling thread
// so timing runs are reproducible.
template <class Body>
void parallel_for(int count, int threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  if (threads > count) threads = count;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::exception_ptr error;  // first failure wins, the rest are dropped
  std::mutex guard;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < count; i += threads) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Row-major multi-index walk over mixed radices; f sees the same buffer on
// every call. Skips nothing: callers filter the all-zero index themselves.
template <class F>
void for_each_index(const std::vector<int>& dims, F&& f) {
  std::vector<int> idx(dims.size(), 0);
  for (;;) {
    f(idx);
    int pos = static_cast<int>(dims.size()) - 1;
    while (pos >= 0 && ++idx[pos] == dims[pos]) idx[pos--] = 0;
    if (pos < 0) return;
  }
}

}  // namespace greenfn
