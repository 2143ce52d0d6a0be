#include "window.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace tgx {

double epsilon(std::uint64_t n, std::uint64_t m) {
  if (n < 3) fail(Errc::Domain, "epsilon: n must be at least 3");
  if (m < n) fail(Errc::Domain, "epsilon: m must be at least n");
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_m = std::log(static_cast<double>(m));
  return ln_n / (1.0 + ln_m - ln_n);
}

std::int64_t tau(std::uint64_t n, std::uint64_t m, std::uint32_t c) {
  if (c < 1) fail(Errc::Domain, "tau: c must be at least 1");
  const double ln_n = std::log(static_cast<double>(n));
  const double raw =
      epsilon(n, m) * static_cast<double>(m) + static_cast<double>(n) * ln_n * ln_n;
  return static_cast<std::int64_t>(c) * static_cast<std::int64_t>(std::ceil(raw));
}

std::int64_t round_budget(std::uint64_t n_map, std::uint64_t m_map,
                          std::uint32_t c) {
  const std::uint64_t n = std::max<std::uint64_t>(n_map, 3);
  const std::uint64_t m = std::max<std::uint64_t>(m_map, n);
  return tau(n, m, c);
}

bool check_log_inequality(double x, std::uint64_t n) {
  if (!(x > 0.0)) fail(Errc::Domain, "check_log_inequality: x must be positive");
  if (n < 3) fail(Errc::Domain, "check_log_inequality: n must be at least 3");
  const double nd = static_cast<double>(n);
  return std::log(nd) < x * std::pow(nd, 1.0 / (2.0 * x));
}

}  // namespace tgx
