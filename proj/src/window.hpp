#ifndef TGX_WINDOW_HPP
#define TGX_WINDOW_HPP

#include <cstdint>

namespace tgx {

/// epsilon(n, m) = ln n / (1 + ln m - ln n), the exponent balancing
/// n^(1 + 1/epsilon) = e * m. Requires n >= 3 and m >= n.
double epsilon(std::uint64_t n, std::uint64_t m);

/// tau(n, m) = c * ceil(epsilon(n, m) * m + n * (ln n)^2). Evaluated in 64-bit
/// floating point, then ceiled exactly; desk-scale magnitudes stay far below
/// 2^53. Requires n >= 3, m >= n, c >= 1.
std::int64_t tau(std::uint64_t n, std::uint64_t m, std::uint32_t c);

/// Round budget used by the zero-hop explorer: tau evaluated on the agent's
/// partial map counts, clamped into tau's domain (the map can hold fewer than
/// three nodes early on). Monotonicity of tau keeps the clamped value at or
/// below tau(n, m, c) of the real instance.
std::int64_t round_budget(std::uint64_t n_map, std::uint64_t m_map,
                          std::uint32_t c);

/// Whether ln n < x * n^(1/(2x)). Holds for every x > 0, n >= 3; exists as a
/// property-test target.
bool check_log_inequality(double x, std::uint64_t n);

}  // namespace tgx

#endif
