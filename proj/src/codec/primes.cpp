#include "mmk/codec/primes.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace mmk::codec {

namespace {

std::shared_mutex g_mutex;
std::vector<std::uint32_t> g_primes;  // append-only

void extend_to(std::size_t count) {
  // Upper bound on the count-th prime: n(ln n + ln ln n) for n >= 6.
  double n = static_cast<double>(count < 6 ? 6 : count);
  auto bound = static_cast<std::size_t>(n * (std::log(n) + std::log(std::log(n))) * 1.2) + 16;
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::size_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::size_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  if (primes.size() < count) throw std::logic_error("prime bound estimate too small");
  g_primes = std::move(primes);
}

}  // namespace

std::uint32_t nth_prime(std::uint32_t i) {
  if (i == 0) throw std::domain_error("prime index is 1-based");
  {
    std::shared_lock lock(g_mutex);
    if (i <= g_primes.size()) return g_primes[i - 1];
  }
  std::unique_lock lock(g_mutex);
  if (i > g_primes.size()) extend_to(i * 2);
  return g_primes[i - 1];
}

}  // namespace mmk::codec
