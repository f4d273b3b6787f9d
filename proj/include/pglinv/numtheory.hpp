#pragma once

// Small-integer arithmetic functions used by the field constructors and the
// invariant counting formulas. Everything here works on 64-bit integers and
// uses trial division, which is plenty for the sizes this library targets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pglinv {

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [pr, e] : factorize(n)) out.push_back(pr);
  return out;
}

/// All positive divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [pr, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= pr;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  std::int64_t r = n;
  for (auto [pr, e] : factorize(static_cast<std::uint64_t>(n)))
    r = r / static_cast<std::int64_t>(pr) * (static_cast<std::int64_t>(pr) - 1);
  return r;
}

inline int moebius_mu(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius_mu: n must be >= 1");
  int mu = 1;
  for (auto [pr, e] : factorize(static_cast<std::uint64_t>(n))) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

/// Principal Dirichlet character modulo D: 1 when gcd(D, n) = 1, else 0.
inline int principal_character(std::int64_t D, std::int64_t n) {
  if (D < 1 || n < 1) throw std::invalid_argument("principal_character: arguments must be >= 1");
  return std::gcd(D, n) == 1 ? 1 : 0;
}

/// Generalized Moebius inversion for a completely multiplicative chi:
/// if L(n) = sum_{d|n} chi(d) K(n/d) then K(n) = sum_{d|n} chi(d) mu(d) L(n/d).
inline std::int64_t mobius_inversion(const std::function<std::int64_t(std::int64_t)>& chi,
                                     const std::function<std::int64_t(std::int64_t)>& L,
                                     std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mobius_inversion: n must be >= 1");
  std::int64_t k = 0;
  for (auto d : divisors(static_cast<std::uint64_t>(n))) {
    const auto dd = static_cast<std::int64_t>(d);
    const int mu = moebius_mu(dd);
    if (mu == 0) continue;
    k += chi(dd) * mu * L(n / dd);
  }
  return k;
}

/// base^e with overflow detection.
inline std::int64_t checked_pow(std::int64_t base, std::uint64_t e) {
  std::int64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("checked_pow: overflow");
  }
  return r;
}

}  // namespace pglinv
