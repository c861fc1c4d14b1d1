#pragma once

#include <cstdint>

#include "fibercone/error.hpp"

namespace fibercone::modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t pow(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint32_t out = 1 % p;
  while (e) {
    if (e & 1) out = mul(out, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return out;
}

/// Inverse by Fermat; p must be prime and a nonzero.
inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) fail(ErrorCode::InvalidArgument, "inverse of zero");
  return pow(a, p - 2, p);
}

inline std::uint32_t from_signed(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

bool is_prime(std::uint32_t p);

inline void require_odd_prime(std::uint32_t p) {
  // Products of coefficients are reduced in 64 bits, so p < 2^31 keeps sums safe.
  require(p > 2 && p < (1u << 31) && is_prime(p), "prime must be an odd prime below 2^31");
}

}  // namespace fibercone::modp
