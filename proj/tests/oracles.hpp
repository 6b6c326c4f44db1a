#pragma once

// Test-only reference implementations. None of these share code paths with
// the library under test.

#include <cstdint>
#include <random>
#include <utility>

namespace oracle {

using Wide = __int128;

inline std::uint64_t euclid(std::uint64_t a, std::uint64_t b) {
  return b == 0 ? a : euclid(b, a % b);
}

/// sum_{i=1}^{d} floor(i*b/a), literally.
inline Wide floor_sum(std::uint64_t a, std::uint64_t b, std::uint64_t d) {
  Wide total = 0;
  for (std::uint64_t i = 1; i <= d; ++i) {
    total += static_cast<Wide>(i) * b / a;
  }
  return total;
}

/// sum_{i=0}^{n-1} floor((a*i + c)/m), the offset-form recursion.
/// Unrelated algorithm to the reciprocity-based evaluator.
inline Wide offset_floor_sum(Wide n, Wide m, Wide a, Wide c) {
  Wide ans = 0;
  while (true) {
    if (a >= m) {
      ans += (n - 1) * n / 2 * (a / m);
      a %= m;
    }
    if (c >= m) {
      ans += n * (c / m);
      c %= m;
    }
    Wide y_max = a * n + c;
    if (y_max < m) {
      break;
    }
    n = y_max / m;
    c = y_max % m;
    std::swap(m, a);
  }
  return ans;
}

inline Wide floor_sum_offset(std::uint64_t a, std::uint64_t b, std::uint64_t d) {
  return offset_floor_sum(static_cast<Wide>(d) + 1, a, b, 0);
}

/// Number of (x, y) >= 0 with ax + by = n by search over x.
inline std::uint64_t denumerant(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; a * x <= n; ++x) {
    if ((n - a * x) % b == 0) {
      ++count;
    }
  }
  return count;
}

/// Number of (x, y, z) >= 0 with ax + by + z = n, triple loop over (x, y).
inline std::uint64_t lattice3(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; a * x <= n; ++x) {
    for (std::uint64_t y = 0; a * x + b * y <= n; ++y) {
      ++count;
    }
  }
  return count;
}

/// Legendre symbol by exhaustive search for a square root.
inline int legendre_by_squares(std::int64_t a, std::uint64_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) {
    r += static_cast<std::int64_t>(p);
  }
  if (r == 0) {
    return 0;
  }
  for (std::uint64_t x = 1; x < p; ++x) {
    if (x * x % p == static_cast<std::uint64_t>(r)) {
      return 1;
    }
  }
  return -1;
}

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      return false;
    }
  }
  return true;
}

/// Jacobi symbol from trial-division factorization and square search.
inline int jacobi(std::int64_t a, std::uint64_t b) {
  int result = 1;
  for (std::uint64_t f = 3; b > 1; f += 2) {
    if (f * f > b) {
      f = b;
    }
    while (b % f == 0) {
      result *= legendre_by_squares(a, f);
      b /= f;
    }
  }
  return result;
}

}  // namespace oracle
