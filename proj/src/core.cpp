#include "frobenius/core.hpp"

#include <array>

namespace frobenius {

void require_in_range(Nat value, const char* what) {
  if (value > kMaxInput) {
    throw DomainError(std::string(what) + " = " + std::to_string(value) +
                      " exceeds 2^31-1");
  }
}

CoprimePair::CoprimePair(Nat a, Nat b) : a_(a), b_(b) {
  if (a == 0 || b == 0) {
    throw DomainError("coprime pair requires positive entries");
  }
  require_in_range(a, "a");
  require_in_range(b, "b");
  if (gcd(a, b) != 1) {
    throw DomainError("gcd(" + std::to_string(a) + ", " + std::to_string(b) +
                      ") != 1");
  }
}

OddCoprimePair::OddCoprimePair(Nat a, Nat b) : CoprimePair(a, b) {
  if (a % 2 == 0 || b % 2 == 0) {
    throw DomainError("odd coprime pair requires odd entries");
  }
}

BigInt to_big(__int128 v) {
  bool negative = v < 0;
  unsigned __int128 mag = negative
                              ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

Nat gcd(Nat a, Nat b) noexcept {
  while (b != 0) {
    Nat r = a % b;
    a = b;
    b = r;
  }
  return a;
}

ExtendedGcd extended_gcd(Nat a, Nat b) {
  if (a == 0 && b == 0) {
    throw DomainError("extended_gcd(0, 0) is undefined");
  }
  // Coefficients stay bounded by max(a, b) in magnitude.
  __int128 old_r = a, r = b;
  __int128 old_s = 1, s = 0;
  __int128 old_t = 0, t = 1;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {static_cast<Nat>(old_r), static_cast<Int>(old_s),
          static_cast<Int>(old_t)};
}

Nat mod_inverse(Nat a, Nat m) {
  if (m == 0) {
    throw DomainError("mod_inverse: modulus must be positive");
  }
  if (m == 1) {
    return 0;
  }
  auto [g, x, y] = extended_gcd(a % m, m);
  (void)y;
  if (g != 1) {
    throw DomainError("mod_inverse: gcd(" + std::to_string(a) + ", " +
                      std::to_string(m) + ") != 1");
  }
  __int128 r = static_cast<__int128>(x) % static_cast<__int128>(m);
  if (r < 0) {
    r += m;
  }
  return static_cast<Nat>(r);
}

Nat mul_mod(Nat x, Nat y, Nat m) noexcept {
  return static_cast<Nat>(static_cast<unsigned __int128>(x) * y % m);
}

Nat pow_mod(Nat base, Nat exp, Nat m) {
  if (m == 0) {
    throw DomainError("pow_mod: modulus must be positive");
  }
  Nat result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) {
      result = mul_mod(result, base, m);
    }
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(Nat n) noexcept {
  if (n < 2) {
    return false;
  }
  static constexpr std::array<Nat, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
  for (Nat p : kBases) {
    if (n % p == 0) {
      return n == p;
    }
  }
  Nat d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (Nat base : kBases) {
    Nat x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) {
      return false;
    }
  }
  return true;
}

std::vector<PrimePower> factorize(Nat n) {
  if (n == 0) {
    throw DomainError("factorize(0) is undefined");
  }
  std::vector<PrimePower> factors;
  auto strip = [&](Nat p) {
    Nat r = 0;
    while (n % p == 0) {
      n /= p;
      ++r;
    }
    if (r > 0) {
      factors.push_back({p, r});
    }
  };
  strip(2);
  for (Nat p = 3; p <= n / p; p += 2) {
    strip(p);
  }
  if (n > 1) {
    factors.push_back({n, 1});
  }
  return factors;
}

}  // namespace frobenius
