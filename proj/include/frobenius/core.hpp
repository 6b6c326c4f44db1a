#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobenius {

using Nat = std::uint64_t;
using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Largest value accepted for user-facing parameters (a, b, d, k, n).
inline constexpr Nat kMaxInput = (Nat{1} << 31) - 1;

/// Thrown when an operation's preconditions are violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DomainError naming `what` if `value` exceeds kMaxInput.
void require_in_range(Nat value, const char* what);

/// Validated pair of positive coprime integers.
class CoprimePair {
 public:
  CoprimePair(Nat a, Nat b);

  Nat a() const noexcept { return a_; }
  Nat b() const noexcept { return b_; }

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;

 private:
  Nat a_;
  Nat b_;
};

/// Coprime pair with both entries odd.
class OddCoprimePair : public CoprimePair {
 public:
  OddCoprimePair(Nat a, Nat b);
};

struct ExtendedGcd {
  Nat g;
  Int x;
  Int y;
};

struct PrimePower {
  Nat prime;
  Nat multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

Nat gcd(Nat a, Nat b) noexcept;

/// Bezout certificate: a*x + b*y == g. Rejects a == b == 0.
ExtendedGcd extended_gcd(Nat a, Nat b);

/// Inverse of a modulo m in [0, m). mod_inverse(a, 1) == 0.
Nat mod_inverse(Nat a, Nat m);

Nat mul_mod(Nat x, Nat y, Nat m) noexcept;
Nat pow_mod(Nat base, Nat exp, Nat m);

/// Deterministic Miller-Rabin; exact for every 64-bit n.
bool is_prime(Nat n) noexcept;

/// Trial division. Primes are nondecreasing; factorize(1) is empty.
std::vector<PrimePower> factorize(Nat n);

BigInt to_big(__int128 v);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace frobenius
