#include "frobenius/jacobi.hpp"

#include <string>

#include "frobenius/floorsum.hpp"

namespace frobenius {

namespace {

void require_odd_prime(Nat p) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw DomainError(std::to_string(p) + " is not an odd prime");
  }
}

Nat reduce(Int a, Nat m) {
  Int r = a % static_cast<Int>(m);
  return static_cast<Nat>(r < 0 ? r + static_cast<Int>(m) : r);
}

void require_lemma_inputs(Nat a, Nat b, Nat c) {
  if (a == 0 || b == 0 || c == 0 || a % 2 == 0 || b % 2 == 0 || c % 2 == 0) {
    throw DomainError("a, b, c must be odd positive integers");
  }
  if (gcd(a, b) != 1 || gcd(a, c) != 1) {
    throw DomainError("b and c must be coprime with a");
  }
  require_in_range(a, "a");
  require_in_range(b * c, "bc");
}

bool parity(const BigInt& v) { return boost::multiprecision::bit_test(v, 0); }

bool naive_parity(Nat modulus, Nat multiplier, Nat upper) {
  return parity(
      floor_sum_naive(FloorSumQuery(modulus, multiplier, upper)).value);
}

}  // namespace

SymbolValue::SymbolValue(int value) : value_(value) {
  if (value < -1 || value > 1) {
    throw DomainError("symbol value must be -1, 0 or 1");
  }
}

SymbolValue SymbolValue::sign_of_parity(bool odd) noexcept {
  SymbolValue out;
  out.value_ = odd ? -1 : 1;
  return out;
}

SymbolValue legendre_euler(Int a, Nat p) {
  require_odd_prime(p);
  Nat r = pow_mod(reduce(a, p), (p - 1) / 2, p);
  if (r == 0) {
    return SymbolValue(0);
  }
  return SymbolValue(r == 1 ? 1 : -1);
}

SymbolValue legendre_by_residue_table(Int a, Nat p) {
  require_odd_prime(p);
  Nat target = reduce(a, p);
  if (target == 0) {
    return SymbolValue(0);
  }
  for (Nat x = 1; x <= p / 2; ++x) {
    if (mul_mod(x, x, p) == target) {
      return SymbolValue(1);
    }
  }
  return SymbolValue(-1);
}

SymbolValue jacobi_by_definition(Int a, Nat b) {
  if (b == 0 || b % 2 == 0) {
    throw DomainError("Jacobi symbol requires an odd positive lower argument");
  }
  SymbolValue result = SymbolValue::one();
  for (const auto& [prime, multiplicity] : factorize(b)) {
    SymbolValue factor = legendre_euler(a, prime);
    for (Nat r = 0; r < multiplicity; ++r) {
      result = result * factor;
    }
  }
  return result;
}

SymbolValue jacobi_eisenstein(Nat a, Nat b) {
  OddCoprimePair pair(a, b);
  const BigInt exponent = floor_sum_fast(FloorSumQuery(b, a, (b - 1) / 2)).value;
  return SymbolValue::sign_of_parity(parity(exponent));
}

Nat gauss_lemma_count(Nat a, Nat p) {
  require_odd_prime(p);
  if (a % p == 0) {
    throw DomainError("gauss_lemma_count requires gcd(a, p) = 1");
  }
  Nat count = 0;
  for (Nat i = 1; i <= (p - 1) / 2; ++i) {
    // Residues are never p/2 exactly since p is odd.
    if (2 * mul_mod(i, a % p, p) > p) {
      ++count;
    }
  }
  return count;
}

Nat ge2_residual(Nat a, Nat b, Nat c) {
  require_lemma_inputs(a, b, c);
  const Nat h = (a - 1) / 2;
  bool lhs = naive_parity(a, b * c, h);
  bool rhs = naive_parity(a, b, h) != naive_parity(a, c, h);
  return lhs != rhs ? 1 : 0;
}

Nat ge1_residual(Nat a, Nat b, Nat c) {
  require_lemma_inputs(a, b, c);
  bool lhs = naive_parity(b * c, a, (b * c - 1) / 2);
  bool rhs = naive_parity(b, a, (b - 1) / 2) != naive_parity(c, a, (c - 1) / 2);
  return lhs != rhs ? 1 : 0;
}

bool jacobi_reciprocity_check(Nat a, Nat b) {
  OddCoprimePair pair(a, b);
  SymbolValue lhs = jacobi_eisenstein(a, b) * jacobi_eisenstein(b, a);
  bool odd_exponent = ((a - 1) / 2) % 2 == 1 && ((b - 1) / 2) % 2 == 1;
  return lhs == SymbolValue::sign_of_parity(odd_exponent);
}

}  // namespace frobenius
