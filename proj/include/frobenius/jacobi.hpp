#pragma once

#include "frobenius/core.hpp"

namespace frobenius {

/// Legendre/Jacobi symbol value, always one of -1, 0, +1.
class SymbolValue {
 public:
  constexpr SymbolValue() = default;
  explicit SymbolValue(int value);

  constexpr int value() const noexcept { return value_; }

  friend constexpr bool operator==(SymbolValue, SymbolValue) = default;
  friend constexpr SymbolValue operator*(SymbolValue x, SymbolValue y) noexcept {
    SymbolValue out;
    out.value_ = x.value_ * y.value_;
    return out;
  }

  static constexpr SymbolValue one() noexcept {
    SymbolValue out;
    out.value_ = 1;
    return out;
  }

  /// (-1)^exponent
  static SymbolValue sign_of_parity(bool odd) noexcept;

 private:
  int value_ = 1;
};

/// Euler's criterion a^((p-1)/2) mod p. Requires p an odd prime.
SymbolValue legendre_euler(Int a, Nat p);

/// Definitional: searches for x with x^2 = a (mod p). O(p); used as an
/// oracle for small p. Requires p an odd prime.
SymbolValue legendre_by_residue_table(Int a, Nat p);

/// Product of Legendre symbols over the factorization of b. Requires b odd.
SymbolValue jacobi_by_definition(Int a, Nat b);

/// (-1)^S(b, a, (b-1)/2) via the fast floor-sum evaluator.
/// Requires a, b odd, positive and coprime.
SymbolValue jacobi_eisenstein(Nat a, Nat b);

/// Number of i in [1, (p-1)/2] whose least positive residue of i*a mod p
/// exceeds p/2. Requires p an odd prime and gcd(a, p) = 1.
Nat gauss_lemma_count(Nat a, Nat p);

/// (S(a,bc,h) - S(a,b,h) - S(a,c,h)) mod 2 with h = (a-1)/2.
/// Requires a, b, c odd positive with gcd(a,b) = gcd(a,c) = 1. Expected 0.
Nat ge2_residual(Nat a, Nat b, Nat c);

/// (S(bc,a,(bc-1)/2) - S(b,a,(b-1)/2) - S(c,a,(c-1)/2)) mod 2.
/// Same preconditions as ge2_residual. Expected 0.
Nat ge1_residual(Nat a, Nat b, Nat c);

/// (a/b)(b/a) == (-1)^((a-1)(b-1)/4), both symbols via jacobi_eisenstein.
bool jacobi_reciprocity_check(Nat a, Nat b);

}  // namespace frobenius
