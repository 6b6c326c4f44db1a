#include "frobenius/floorsum.hpp"

#include <string>

namespace frobenius {

namespace {

using Wide = __int128;

Wide naive_sum(Nat a, Nat b, Nat d) {
  Wide total = 0;
  for (Nat i = 1; i <= d; ++i) {
    total += static_cast<Wide>(i) * b / a;
  }
  return total;
}

}  // namespace

FloorSumQuery::FloorSumQuery(Nat modulus, Nat multiplier, Nat upper)
    : modulus_(modulus), multiplier_(multiplier), upper_(upper) {
  if (modulus == 0) {
    throw DomainError("floor sum modulus a must be >= 1");
  }
  require_in_range(modulus, "a");
  require_in_range(multiplier, "b");
  require_in_range(upper, "d");
}

FloorSum floor_sum_naive(const FloorSumQuery& q) {
  return {q, to_big(naive_sum(q.modulus(), q.multiplier(), q.upper()))};
}

FastEvaluation floor_sum_fast_with_steps(const FloorSumQuery& q) {
  Wide a = q.modulus();
  Wide b = q.multiplier();
  Wide d = q.upper();
  if (Wide g = static_cast<Wide>(gcd(q.modulus(), q.multiplier())); g > 1) {
    a /= g;
    b /= g;
  }

  // value = acc + sign * S(a, b, d) is invariant across the loop.
  Wide acc = 0;
  Wide sign = 1;
  std::uint32_t steps = 0;
  while (d > 0 && b > 0) {
    if (b >= a) {  // R1
      Wide quotient = b / a;
      acc += sign * quotient * (d * (d + 1) / 2);
      b %= a;
      ++steps;
      if (b == 0) {
        break;
      }
    }
    if (d >= a) {  // R2
      Wide periods = d / a;
      Wide rest = d % a;
      // One full period: S(a, b, a) = (a-1)(b-1)/2 + b for coprime b < a.
      Wide period_sum = (a - 1) * (b - 1) / 2 + b;
      acc += sign * (a * b * (periods * (periods - 1) / 2) +
                     periods * period_sum + rest * periods * b);
      d = rest;
      ++steps;
      if (d == 0) {
        break;
      }
    }
    Wide k = b * d / a;  // R3
    if (k == 0) {
      break;
    }
    acc += sign * d * k;
    sign = -sign;
    Wide old_a = a;
    a = b;
    b = old_a;
    d = k;
    ++steps;
  }
  return {{q, to_big(acc)}, steps};
}

FloorSum floor_sum_fast(const FloorSumQuery& q) {
  return floor_sum_fast_with_steps(q).sum;
}

BigInt floor_sum(Nat a, Nat b, Nat d) {
  return floor_sum_fast(FloorSumQuery(a, b, d)).value;
}

BigInt reciprocity_residual(Nat a, Nat b, Nat d) {
  require_in_range(a, "a");
  if (b < 1 || b >= a || d < 1 || d >= a) {
    throw DomainError("reciprocity_residual requires 1 <= b < a and 1 <= d < a");
  }
  if (gcd(a, b) != 1) {
    throw DomainError("reciprocity_residual requires gcd(a, b) = 1");
  }
  Nat k = b * d / a;
  Wide residual = naive_sum(a, b, d) + naive_sum(b, a, k) -
                  static_cast<Wide>(d) * static_cast<Wide>(k);
  return to_big(residual);
}

BigInt strong_residual(Nat a, Nat b) {
  CoprimePair pair(a, b);
  Nat half_a = pair.a() / 2;
  Nat half_b = pair.b() / 2;
  Wide residual = naive_sum(a, b, half_a) + naive_sum(b, a, half_b) -
                  static_cast<Wide>(half_a) * static_cast<Wide>(half_b);
  return to_big(residual);
}

BigInt gauss_residual(Nat p, Nat q) {
  OddCoprimePair pair(p, q);
  if (p == q) {
    // Only (1, 1) reaches here; the statement asks for distinct entries.
    throw DomainError("gauss_residual requires p != q");
  }
  Wide residual = naive_sum(p, q, (p - 1) / 2) + naive_sum(q, p, (q - 1) / 2) -
                  static_cast<Wide>(p - 1) * static_cast<Wide>(q - 1) / 4;
  return to_big(residual);
}

}  // namespace frobenius
