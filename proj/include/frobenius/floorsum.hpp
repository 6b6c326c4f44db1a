#pragma once

#include <cstdint>

#include "frobenius/core.hpp"

namespace frobenius {

/// Query for S(a, b, d) = sum_{i=1}^{d} floor(i*b / a).
/// `a` is the modulus, `b` the multiplier, `d` the upper index.
class FloorSumQuery {
 public:
  FloorSumQuery(Nat modulus, Nat multiplier, Nat upper);

  Nat modulus() const noexcept { return modulus_; }
  Nat multiplier() const noexcept { return multiplier_; }
  Nat upper() const noexcept { return upper_; }

  friend bool operator==(const FloorSumQuery&, const FloorSumQuery&) = default;

 private:
  Nat modulus_;
  Nat multiplier_;
  Nat upper_;
};

struct FloorSum {
  FloorSumQuery query;
  BigInt value;
};

/// Result of the fast evaluator with the number of reduction steps taken.
struct FastEvaluation {
  FloorSum sum;
  std::uint32_t steps = 0;
};

/// Term-by-term summation, O(d).
FloorSum floor_sum_naive(const FloorSumQuery& q);

/// Euclid-like evaluation in O(log max(a, b)) reduction steps.
///
/// Each step is one of:
///   R1  b >= a: b = qa + r, add q*d(d+1)/2 and continue with b = r;
///   R2  d >= a: strip whole periods using floor((i+a)b/a) = b + floor(ib/a);
///   R3  b, d < a: S(a,b,d) = dK - S(b,a,K) with K = floor(bd/a).
/// Evaluation stops when b, d or K reach zero. A common factor of a and b is
/// divided out first, since floor(i*gb'/ga') = floor(ib'/a').
FloorSum floor_sum_fast(const FloorSumQuery& q);
FastEvaluation floor_sum_fast_with_steps(const FloorSumQuery& q);

/// Convenience wrapper: S(a, b, d) via the fast evaluator.
BigInt floor_sum(Nat a, Nat b, Nat d);

/// S(a,b,d) + S(b,a,K) - dK with K = floor(bd/a), from naive sums.
/// Requires 1 <= b < a, 1 <= d < a, gcd(a, b) = 1. Expected to be 0.
BigInt reciprocity_residual(Nat a, Nat b, Nat d);

/// S(a,b,floor(a/2)) + S(b,a,floor(b/2)) - floor(a/2)floor(b/2).
/// Requires a, b >= 1 coprime. Expected to be 0.
BigInt strong_residual(Nat a, Nat b);

/// sum_{i<=(p-1)/2} floor(iq/p) + sum_{i<=(q-1)/2} floor(ip/q) - (p-1)(q-1)/4.
/// Requires p, q odd, coprime and distinct. Expected to be 0.
BigInt gauss_residual(Nat p, Nat q);

}  // namespace frobenius
