#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobenius/core.hpp"

namespace frobenius {

using ExactRational = boost::multiprecision::cpp_rational;

/// Number of (x, y) >= 0 with ax + by = n.
struct RepCount {
  Nat n;
  Nat count;
};

/// Gaps (nonrepresentable naturals) of the semigroup generated by a and b.
struct NonRepSet {
  CoprimePair pair;
  std::vector<Nat> gaps;  // ascending
};

/// A point of the closed-form family N0(a, b; (b*alpha + a*beta)/2).
struct BestFamilyPoint {
  Nat alpha;
  Int beta;
  Int k;
  Nat n0;
};

struct Best2Count {
  Int k;
  Nat n0;
};

/// ab - a - b; negative when a or b is 1.
Int frobenius_number(const CoprimePair& p);

/// O(1): with x0 = n * a^{-1} mod b, n is representable iff a*x0 <= n.
bool is_representable(const CoprimePair& p, Nat n);

RepCount representation_count(const CoprimePair& p, Nat n);

/// N(n + ab) == N(n) + 1.
bool rep_count_shift_check(const CoprimePair& p, Nat n);

/// N0(a, b; k): representable n with 0 <= n <= k (n = 0 included). 0 for k < 0.
Nat count_representable_upto(const CoprimePair& p, Int k);

/// Solutions (x, y, z) >= 0 of ax + by + z = total.
BigInt count_lattice_3var(const CoprimePair& p, Nat total);

/// Requires b < a, 0 < alpha < a and alpha = a (mod 2).
BestFamilyPoint best_family_point(const CoprimePair& p, Nat alpha);

/// All valid alpha for the pair in ascending order.
std::vector<BestFamilyPoint> best_family(const CoprimePair& p);

/// k = bd + aK - ab and n0 = (2d - a + 1)(2K - b + 1)/2 with K = floor(bd/a).
/// Requires b < a and a/2 < d < a.
Best2Count best2_count(const CoprimePair& p, Nat d);

/// Empty when a or b is 1.
NonRepSet nonrepresentable_set(const CoprimePair& p);

/// (a-1)(b-1)(2ab-a-b-1)/12.
BigInt sylvester_sum(const CoprimePair& p);

/// (a-1)(b-1)ab(ab-a-b)/12.
BigInt sylvester_square_sum(const CoprimePair& p);

/// sum of n^m over the gaps, by enumeration.
BigInt sylvester_sum_power(const CoprimePair& p, Nat m);
BigInt sylvester_sum_power(const NonRepSet& set, Nat m);

/// sum of lambda^(n-1) n^m over the gaps, by enumeration. Rejects lambda = 0.
ExactRational weighted_sylvester_sum(const CoprimePair& p,
                                     const ExactRational& lambda, Nat m);

/// Parses "p/q" or "p" into a reduced rational; rejects zero denominators.
ExactRational parse_rational(const std::string& text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const ExactRational& value);

}  // namespace frobenius
