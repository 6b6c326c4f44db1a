#include "frobenius/coinproblem.hpp"

#include <string>
#include <string_view>

namespace frobenius {

namespace {

using Wide = __int128;

// Smallest x >= 0 with ax = n (mod b).
Nat residue_x0(const CoprimePair& p, Nat inverse, Nat n) {
  return mul_mod(n % p.b(), inverse, p.b());
}

Nat inverse_of_a(const CoprimePair& p) { return mod_inverse(p.a() % p.b(), p.b()); }

BigInt big(Nat v) { return BigInt(v); }

}  // namespace

Int frobenius_number(const CoprimePair& p) {
  return static_cast<Int>(p.a() * p.b()) - static_cast<Int>(p.a()) -
         static_cast<Int>(p.b());
}

bool is_representable(const CoprimePair& p, Nat n) {
  require_in_range(n, "n");
  Nat x0 = residue_x0(p, inverse_of_a(p), n);
  return static_cast<Wide>(p.a()) * x0 <= static_cast<Wide>(n);
}

RepCount representation_count(const CoprimePair& p, Nat n) {
  require_in_range(n, "n");
  Nat x0 = residue_x0(p, inverse_of_a(p), n);
  Wide used = static_cast<Wide>(p.a()) * x0;
  if (used > static_cast<Wide>(n)) {
    return {n, 0};
  }
  Wide period = static_cast<Wide>(p.a()) * p.b();
  return {n, static_cast<Nat>((static_cast<Wide>(n) - used) / period + 1)};
}

bool rep_count_shift_check(const CoprimePair& p, Nat n) {
  require_in_range(n, "n");
  // n + ab can exceed the input range, so evaluate the shifted count inline.
  Nat x0 = residue_x0(p, inverse_of_a(p), n);
  Wide used = static_cast<Wide>(p.a()) * x0;
  Wide shifted = static_cast<Wide>(n) + static_cast<Wide>(p.a()) * p.b();
  Nat shifted_count =
      used > shifted ? 0
                     : static_cast<Nat>((shifted - used) /
                                            (static_cast<Wide>(p.a()) * p.b()) +
                                        1);
  return shifted_count == representation_count(p, n).count + 1;
}

Nat count_representable_upto(const CoprimePair& p, Int k) {
  if (k < 0) {
    return 0;
  }
  require_in_range(static_cast<Nat>(k), "k");
  Nat inverse = inverse_of_a(p);
  Nat count = 0;
  for (Nat n = 0; n <= static_cast<Nat>(k); ++n) {
    if (p.a() * residue_x0(p, inverse, n) <= n) {
      ++count;
    }
  }
  return count;
}

BigInt count_lattice_3var(const CoprimePair& p, Nat total) {
  Wide count = 0;
  for (Nat x = 0; x <= total / p.a(); ++x) {
    count += (total - p.a() * x) / p.b() + 1;
  }
  return to_big(count);
}

BestFamilyPoint best_family_point(const CoprimePair& p, Nat alpha) {
  const Nat a = p.a();
  const Nat b = p.b();
  if (b >= a) {
    throw DomainError("best_family_point requires b < a");
  }
  if (alpha == 0 || alpha >= a) {
    throw DomainError("best_family_point requires 0 < alpha < a");
  }
  if (alpha % 2 != a % 2) {
    throw DomainError("best_family_point requires alpha = a (mod 2)");
  }
  Int beta = 2 * static_cast<Int>(b * (alpha + a) / (2 * a)) - static_cast<Int>(b);
  Int twice_k = static_cast<Int>(b * alpha) + static_cast<Int>(a) * beta;
  Int twice_n0 = static_cast<Int>(alpha + 1) * (beta + 1);
  return {alpha, beta, twice_k / 2, static_cast<Nat>(twice_n0 / 2)};
}

std::vector<BestFamilyPoint> best_family(const CoprimePair& p) {
  std::vector<BestFamilyPoint> rows;
  for (Nat alpha = 2 - p.a() % 2; alpha < p.a(); alpha += 2) {
    rows.push_back(best_family_point(p, alpha));
  }
  return rows;
}

Best2Count best2_count(const CoprimePair& p, Nat d) {
  const Nat a = p.a();
  const Nat b = p.b();
  if (b >= a) {
    throw DomainError("best2_count requires b < a");
  }
  if (2 * d <= a || d >= a) {
    throw DomainError("best2_count requires a/2 < d < a");
  }
  Int k_floor = static_cast<Int>(b * d / a);
  Int k = static_cast<Int>(b * d) + static_cast<Int>(a) * k_floor -
          static_cast<Int>(a * b);
  Int twice_n0 = (2 * static_cast<Int>(d) - static_cast<Int>(a) + 1) *
                 (2 * k_floor - static_cast<Int>(b) + 1);
  return {k, static_cast<Nat>(twice_n0 / 2)};
}

NonRepSet nonrepresentable_set(const CoprimePair& p) {
  NonRepSet set{p, {}};
  Int frobenius = frobenius_number(p);
  if (frobenius < 0) {
    return set;
  }
  set.gaps.reserve((p.a() - 1) * (p.b() - 1) / 2);
  Nat inverse = inverse_of_a(p);
  for (Nat n = 0; n <= static_cast<Nat>(frobenius); ++n) {
    if (p.a() * residue_x0(p, inverse, n) > n) {
      set.gaps.push_back(n);
    }
  }
  return set;
}

BigInt sylvester_sum(const CoprimePair& p) {
  BigInt a = big(p.a());
  BigInt b = big(p.b());
  return (a - 1) * (b - 1) * (2 * a * b - a - b - 1) / 12;
}

BigInt sylvester_square_sum(const CoprimePair& p) {
  BigInt a = big(p.a());
  BigInt b = big(p.b());
  return (a - 1) * (b - 1) * a * b * (a * b - a - b) / 12;
}

BigInt sylvester_sum_power(const NonRepSet& set, Nat m) {
  BigInt total = 0;
  for (Nat gap : set.gaps) {
    total += boost::multiprecision::pow(big(gap), static_cast<unsigned>(m));
  }
  return total;
}

BigInt sylvester_sum_power(const CoprimePair& p, Nat m) {
  return sylvester_sum_power(nonrepresentable_set(p), m);
}

ExactRational weighted_sylvester_sum(const CoprimePair& p,
                                     const ExactRational& lambda, Nat m) {
  if (lambda == 0) {
    throw DomainError("weighted_sylvester_sum requires lambda != 0");
  }
  ExactRational total = 0;
  ExactRational weight = 1;  // lambda^(n-1)
  Nat exponent = 1;
  for (Nat gap : nonrepresentable_set(p).gaps) {
    // 0 is representable, so every gap is >= 1.
    for (; exponent < gap; ++exponent) {
      weight *= lambda;
    }
    total += weight * ExactRational(boost::multiprecision::pow(
                          big(gap), static_cast<unsigned>(m)));
  }
  return total;
}

ExactRational parse_rational(const std::string& text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) {
      throw DomainError("malformed rational '" + text + "'");
    }
    std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
    if (start == part.size()) {
      throw DomainError("malformed rational '" + text + "'");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw DomainError("malformed rational '" + text + "'");
      }
    }
    return BigInt(std::string(part.front() == '+' ? part.substr(1) : part));
  };
  std::string_view view(text);
  auto slash = view.find('/');
  if (slash == std::string_view::npos) {
    return ExactRational(parse_int(view));
  }
  BigInt num = parse_int(view.substr(0, slash));
  BigInt den = parse_int(view.substr(slash + 1));
  if (den == 0) {
    throw DomainError("rational '" + text + "' has zero denominator");
  }
  return ExactRational(num, den);
}

std::string format_rational(const ExactRational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

}  // namespace frobenius
