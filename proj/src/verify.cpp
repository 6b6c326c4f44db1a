#include "frobenius/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "frobenius/coinproblem.hpp"
#include "frobenius/floorsum.hpp"
#include "frobenius/jacobi.hpp"

namespace frobenius {

namespace {

using Clock = std::chrono::steady_clock;
using Inputs = std::vector<std::pair<std::string, Int>>;

std::string render(const BigInt& v) { return v.str(); }
std::string render(Int v) { return std::to_string(v); }
std::string render(Nat v) { return std::to_string(v); }
std::string render(int v) { return std::to_string(v); }
std::string render(bool v) { return v ? "true" : "false"; }
std::string render(SymbolValue v) { return std::to_string(v.value()); }

class CheckRecorder {
 public:
  explicit CheckRecorder(std::string id)
      : id_(std::move(id)), start_(Clock::now()) {}

  template <typename Expected, typename Actual>
  void expect_equal(Inputs inputs, const Expected& expected,
                    const Actual& actual) {
    ++cases_;
    if (!(expected == actual)) {
      failures_.push_back({std::move(inputs), render(expected), render(actual)});
    }
  }

  // Failure when `ok` is false, rendered as expected/actual strings.
  void expect(Inputs inputs, bool ok, const std::string& expected,
              const std::string& actual) {
    ++cases_;
    if (!ok) {
      failures_.push_back({std::move(inputs), expected, actual});
    }
  }

  CheckResult finish() {
    CheckResult r;
    r.check_id = std::move(id_);
    r.cases_run = cases_;
    r.failures = std::move(failures_);
    std::sort(r.failures.begin(), r.failures.end(),
              [](const Failure& x, const Failure& y) {
                return x.inputs < y.inputs;
              });
    r.elapsed = Clock::now() - start_;
    return r;
  }

 private:
  std::string id_;
  Clock::time_point start_;
  Nat cases_ = 0;
  std::vector<Failure> failures_;
};

BigInt naive(Nat a, Nat b, Nat d) {
  return floor_sum_naive(FloorSumQuery(a, b, d)).value;
}

bool in_grid(const GridSpec& g, Nat a, Nat b) {
  if (g.odd_only && (a % 2 == 0 || b % 2 == 0)) {
    return false;
  }
  return !g.coprime_only || gcd(a, b) == 1;
}

// Coprime pairs from the grid, honoring odd_only.
template <typename Fn>
void for_each_coprime_pair(const GridSpec& g, Fn&& fn) {
  for (Nat a = 1; a <= g.a_max; ++a) {
    for (Nat b = 1; b <= g.b_max; ++b) {
      if (gcd(a, b) == 1 && in_grid(g, a, b)) {
        fn(CoprimePair(a, b));
      }
    }
  }
}

Nat random_below(std::mt19937_64& rng, Nat lo, Nat hi) {
  return std::uniform_int_distribution<Nat>(lo, hi)(rng);
}

Nat random_odd(std::mt19937_64& rng) {
  return random_below(rng, 0, kSampleLimit / 2 - 1) * 2 + 1;
}

}  // namespace

void GridSpec::validate() const {
  if (a_max < 2 || b_max < 2) {
    throw DomainError("grid bounds must be >= 2");
  }
  require_in_range(a_max, "a_max");
  require_in_range(b_max, "b_max");
}

std::vector<CheckResult> check_equivalence_chain(const GridSpec& g) {
  g.validate();
  std::vector<CheckResult> out;

  {
    CheckRecorder rec("gauss_reciprocity");
    for_each_coprime_pair(g, [&](const CoprimePair& p) {
      if (p.a() % 2 == 1 && p.b() % 2 == 1 && p.a() != p.b()) {
        rec.expect_equal({{"p", p.a()}, {"q", p.b()}}, BigInt(0),
                         gauss_residual(p.a(), p.b()));
      }
    });
    out.push_back(rec.finish());
  }
  {
    CheckRecorder rec("half_index_reciprocity");
    for_each_coprime_pair(g, [&](const CoprimePair& p) {
      rec.expect_equal({{"a", p.a()}, {"b", p.b()}}, BigInt(0),
                       strong_residual(p.a(), p.b()));
    });
    std::mt19937_64 rng(g.seed);
    for (Nat s = 0; s < g.sample_count; ++s) {
      Nat a = random_below(rng, 1, kSampleLimit);
      Nat b = random_below(rng, 1, kSampleLimit);
      if (gcd(a, b) != 1) {
        continue;
      }
      rec.expect_equal({{"a", a}, {"b", b}}, BigInt(0), strong_residual(a, b));
    }
    out.push_back(rec.finish());
  }
  {
    CheckRecorder rec("general_reciprocity");
    for_each_coprime_pair(g, [&](const CoprimePair& p) {
      if (p.b() >= p.a()) {
        return;
      }
      for (Nat d = 1; d < p.a(); ++d) {
        rec.expect_equal({{"a", p.a()}, {"b", p.b()}, {"d", d}}, BigInt(0),
                         reciprocity_residual(p.a(), p.b(), d));
      }
    });
    out.push_back(rec.finish());
  }
  {
    // Gap count N plus twice the half-index sums equals
    // (a-1)floor(b/2) + (b-1)floor(a/2), and that equals
    // (a-1)(b-1)/2 + 2 floor(a/2) floor(b/2).
    CheckRecorder gap_rec("gap_count_floor_sum_identity");
    CheckRecorder parity_rec("parity_case_identity");
    for_each_coprime_pair(g, [&](const CoprimePair& p) {
      const Int a = static_cast<Int>(p.a());
      const Int b = static_cast<Int>(p.b());
      const Inputs inputs = {{"a", a}, {"b", b}};
      const BigInt rhs = BigInt((a - 1) * (b / 2) + (b - 1) * (a / 2));
      const BigInt gaps = nonrepresentable_set(p).gaps.size();
      gap_rec.expect_equal(inputs, rhs,
                           gaps + 2 * (naive(p.a(), p.b(), p.a() / 2) +
                                       naive(p.b(), p.a(), p.b() / 2)));
      parity_rec.expect_equal(inputs, rhs,
                              BigInt((a - 1) * (b - 1) / 2 + 2 * (a / 2) * (b / 2)));
    });
    out.push_back(gap_rec.finish());
    out.push_back(parity_rec.finish());
  }
  {
    CheckRecorder rec("sylvester_gap_count");
    for_each_coprime_pair(g, [&](const CoprimePair& p) {
      NonRepSet set = nonrepresentable_set(p);
      const Inputs inputs = {{"a", p.a()}, {"b", p.b()}};
      rec.expect_equal(inputs, (p.a() - 1) * (p.b() - 1) / 2, Nat{set.gaps.size()});
      if (p.a() >= 2 && p.b() >= 2) {
        rec.expect_equal(inputs, frobenius_number(p),
                         set.gaps.empty() ? Int{-1} : static_cast<Int>(set.gaps.back()));
      }
    });
    out.push_back(rec.finish());
  }
  {
    CheckRecorder rec("floor_sum_fast_vs_naive");
    for (Nat a = 1; a <= g.a_max; ++a) {
      for (Nat b = 0; b <= g.b_max; ++b) {
        if (b > 0 && !in_grid(g, a, b)) {
          continue;
        }
        for (Nat d = 0; d <= g.a_max; ++d) {
          FloorSumQuery q(a, b, d);
          rec.expect_equal({{"a", a}, {"b", b}, {"d", d}},
                           floor_sum_naive(q).value, floor_sum_fast(q).value);
        }
      }
    }
    std::mt19937_64 rng(g.seed + 1);
    for (Nat s = 0; s < g.sample_count; ++s) {
      FloorSumQuery q(random_below(rng, 1, kSampleLimit),
                      random_below(rng, 0, kSampleLimit),
                      random_below(rng, 0, kSampleLimit));
      rec.expect_equal({{"a", q.modulus()}, {"b", q.multiplier()}, {"d", q.upper()}},
                       floor_sum_naive(q).value, floor_sum_fast(q).value);
    }
    out.push_back(rec.finish());
  }
  return out;
}

std::vector<CheckResult> check_lemma_chain(const GridSpec& g) {
  g.validate();
  CheckRecorder lemma11("lattice_count_half_index");
  CheckRecorder lemma17("lattice_count_via_n0");
  CheckRecorder lemma18("lattice_count_via_floor_sums");
  CheckRecorder lemma19("n0_via_floor_sums");
  CheckRecorder thm20("n0_closed_form_d");
  CheckRecorder thm8("n0_closed_form_alpha");

  for_each_coprime_pair(g, [&](const CoprimePair& p) {
    const Nat a = p.a();
    const Nat b = p.b();
    const Nat half = a / 2;
    lemma11.expect_equal({{"a", a}, {"b", b}}, BigInt(half + 1) + naive(a, b, half),
                         count_lattice_3var(p, b * half));
    if (b >= a) {
      return;
    }
    for (Nat d = 1; d < a; ++d) {
      const Nat k_floor = b * d / a;
      const Nat target = b * d + a * k_floor;
      const Inputs inputs = {{"a", a}, {"b", b}, {"d", d}};
      const BigInt sums = naive(a, b, d) + naive(b, a, k_floor);
      const BigInt lattice = count_lattice_3var(p, target);
      lemma18.expect_equal(inputs, 2 * sums + d + k_floor + 1, lattice);
      if (2 * d <= a) {
        continue;
      }
      const Int shifted = static_cast<Int>(target) - static_cast<Int>(a * b);
      const BigInt n0 = count_representable_upto(p, shifted);
      lemma17.expect_equal(inputs,
                           BigInt(target + 1) - (a - 1) * (b - 1) / 2 + n0,
                           lattice);
      const BigInt closed = BigInt((2 * static_cast<Int>(d) - static_cast<Int>(a) + 1) *
                                   (2 * static_cast<Int>(k_floor) - static_cast<Int>(b) + 1)) /
                            2;
      lemma19.expect_equal(inputs, 2 * (sums - BigInt(d) * k_floor) + closed, n0);
      const Best2Count best = best2_count(p, d);
      thm20.expect(inputs, best.k == shifted && BigInt(best.n0) == n0,
                   "k=" + render(shifted) + " n0=" + render(n0),
                   "k=" + render(best.k) + " n0=" + render(best.n0));
    }
    for (const BestFamilyPoint& pt : best_family(p)) {
      thm8.expect_equal({{"a", a}, {"b", b}, {"alpha", pt.alpha}},
                        count_representable_upto(p, pt.k), pt.n0);
    }
  });

  std::vector<CheckResult> out;
  out.push_back(lemma11.finish());
  out.push_back(lemma17.finish());
  out.push_back(lemma18.finish());
  out.push_back(lemma19.finish());
  out.push_back(thm20.finish());
  out.push_back(thm8.finish());
  return out;
}

std::vector<CheckResult> check_representation_suite(const GridSpec& g) {
  g.validate();
  CheckRecorder membership("representable_vs_search");
  CheckRecorder count("representation_count_vs_search");
  CheckRecorder upto("n0_vs_membership");
  CheckRecorder shift("denumerant_shift");
  CheckRecorder unique("unique_below_ab");
  CheckRecorder bridge("lattice_bridge_below_ab");
  CheckRecorder sums("sylvester_sums");
  CheckRecorder symmetry("gap_symmetry");

  for_each_coprime_pair(g, [&](const CoprimePair& p) {
    const Nat a = p.a();
    const Nat b = p.b();
    const Nat ab = a * b;
    // Brute-force denumerants for n <= 2ab.
    std::vector<Nat> solutions(2 * ab + 1, 0);
    for (Nat x = 0; a * x <= 2 * ab; ++x) {
      for (Nat y = 0; a * x + b * y <= 2 * ab; ++y) {
        ++solutions[a * x + b * y];
      }
    }
    Nat running_upto = 0;
    BigInt running_solutions = 0;
    for (Nat n = 0; n <= 2 * ab; ++n) {
      const Inputs inputs = {{"a", a}, {"b", b}, {"n", n}};
      membership.expect_equal(inputs, solutions[n] > 0, is_representable(p, n));
      count.expect_equal(inputs, solutions[n], representation_count(p, n).count);
      shift.expect_equal(inputs, true, rep_count_shift_check(p, n));
      running_upto += solutions[n] > 0 ? 1 : 0;
      running_solutions += solutions[n];
      if (n <= ab) {
        upto.expect_equal(inputs, running_upto,
                          count_representable_upto(p, static_cast<Int>(n)));
      }
      if (n < ab) {
        unique.expect(inputs, solutions[n] <= 1, "<= 1", render(solutions[n]));
        // Below ab both counts agree with the three-variable lattice count.
        bridge.expect(inputs,
                      count_lattice_3var(p, n) == running_solutions &&
                          BigInt(running_upto) == running_solutions,
                      render(running_solutions),
                      "lattice=" + render(count_lattice_3var(p, n)) +
                          " n0=" + render(running_upto));
      }
    }

    if (a < 2 || b < 2) {
      return;
    }
    NonRepSet set = nonrepresentable_set(p);
    const Inputs inputs = {{"a", a}, {"b", b}};
    sums.expect_equal(inputs, sylvester_sum(p), sylvester_sum_power(set, 1));
    sums.expect_equal(inputs, sylvester_square_sum(p), sylvester_sum_power(set, 2));
    sums.expect_equal(inputs, BigInt(set.gaps.size()), sylvester_sum_power(set, 0));
    const Int frobenius = frobenius_number(p);
    for (Int n = 0; n <= frobenius; ++n) {
      bool gap = std::binary_search(set.gaps.begin(), set.gaps.end(),
                                    static_cast<Nat>(n));
      bool mirror_gap = std::binary_search(set.gaps.begin(), set.gaps.end(),
                                           static_cast<Nat>(frobenius - n));
      symmetry.expect({{"a", a}, {"b", b}, {"n", n}}, gap != mirror_gap,
                      "exactly one of n, F-n is a gap",
                      gap ? "both gaps" : "neither is a gap");
    }
  });

  std::vector<CheckResult> out;
  out.push_back(membership.finish());
  out.push_back(count.finish());
  out.push_back(upto.finish());
  out.push_back(shift.finish());
  out.push_back(unique.finish());
  out.push_back(bridge.finish());
  out.push_back(sums.finish());
  out.push_back(symmetry.finish());
  return out;
}

std::vector<CheckResult> check_jacobi_suite(const GridSpec& g) {
  g.validate();
  CheckRecorder eisenstein("eisenstein_vs_definition");
  CheckRecorder ge1("parity_lemma_composite_modulus");
  CheckRecorder ge2("parity_lemma_product_multiplier");
  CheckRecorder reciprocity("jacobi_reciprocity");
  CheckRecorder gauss("gauss_lemma");
  CheckRecorder legendre("legendre_euler_vs_table");
  CheckRecorder periodic("eisenstein_periodicity");
  CheckRecorder multiplicative("numerator_multiplicativity");

  for (Nat b = 1; b <= g.b_max; b += 2) {
    for (Nat a = 1; a <= g.a_max; a += 2) {
      if (gcd(a, b) != 1) {
        continue;
      }
      const Inputs inputs = {{"a", a}, {"b", b}};
      const SymbolValue fast = jacobi_eisenstein(a, b);
      eisenstein.expect_equal(inputs, jacobi_by_definition(static_cast<Int>(a), b).value(),
                              fast.value());
      reciprocity.expect_equal(inputs, true, jacobi_reciprocity_check(a, b));
      periodic.expect_equal(inputs, fast.value(), jacobi_eisenstein(a + 2 * b, b).value());
    }
  }

  std::mt19937_64 rng(g.seed + 2);
  for (Nat s = 0; s < g.sample_count; ++s) {
    Nat a = random_odd(rng);
    Nat b = random_odd(rng);
    if (gcd(a, b) != 1) {
      continue;
    }
    eisenstein.expect_equal({{"a", a}, {"b", b}},
                            jacobi_by_definition(static_cast<Int>(a), b).value(),
                            jacobi_eisenstein(a, b).value());
  }

  for (Nat a = 1; a <= g.a_max; a += 2) {
    for (Nat b = 1; b <= g.b_max; b += 2) {
      if (gcd(a, b) != 1) {
        continue;
      }
      for (Nat c = 1; c <= g.b_max; c += 2) {
        if (gcd(a, c) != 1) {
          continue;
        }
        const Inputs inputs = {{"a", a}, {"b", b}, {"c", c}};
        ge1.expect_equal(inputs, Nat{0}, ge1_residual(a, b, c));
        ge2.expect_equal(inputs, Nat{0}, ge2_residual(a, b, c));
      }
    }
  }

  for (Nat b = 1; b <= g.b_max; b += 2) {
    for (Nat a1 = 1; a1 <= g.a_max; a1 += 2) {
      for (Nat a2 = a1; a2 <= g.a_max; a2 += 2) {
        const Int x = static_cast<Int>(a1);
        const Int y = static_cast<Int>(a2);
        multiplicative.expect_equal(
            {{"a1", x}, {"a2", y}, {"b", b}},
            (jacobi_by_definition(x, b) * jacobi_by_definition(y, b)).value(),
            jacobi_by_definition(x * y, b).value());
      }
    }
  }

  const Nat p_max = std::max(g.a_max, g.b_max);
  for (Nat p = 3; p <= p_max; p += 2) {
    if (!is_prime(p)) {
      continue;
    }
    for (Nat a = 1; a < p; ++a) {
      const Inputs inputs = {{"a", a}, {"p", p}};
      const SymbolValue euler = legendre_euler(static_cast<Int>(a), p);
      gauss.expect_equal(inputs, euler,
                         SymbolValue::sign_of_parity(gauss_lemma_count(a, p) % 2 == 1));
      if (p <= 100) {
        legendre.expect_equal(inputs, legendre_by_residue_table(static_cast<Int>(a), p),
                              euler);
      }
    }
  }

  std::vector<CheckResult> out;
  out.push_back(eisenstein.finish());
  out.push_back(ge1.finish());
  out.push_back(ge2.finish());
  out.push_back(reciprocity.finish());
  out.push_back(gauss.finish());
  out.push_back(legendre.finish());
  out.push_back(periodic.finish());
  out.push_back(multiplicative.finish());
  return out;
}

const std::vector<PublishedRow> kPublishedTable1 = {
    {1, -1, 0},     {3, 49, 4},     {5, 101, 12},   {7, 153, 24},
    {9, 205, 40},   {11, 228, 48},  {13, 280, 70},  {15, 332, 96},
    {17, 384, 126}, {19, 436, 160}, {21, 459, 176}, {23, 511, 216},
    {25, 563, 260}, {27, 615, 308},
};

std::vector<Table1Row> table1_rows() {
  const CoprimePair pair(29, 23);
  std::vector<Table1Row> rows;
  for (const PublishedRow& published : kPublishedTable1) {
    BestFamilyPoint pt = best_family_point(pair, published.alpha);
    rows.push_back({pt.alpha, pt.beta, pt.k, pt.n0, published.k, published.n0,
                    count_representable_upto(pair, published.k)});
  }
  return rows;
}

CheckResult reproduce_table1() {
  CheckRecorder rec("table1");
  const CoprimePair pair(29, 23);
  for (const Table1Row& row : table1_rows()) {
    const Inputs inputs = {{"alpha", row.alpha}};
    rec.expect(inputs, row.k == row.published_k,
               "k=" + render(row.published_k), "closed-form k=" + render(row.k));
    rec.expect(inputs, row.n0 == row.published_n0,
               "n0=" + render(row.published_n0), "closed-form n0=" + render(row.n0));
    rec.expect(inputs, row.counted_n0 == row.published_n0,
               "n0=" + render(row.published_n0),
               "counted n0=" + render(row.counted_n0));
    Nat counted_at_closed_k = count_representable_upto(pair, row.k);
    rec.expect(inputs, counted_at_closed_k == row.n0,
               "n0=" + render(row.n0) + " at closed-form k",
               "counted n0=" + render(counted_at_closed_k));
  }
  return rec.finish();
}

CheckResult reproduce_section5_example() {
  CheckRecorder rec("n0_worked_example");
  const CoprimePair pair(29, 23);
  const BigInt first = floor_sum(29, 23, 8);
  const BigInt second = floor_sum(23, 4, 18);
  const Nat n0 = count_representable_upto(pair, 257);
  rec.expect_equal({{"a", 29}, {"b", 23}, {"d", 8}}, BigInt(24), first);
  rec.expect_equal({{"a", 29}, {"b", 23}, {"d", 8}}, BigInt(24), naive(29, 23, 8));
  rec.expect_equal({{"a", 23}, {"b", 4}, {"d", 18}}, BigInt(21), second);
  rec.expect_equal({{"a", 23}, {"b", 4}, {"d", 18}}, BigInt(21), naive(23, 4, 18));
  rec.expect_equal({{"a", 29}, {"b", 23}, {"k", 257}}, Nat{60}, n0);
  rec.expect_equal({{"a", 29}, {"b", 23}, {"k", 257}}, BigInt(n0),
                   BigInt(15) + first + second);
  rec.expect_equal({{"a", 29}, {"b", 23}, {"k", 257}}, BigInt(n0),
                   count_lattice_3var(pair, 257));
  return rec.finish();
}

std::vector<CheckResult> run_suite(Suite suite, const GridSpec& g) {
  g.validate();
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> part) {
    for (auto& r : part) {
      out.push_back(std::move(r));
    }
  };
  if (suite == Suite::all || suite == Suite::frobenius) {
    append(check_equivalence_chain(g));
    append(check_lemma_chain(g));
    append(check_representation_suite(g));
    out.push_back(reproduce_section5_example());
  }
  if (suite == Suite::all || suite == Suite::jacobi) {
    append(check_jacobi_suite(g));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed(); });
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : r.failures) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [name, value] : f.inputs) {
      inputs[name] = value;
    }
    failures.push_back(
        {{"inputs", inputs}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"check_id", r.check_id},
          {"cases_run", r.cases_run},
          {"passed", r.passed()},
          {"failures", failures},
          {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()}};
}

std::string to_plain(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.check_id << " cases=" << r.cases_run
     << " failures=" << r.failures.size() << " ms="
     << static_cast<Nat>(std::chrono::duration<double, std::milli>(r.elapsed).count())
     << '\n';
  for (const Failure& f : r.failures) {
    os << "  at";
    for (const auto& [name, value] : f.inputs) {
      os << ' ' << name << '=' << value;
    }
    os << ": expected " << f.expected << ", got " << f.actual << '\n';
  }
  return os.str();
}

std::string csv_header() { return "check_id,cases_run,failures,passed,elapsed_ms"; }

std::string to_csv_row(const CheckResult& r) {
  std::ostringstream os;
  os << r.check_id << ',' << r.cases_run << ',' << r.failures.size() << ','
     << (r.passed() ? "true" : "false") << ','
     << static_cast<Nat>(std::chrono::duration<double, std::milli>(r.elapsed).count());
  return os.str();
}

}  // namespace frobenius
