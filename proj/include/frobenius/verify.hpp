#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frobenius/core.hpp"

namespace frobenius {

/// Parameter grid for the identity suites. Pairs (a, b) range over
/// [1, a_max] x [1, b_max]; `sample_count` extra cases with parameters up to
/// kSampleLimit are drawn from a generator seeded with `seed`.
struct GridSpec {
  Nat a_max = 60;
  Nat b_max = 60;
  bool odd_only = false;
  bool coprime_only = true;
  Nat seed = 20211;
  Nat sample_count = 200;

  void validate() const;
};

inline constexpr Nat kSampleLimit = Nat{1} << 20;

struct Failure {
  std::vector<std::pair<std::string, Int>> inputs;
  std::string expected;
  std::string actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct CheckResult {
  std::string check_id;
  Nat cases_run = 0;
  std::vector<Failure> failures;  // sorted by input values
  std::chrono::duration<double> elapsed{};

  bool passed() const noexcept { return failures.empty(); }
};

/// Gauss, half-index and general reciprocity, the gap-count/floor-sum identity and its parity
/// companion, plus fast-vs-naive floor sums.
std::vector<CheckResult> check_equivalence_chain(const GridSpec& g);

/// Lattice-count lemmas (three-variable equation), the N0 closed forms and
/// the closed-form alpha family.
std::vector<CheckResult> check_lemma_chain(const GridSpec& g);

/// Membership, denumerant shift, uniqueness below ab, the three-variable
/// bridge and the Sylvester sums.
std::vector<CheckResult> check_representation_suite(const GridSpec& g);

/// Eisenstein vs definition, both parity lemmas, reciprocity, Gauss' lemma,
/// periodicity and multiplicativity.
std::vector<CheckResult> check_jacobi_suite(const GridSpec& g);

/// Published N0(29, 23; k) table.
struct PublishedRow {
  Nat alpha;
  Int k;
  Nat n0;
};
extern const std::vector<PublishedRow> kPublishedTable1;

struct Table1Row {
  Nat alpha;
  Int beta;
  Int k;          // closed form
  Nat n0;         // closed form
  Int published_k;
  Nat published_n0;
  Nat counted_n0;  // membership count at the published k
};

std::vector<Table1Row> table1_rows();
CheckResult reproduce_table1();
CheckResult reproduce_section5_example();

enum class Suite { all, frobenius, jacobi };

/// Runs the requested suites; "frobenius" includes the worked N0 example.
std::vector<CheckResult> run_suite(Suite suite, const GridSpec& g);

bool all_passed(const std::vector<CheckResult>& results) noexcept;

nlohmann::json to_json(const CheckResult& r);
std::string to_plain(const CheckResult& r);
std::string csv_header();
std::string to_csv_row(const CheckResult& r);

}  // namespace frobenius
