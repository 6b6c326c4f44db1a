// Command-line front end for the frobenius library.
//
// Exit codes: 0 success, 1 bad arguments or violated preconditions,
// 2 a verification check reported failures.

#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobenius/coinproblem.hpp"
#include "frobenius/floorsum.hpp"
#include "frobenius/jacobi.hpp"
#include "frobenius/verify.hpp"

namespace {

using frobenius::BigInt;
using frobenius::Int;
using frobenius::Nat;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;

enum class Format { plain, json, csv };

Json number(const BigInt& v) {
  if (v >= std::numeric_limits<Int>::min() && v <= std::numeric_limits<Int>::max()) {
    return static_cast<Int>(v);
  }
  return v.str();
}

std::string cell(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// One invocation's result, rendered in the requested format.
struct Output {
  std::string command;
  Json inputs = Json::object();
  Json result;
  std::vector<std::string> columns;  // set when `result` is an array of rows

  void print(Format format, std::ostream& os) const {
    switch (format) {
      case Format::json:
        os << Json{{"command", command}, {"inputs", inputs}, {"result", result}}.dump()
           << '\n';
        break;
      case Format::csv:
        print_csv(os);
        break;
      case Format::plain:
        print_plain(os);
        break;
    }
  }

 private:
  void print_csv(std::ostream& os) const {
    if (!result.is_array()) {
      for (const auto& [name, value] : inputs.items()) {
        os << name << ',';
      }
      os << "result\n";
      for (const auto& [name, value] : inputs.items()) {
        os << cell(value) << ',';
      }
      os << cell(result) << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "") << columns[i];
    }
    os << '\n';
    for (const Json& row : result) {
      if (row.is_object()) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
          os << (i ? "," : "") << cell(row.at(columns[i]));
        }
      } else {
        os << cell(row);
      }
      os << '\n';
    }
  }

  void print_plain(std::ostream& os) const {
    if (!result.is_array()) {
      os << cell(result) << '\n';
      return;
    }
    for (const Json& row : result) {
      if (row.is_object()) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
          os << (i ? " " : "") << cell(row.at(columns[i]));
        }
      } else {
        os << cell(row);
      }
      os << '\n';
    }
  }
};

Json family_row(const frobenius::BestFamilyPoint& pt) {
  return Json{{"alpha", pt.alpha}, {"beta", pt.beta}, {"k", pt.k}, {"n0", pt.n0}};
}

Json check_row(const frobenius::CheckResult& r) {
  Json out;
  const auto full = frobenius::to_json(r);
  for (const auto& [key, value] : full.items()) {
    out[key] = value;
  }
  out["failures"] = r.failures.size();
  out["elapsed_ms"] = static_cast<Nat>(full["elapsed_ms"].get<double>());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-coin Frobenius problem, floor-sum reciprocity and Jacobi symbols"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::plain;
  const std::map<std::string, Format> format_names{
      {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", format, "Output format: plain, json or csv")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

  Nat a = 0, b = 0, d = 0, n = 0;
  Int k = 0;

  auto* floorsum_cmd = app.add_subcommand("floorsum", "S(a,b,d) = sum_{i<=d} floor(ib/a)");
  bool naive = false;
  floorsum_cmd->add_option("a", a, "modulus")->required();
  floorsum_cmd->add_option("b", b, "multiplier")->required();
  floorsum_cmd->add_option("d", d, "upper index")->required();
  floorsum_cmd->add_flag("--naive", naive, "term-by-term summation");

  auto* frobenius_cmd = app.add_subcommand("frobenius", "Frobenius number ab-a-b");
  frobenius_cmd->add_option("a", a)->required();
  frobenius_cmd->add_option("b", b)->required();

  auto* count_cmd = app.add_subcommand("count", "Solutions of ax+by=n");
  count_cmd->add_option("a", a)->required();
  count_cmd->add_option("b", b)->required();
  count_cmd->add_option("n", n)->required();

  auto* upto_cmd = app.add_subcommand("upto", "Representable integers in [0, k]");
  upto_cmd->add_option("a", a)->required();
  upto_cmd->add_option("b", b)->required();
  upto_cmd->add_option("k", k)->required();

  auto* best_cmd = app.add_subcommand("best", "Closed-form N0 family (requires b < a)");
  Nat alpha = 0;
  bool all_alpha = false;
  best_cmd->add_option("a", a)->required();
  best_cmd->add_option("b", b)->required();
  auto* alpha_opt = best_cmd->add_option("--alpha", alpha, "single alpha");
  auto* all_opt = best_cmd->add_flag("--all", all_alpha, "every valid alpha");
  alpha_opt->excludes(all_opt);
  all_opt->excludes(alpha_opt);

  auto* gaps_cmd = app.add_subcommand("gaps", "Nonrepresentable numbers and Sylvester sums");
  bool gap_sum = false;
  Nat power = 0;
  std::vector<std::string> weighted;
  gaps_cmd->add_option("a", a)->required();
  gaps_cmd->add_option("b", b)->required();
  auto* sum_opt = gaps_cmd->add_flag("--sum", gap_sum, "sum of the gaps");
  auto* power_opt = gaps_cmd->add_option("--power", power, "sum of gap^m");
  auto* weighted_opt =
      gaps_cmd->add_option("--weighted", weighted, "lambda m: sum of lambda^(n-1) n^m")
          ->expected(2)
          ->type_name("LAMBDA M");
  sum_opt->excludes(power_opt)->excludes(weighted_opt);
  power_opt->excludes(weighted_opt);

  auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi symbol (a/b)");
  std::string method = "eisenstein";
  Int numerator = 0;
  jacobi_cmd->add_option("a", numerator)->required();
  jacobi_cmd->add_option("b", b)->required();
  jacobi_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"eisenstein", "definition"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suites");
  frobenius::GridSpec grid;
  std::vector<Nat> grid_bounds;
  std::string suite_name = "all";
  verify_cmd->add_option("--grid", grid_bounds, "a_max b_max")->expected(2);
  verify_cmd->add_flag("--odd-only", grid.odd_only);
  verify_cmd->add_option("--seed", grid.seed);
  verify_cmd->add_option("--samples", grid.sample_count, "seeded large cases");
  verify_cmd->add_option("--suite", suite_name)
      ->check(CLI::IsMember({"all", "frobenius", "jacobi"}));

  auto* table1_cmd = app.add_subcommand("table1", "Reproduce the N0(29,23;k) table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitDomain;
  }

  Output out;
  int exit_code = kExitOk;
  try {
    if (floorsum_cmd->parsed()) {
      frobenius::FloorSumQuery q(a, b, d);
      out.command = "floorsum";
      out.inputs = {{"a", a}, {"b", b}, {"d", d}};
      out.result = number(naive ? frobenius::floor_sum_naive(q).value
                                : frobenius::floor_sum_fast(q).value);
    } else if (frobenius_cmd->parsed()) {
      out.command = "frobenius";
      out.inputs = {{"a", a}, {"b", b}};
      out.result = frobenius::frobenius_number(frobenius::CoprimePair(a, b));
    } else if (count_cmd->parsed()) {
      out.command = "count";
      out.inputs = {{"a", a}, {"b", b}, {"n", n}};
      out.result =
          frobenius::representation_count(frobenius::CoprimePair(a, b), n).count;
    } else if (upto_cmd->parsed()) {
      out.command = "upto";
      out.inputs = {{"a", a}, {"b", b}, {"k", k}};
      out.result = frobenius::count_representable_upto(frobenius::CoprimePair(a, b), k);
    } else if (best_cmd->parsed()) {
      frobenius::CoprimePair pair(a, b);
      out.command = "best";
      out.inputs = {{"a", a}, {"b", b}};
      out.columns = {"alpha", "beta", "k", "n0"};
      out.result = Json::array();
      if (all_alpha) {
        for (const auto& pt : frobenius::best_family(pair)) {
          out.result.push_back(family_row(pt));
        }
      } else if (alpha_opt->count() > 0) {
        out.inputs["alpha"] = alpha;
        out.result.push_back(family_row(frobenius::best_family_point(pair, alpha)));
      } else {
        throw frobenius::DomainError("best requires --alpha or --all");
      }
    } else if (gaps_cmd->parsed()) {
      frobenius::CoprimePair pair(a, b);
      out.command = "gaps";
      out.inputs = {{"a", a}, {"b", b}};
      if (gap_sum) {
        out.inputs["mode"] = "sum";
        out.result = number(frobenius::sylvester_sum(pair));
      } else if (power_opt->count() > 0) {
        out.inputs["mode"] = "power";
        out.inputs["m"] = power;
        out.result = number(frobenius::sylvester_sum_power(pair, power));
      } else if (weighted_opt->count() > 0) {
        const frobenius::ExactRational lambda = frobenius::parse_rational(weighted[0]);
        Nat m = 0;
        try {
          m = std::stoull(weighted[1]);
        } catch (const std::exception&) {
          throw frobenius::DomainError("--weighted: malformed exponent m '" +
                                       weighted[1] + "'");
        }
        out.inputs["mode"] = "weighted";
        out.inputs["lambda"] = frobenius::format_rational(lambda);
        out.inputs["m"] = m;
        out.result = frobenius::format_rational(
            frobenius::weighted_sylvester_sum(pair, lambda, m));
      } else {
        out.columns = {"gap"};
        out.result = Json::array();
        for (Nat gap : frobenius::nonrepresentable_set(pair).gaps) {
          out.result.push_back(gap);
        }
      }
    } else if (jacobi_cmd->parsed()) {
      out.command = "jacobi";
      out.inputs = {{"a", numerator}, {"b", b}, {"method", method}};
      if (method == "definition") {
        out.result = frobenius::jacobi_by_definition(numerator, b).value();
      } else {
        if (numerator <= 0) {
          throw frobenius::DomainError("eisenstein method requires a positive odd a");
        }
        out.result =
            frobenius::jacobi_eisenstein(static_cast<Nat>(numerator), b).value();
      }
    } else if (verify_cmd->parsed()) {
      if (!grid_bounds.empty()) {
        grid.a_max = grid_bounds[0];
        grid.b_max = grid_bounds[1];
      }
      const frobenius::Suite suite = suite_name == "frobenius" ? frobenius::Suite::frobenius
                                     : suite_name == "jacobi"  ? frobenius::Suite::jacobi
                                                               : frobenius::Suite::all;
      const auto results = frobenius::run_suite(suite, grid);
      out.command = "verify";
      out.inputs = {{"a_max", grid.a_max},   {"b_max", grid.b_max},
                    {"odd_only", grid.odd_only}, {"seed", grid.seed},
                    {"samples", grid.sample_count}, {"suite", suite_name}};
      if (format == Format::plain) {
        for (const auto& r : results) {
          std::cout << frobenius::to_plain(r);
        }
      } else {
        out.columns = {"check_id", "cases_run", "failures", "passed", "elapsed_ms"};
        out.result = Json::array();
        for (const auto& r : results) {
          out.result.push_back(format == Format::json ? Json(frobenius::to_json(r))
                                                      : check_row(r));
        }
      }
      exit_code = frobenius::all_passed(results) ? kExitOk : kExitVerify;
      if (format == Format::plain) {
        std::cout << (exit_code == kExitOk ? "all checks passed" : "FAILURES reported")
                  << '\n';
        return exit_code;
      }
    } else if (table1_cmd->parsed()) {
      out.command = "table1";
      out.inputs = {{"a", 29}, {"b", 23}};
      out.columns = {"alpha", "beta", "k", "n0", "published_k", "published_n0",
                     "counted_n0"};
      out.result = Json::array();
      for (const auto& row : frobenius::table1_rows()) {
        out.result.push_back(Json{{"alpha", row.alpha},
                                  {"beta", row.beta},
                                  {"k", row.k},
                                  {"n0", row.n0},
                                  {"published_k", row.published_k},
                                  {"published_n0", row.published_n0},
                                  {"counted_n0", row.counted_n0}});
      }
      const frobenius::CheckResult check = frobenius::reproduce_table1();
      if (!check.passed()) {
        std::cerr << frobenius::to_plain(check);
        exit_code = kExitVerify;
      }
    }
  } catch (const frobenius::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  out.print(format, std::cout);
  return exit_code;
}
