// Command-line front end: reproduces the reference tables, evaluates the
// classical arithmetic functions through the partition reconstruction, and
// drives the identity verification suites.
//
// Exit codes: 0 all checks pass, 1 verification counterexample, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lambert/arith.hpp"
#include "lambert/factorization.hpp"
#include "lambert/matrices.hpp"
#include "lambert/qseries.hpp"
#include "lambert/render.hpp"
#include "lambert/verify.hpp"

namespace {

using lambert::Int;
using lambert::PartitionTable;

struct GlobalOptions {
  std::string format = "pretty";
  std::string out_path;
};

// payload to stdout (and --out when given); timing stays on stderr
int emit(const GlobalOptions& options, const std::string& payload, int exit_code) {
  std::cout << payload;
  if (!options.out_path.empty()) {
    std::ofstream file(options.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output file " << options.out_path << "\n";
      return 2;
    }
    file << payload;
  }
  return exit_code;
}

int run_table1(const GlobalOptions& options, int max_n) {
  const auto start = std::chrono::steady_clock::now();
  const PartitionTable pt(max_n);
  lambert::render::IntTable table;
  table.command = "table1";
  table.parameters = {{"max_n", std::to_string(max_n)}};
  for (long long n = 2; n <= max_n; ++n) {
    std::vector<Int> row;
    row.reserve(static_cast<size_t>(n - 1));
    for (long long k = 1; k <= n - 1; ++k) {
      row.push_back(lambert::inverse_entry_divisor_sum(n, k, pt));
    }
    table.rows.emplace_back(n, std::move(row));
  }
  const std::string payload =
      lambert::render::render_table(table, lambert::render::parse_format(options.format));
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return emit(options, payload, 0);
}

int run_figure2(const GlobalOptions& options, int max_n, int max_k,
                const std::string& variant) {
  const auto start = std::chrono::steady_clock::now();
  lambert::render::IntTable table;
  table.command = "figure2";
  table.parameters = {{"max_n", std::to_string(max_n)},
                      {"max_k", std::to_string(max_k)},
                      {"variant", variant}};
  if (variant == "aprime") {
    // divisor sums of the inverse entries, taken from actual inversion
    const lambert::TriMatrix inv =
        lambert::invert_unit_lower(lambert::factorization_matrix(max_n));
    for (long long n = 1; n <= max_n; ++n) {
      std::vector<Int> row;
      for (long long k = 1; k <= max_k; ++k) {
        Int sum = 0;
        for (long long d : lambert::divisors(n)) {
          if (k <= d) sum += inv.at(static_cast<int>(d), static_cast<int>(k));
        }
        row.push_back(sum);
      }
      table.rows.emplace_back(n, std::move(row));
    }
  } else {
    // Moebius-weighted shifted partition sums
    const PartitionTable pt(max_n);
    for (long long n = 1; n <= max_n; ++n) {
      std::vector<Int> row;
      for (long long k = 1; k <= max_k; ++k) {
        row.push_back(lambert::inverse_entry_divisor_sum(n, k, pt));
      }
      table.rows.emplace_back(n, std::move(row));
    }
  }
  const std::string payload =
      lambert::render::render_table(table, lambert::render::parse_format(options.format));
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return emit(options, payload, 0);
}

int run_eval(const GlobalOptions& options, const std::string& function, long long n,
             std::optional<int> t) {
  lambert::render::EvalOutcome outcome;
  outcome.function = function;
  outcome.n = n;
  outcome.t = t;

  const PartitionTable pt(static_cast<int>(n));
  const auto reconstruct_int = [&](const std::function<Int(long long)>& closed) {
    Int acc = 0;
    for (long long m = 0; m < n; ++m) {
      const Int entry = lambert::inverse_entry_divisor_sum(n, m + 1, pt);
      if (entry == 0) continue;
      acc += entry * closed(m);
    }
    return acc;
  };

  if (function == "Lambda") {
    lambert::FormalLog acc;
    for (long long m = 0; m < n; ++m) {
      const Int entry = lambert::inverse_entry_divisor_sum(n, m + 1, pt);
      if (entry == 0) continue;
      lambert::FormalLog term = lambert::correction_von_mangoldt_closed(m);
      term *= entry;
      acc += term;
    }
    const lambert::FormalLog direct = lambert::von_mangoldt_formal(n);
    outcome.formula_value = acc.to_string();
    outcome.direct_value = direct.to_string();
    outcome.match = acc == direct;
  } else {
    Int formula, direct;
    if (function == "phi") {
      formula = reconstruct_int(lambert::correction_phi_closed);
      direct = lambert::euler_phi(n);
    } else if (function == "mu") {
      formula = reconstruct_int(lambert::correction_mu_closed);
      direct = lambert::moebius(n);
    } else if (function == "lambda") {
      formula = reconstruct_int(lambert::correction_lambda_closed);
      direct = lambert::liouville(n);
    } else if (function == "abs_mu") {
      formula = reconstruct_int(lambert::correction_abs_mu_closed);
      direct = lambert::abs_moebius(n);
    } else if (function == "jordan") {
      formula = reconstruct_int(
          [&](long long m) { return lambert::correction_jordan_closed(*t, m); });
      direct = lambert::jordan_totient(n, *t);
    } else {
      std::cerr << "error: unknown function '" << function
                << "' (expected phi, mu, lambda, Lambda, abs_mu, jordan)\n";
      return 2;
    }
    outcome.formula_value = formula.str();
    outcome.direct_value = direct.str();
    outcome.match = formula == direct;
  }

  const std::string payload =
      lambert::render::render_eval(outcome, lambert::render::parse_format(options.format));
  return emit(options, payload, outcome.match ? 0 : 1);
}

int run_verify(const GlobalOptions& options, const std::string& suite, bool quick,
               std::optional<int> max_n, std::optional<int> max_order) {
  lambert::verify::Bounds bounds =
      quick ? lambert::verify::quick_bounds() : lambert::verify::Bounds{};
  if (max_n) {
    bounds.max_n = *max_n;
    bounds.max_m = *max_n;
  }
  if (max_order) {
    bounds.factorization_order = *max_order;
    bounds.generalized_order = *max_order;
  }
  const lambert::verify::RunReport report =
      lambert::verify::run_suite(suite, bounds, lambert::verify::worker_count_from_env());
  const std::string payload = lambert::render::render_report(
      report, lambert::render::parse_format(options.format));
  std::cerr << "elapsed_ms=" << report.elapsed.count() << "\n";
  return emit(options, payload, report.all_pass() ? 0 : 1);
}

int run_matrix(const GlobalOptions& options, int n, bool inverse) {
  const lambert::TriMatrix m = inverse
                                   ? lambert::invert_unit_lower(lambert::factorization_matrix(n))
                                   : lambert::factorization_matrix(n);
  lambert::render::IntTable table;
  table.command = "matrix";
  table.parameters = {{"n", std::to_string(n)}, {"inverse", inverse ? "true" : "false"}};
  table.row_label = "i";
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> row;
    row.reserve(static_cast<size_t>(i));
    for (int j = 1; j <= i; ++j) row.push_back(m.at(i, j));
    table.rows.emplace_back(i, std::move(row));
  }
  const std::string payload =
      lambert::render::render_table(table, lambert::render::parse_format(options.format));
  return emit(options, payload, 0);
}

int run_partition(const GlobalOptions& options, int max_n) {
  const PartitionTable pt(max_n);
  lambert::render::IntTable table;
  table.command = "partition";
  table.parameters = {{"max", std::to_string(max_n)}};
  for (long long n = 0; n <= max_n; ++n) {
    table.rows.emplace_back(n, std::vector<Int>{pt.p(n)});
  }
  const std::string payload =
      lambert::render::render_table(table, lambert::render::parse_format(options.format));
  return emit(options, payload, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lambert-series factorization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--out may follow the subcommand

  GlobalOptions options;
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"pretty", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", options.out_path, "Also write the payload to this file");

  auto* table1 = app.add_subcommand("table1", "Bottom rows of the inverse matrices");
  int table1_max_n = 18;
  table1->add_option("--max-n", table1_max_n, "Largest row")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();

  auto* figure2 = app.add_subcommand("figure2", "Divisor-sum grids");
  int fig_max_n = 18;
  int fig_max_k = 12;
  std::string fig_variant = "aprime";
  figure2->add_option("--max-n", fig_max_n, "Rows")->check(CLI::Range(1, 1000));
  figure2->add_option("--max-k", fig_max_k, "Columns")->check(CLI::Range(1, 1000));
  figure2->add_option("--variant", fig_variant, "aprime or adoubleprime")
      ->check(CLI::IsMember({"aprime", "adoubleprime"}))
      ->capture_default_str();

  auto* eval = app.add_subcommand("eval",
                                  "Evaluate an arithmetic function through the "
                                  "partition reconstruction and the direct oracle");
  std::string eval_function;
  long long eval_n = 1;
  int eval_t = -1;
  eval->add_option("function", eval_function, "phi, mu, lambda, Lambda, abs_mu, jordan")
      ->required();
  eval->add_option("n", eval_n, "Argument")->required()->check(CLI::PositiveNumber);
  eval->add_option("--t", eval_t, "Totient order for jordan")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run an identity verification suite");
  std::string verify_suite;
  bool verify_quick = false;
  int verify_max_n = -1;
  int verify_max_order = -1;
  verify->add_option("suite", verify_suite,
                     "matrices, corrections, reconstructions, generalized or all")
      ->required();
  verify->add_flag("--quick", verify_quick, "Smaller desk-scale bounds");
  verify->add_option("--max-n", verify_max_n, "Override matrix/correction bound")
      ->check(CLI::Range(1, 2000));
  verify->add_option("--max-order", verify_max_order, "Override series orders")
      ->check(CLI::Range(1, 2000));

  auto* matrix = app.add_subcommand("matrix", "Print a factorization matrix");
  int matrix_n = 8;
  bool matrix_inverse = false;
  matrix->add_option("--n", matrix_n, "Size")->required()->check(CLI::Range(1, 500));
  matrix->add_flag("--inverse", matrix_inverse, "Print the inverse instead");

  auto* partition = app.add_subcommand("partition", "Partition numbers p(0..N)");
  int partition_max = 20;
  partition->add_option("--max", partition_max, "Largest argument")
      ->required()
      ->check(CLI::Range(0, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table1->parsed()) return run_table1(options, table1_max_n);
    if (figure2->parsed()) return run_figure2(options, fig_max_n, fig_max_k, fig_variant);
    if (eval->parsed()) {
      if (eval_function == "jordan" && eval_t < 0) {
        std::cerr << "error: eval jordan requires --t\n";
        return 2;
      }
      const std::optional<int> t =
          eval_function == "jordan" ? std::optional<int>(eval_t) : std::nullopt;
      return run_eval(options, eval_function, eval_n, t);
    }
    if (verify->parsed()) {
      if (!lambert::verify::is_suite(verify_suite)) {
        std::cerr << "error: unknown suite '" << verify_suite << "'\n";
        return 2;
      }
      return run_verify(options, verify_suite, verify_quick,
                        verify_max_n > 0 ? std::optional<int>(verify_max_n) : std::nullopt,
                        verify_max_order > 0 ? std::optional<int>(verify_max_order)
                                             : std::nullopt);
    }
    if (matrix->parsed()) return run_matrix(options, matrix_n, matrix_inverse);
    if (partition->parsed()) return run_partition(options, partition_max);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
