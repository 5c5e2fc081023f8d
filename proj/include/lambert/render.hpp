#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambert/integer.hpp"
#include "lambert/verify.hpp"

namespace lambert::render {

enum class Format { pretty, csv, json };

Format parse_format(const std::string& name);

// Rows of integers labeled by an index; covers the bottom-row table, the
// divisor-sum grids, matrix dumps and partition listings. Output is
// deterministic: fixed row order, no timestamps.
struct IntTable {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string row_label = "n";
  std::vector<std::pair<long long, std::vector<Int>>> rows;
};

std::string render_table(const IntTable& table, Format format);

struct EvalOutcome {
  std::string function;
  long long n = 0;
  std::optional<int> t;
  std::string formula_value;  // value through the divisor-sum reconstruction
  std::string direct_value;   // value from the direct evaluator
  bool match = false;
};

std::string render_eval(const EvalOutcome& outcome, Format format);

std::string render_report(const verify::RunReport& report, Format format);

}  // namespace lambert::render
