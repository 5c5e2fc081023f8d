#include "lambert/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lambert::render {

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

nlohmann::json parameters_object(
    const std::vector<std::pair<std::string, std::string>>& parameters) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [key, value] : parameters) obj[key] = value;
  return obj;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "pretty") return Format::pretty;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string render_table(const IntTable& table, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv: {
      out << table.row_label << ",k,value\n";
      for (const auto& [n, values] : table.rows) {
        for (size_t k = 0; k < values.size(); ++k) {
          out << n << "," << (k + 1) << "," << values[k].str() << "\n";
        }
      }
      break;
    }
    case Format::json: {
      nlohmann::json doc;
      doc["command"] = table.command;
      doc["parameters"] = parameters_object(table.parameters);
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [n, values] : table.rows) {
        nlohmann::json row;
        row[table.row_label] = n;
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Int& v : values) coeffs.push_back(v.str());
        row["values"] = coeffs;
        rows.push_back(row);
      }
      doc["rows"] = rows;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::pretty: {
      size_t width = 1;
      for (const auto& [n, values] : table.rows) {
        for (const Int& v : values) width = std::max(width, v.str().size());
      }
      for (const auto& [n, values] : table.rows) {
        out << table.row_label << "=" << n << " |";
        for (const Int& v : values) {
          const std::string s = v.str();
          out << " " << std::string(width - s.size(), ' ') << s;
        }
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

std::string render_eval(const EvalOutcome& outcome, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv: {
      out << "function,n,t,reconstruction,direct,match\n";
      out << csv_quote(outcome.function) << "," << outcome.n << ",";
      if (outcome.t) out << *outcome.t;
      out << "," << csv_quote(outcome.formula_value) << ","
          << csv_quote(outcome.direct_value) << ","
          << (outcome.match ? "true" : "false") << "\n";
      break;
    }
    case Format::json: {
      nlohmann::json doc;
      doc["command"] = "eval";
      doc["function"] = outcome.function;
      doc["n"] = outcome.n;
      if (outcome.t) doc["t"] = *outcome.t;
      doc["reconstruction"] = outcome.formula_value;
      doc["direct"] = outcome.direct_value;
      doc["match"] = outcome.match;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::pretty: {
      out << outcome.function << "(" << outcome.n;
      if (outcome.t) out << "; t=" << *outcome.t;
      out << "): reconstruction=" << outcome.formula_value
          << " direct=" << outcome.direct_value
          << " match=" << (outcome.match ? "yes" : "NO") << "\n";
      break;
    }
  }
  return out.str();
}

std::string render_report(const verify::RunReport& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv: {
      out << "check,range,status,counterexample\n";
      for (const verify::CheckResult& check : report.checks) {
        out << csv_quote(check.id) << "," << csv_quote(check.range) << ","
            << (check.pass ? "pass" : "fail") << ","
            << csv_quote(check.counterexample) << "\n";
      }
      break;
    }
    case Format::json: {
      nlohmann::json doc;
      doc["command"] = report.command;
      doc["parameters"] = parameters_object(report.parameters);
      nlohmann::json checks = nlohmann::json::array();
      for (const verify::CheckResult& check : report.checks) {
        nlohmann::json entry;
        entry["id"] = check.id;
        entry["range"] = check.range;
        entry["pass"] = check.pass;
        entry["counterexample"] = check.counterexample;
        checks.push_back(entry);
      }
      doc["checks"] = checks;
      doc["all_pass"] = report.all_pass();
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::pretty: {
      for (const auto& [key, value] : report.parameters) {
        out << key << "=" << value << " ";
      }
      out << "\n";
      size_t id_width = 0;
      for (const verify::CheckResult& check : report.checks) {
        id_width = std::max(id_width, check.id.size());
      }
      size_t passed = 0;
      for (const verify::CheckResult& check : report.checks) {
        if (check.pass) ++passed;
        out << (check.pass ? "PASS " : "FAIL ") << check.id
            << std::string(id_width - check.id.size(), ' ') << "  [" << check.range
            << "]";
        if (!check.pass) out << "  " << check.counterexample;
        out << "\n";
      }
      out << "result: " << passed << "/" << report.checks.size() << " checks passed\n";
      break;
    }
  }
  return out.str();
}

}  // namespace lambert::render
