#include "cli/report.hpp"

#include <algorithm>

namespace gpade::cli {

std::string abbreviate(const std::string& digits) {
  std::size_t sign = (!digits.empty() && digits.front() == '-') ? 1 : 0;
  std::size_t count = digits.size() - sign;
  if (count <= kAbbreviateDigits) return digits;
  return digits.substr(0, sign + 12) + "..." + digits.substr(digits.size() - 12) + " (" +
         std::to_string(count) + " digits)";
}

Row Formatter::integer(const Integer& z) const {
  std::string s = to_string(z);
  return exact ? s : abbreviate(s);
}

Row Formatter::rational(const Rational& q) const {
  if (exact) return to_string(q);
  if (q.get_den() == 1) return abbreviate(to_string(q.get_num()));
  return abbreviate(to_string(q.get_num())) + "/" + abbreviate(to_string(q.get_den()));
}

Row Formatter::interval(const Interval& x) const {
  return Row{{"lower", x.lower_string(digits)},
             {"upper", x.upper_string(digits)},
             {"precision_bits", x.precision()}};
}

Row Formatter::quantity(const Quantity& q) const {
  if (const auto* r = std::get_if<Rational>(&q)) return rational(*r);
  return interval(std::get<Interval>(q));
}

namespace {

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string tsv_cell(const Row& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return sanitize(value.get<std::string>());
  if (value.is_object() && value.contains("lower") && value.contains("upper")) {
    return "[" + value["lower"].get<std::string>() + ", " + value["upper"].get<std::string>() +
           "]@" + std::to_string(value["precision_bits"].get<long>());
  }
  return sanitize(value.dump());
}

void emit_tsv(const Report& report, std::ostream& out) {
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    out << (c ? "\t" : "") << report.columns[c];
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      const auto& key = report.columns[c];
      out << (c ? "\t" : "") << (row.contains(key) ? tsv_cell(row[key]) : std::string());
    }
    out << '\n';
  }
}

void emit_json(const Report& report, std::ostream& out) {
  static const char* status_names[] = {"pass", "fail", "error"};
  nlohmann::json doc;
  doc["command"] = report.command;
  doc["columns"] = report.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows) doc["rows"].push_back(row);
  doc["status"] = status_names[std::clamp(report.status, 0, 2)];
  doc["exit_code"] = report.status;
  doc["diagnostics"] = report.diagnostics;
  out << doc.dump(2) << '\n';
}

void emit_report(const Report& report, Format format, std::ostream& out) {
  if (format == Format::Json) {
    emit_json(report, out);
  } else {
    emit_tsv(report, out);
  }
}

}  // namespace gpade::cli
