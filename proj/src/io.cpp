#include "protometric/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "protometric/errors.hpp"

namespace protometric::io {

using nlohmann::json;
using nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  return std::nullopt;
}

std::string_view to_string(Format format) {
  switch (format) {
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::text: return "text";
  }
  return "?";
}

Format detect_format(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '{' ? Format::json : Format::csv;
}

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_number(std::string_view cell) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::nullopt;
  return value;
}

struct CsvRow {
  std::size_t line;
  std::vector<std::string_view> cells;
};

std::vector<CsvRow> split_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;
    CsvRow row{line, {}};
    std::size_t start = 0;
    while (true) {
      const auto comma = raw.find(',', start);
      row.cells.push_back(trim(raw.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double finite_cell(std::string_view cell, std::size_t row, std::size_t column) {
  const auto value = to_number(cell);
  if (!value) throw ParseError("non-numeric cell '" + std::string(cell) + "'", row, column);
  if (!std::isfinite(*value)) throw ParseError("non-finite cell '" + std::string(cell) + "'", row, column);
  return *value;
}

LabeledMatrix build(std::vector<std::string> labels, std::vector<double> values) {
  try {
    return LabeledMatrix(std::move(labels), std::move(values));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

LabeledMatrix parse_csv(std::string_view text) {
  auto rows = split_csv(text);
  if (rows.empty()) throw ParseError("empty input");

  const auto& first = rows.front().cells;
  const bool header = first.front().empty() ||
                      std::none_of(first.begin(), first.end(),
                                   [](std::string_view c) { return to_number(c).has_value(); });
  const std::size_t body_start = header ? 1 : 0;
  const std::size_t n = rows.size() - body_start;
  if (n == 0) throw ParseError("header row without matrix body", rows.front().line);

  const auto& first_body = rows[body_start].cells;
  const bool row_labels = (header && first.size() == n + 1) || !to_number(first_body.front());
  const std::size_t width = n + (row_labels ? 1 : 0);

  std::vector<std::string> header_labels;
  if (header) {
    if (first.size() != n && first.size() != n + 1)
      throw ParseError("header has " + std::to_string(first.size()) + " cells for " +
                           std::to_string(n) + " matrix rows",
                       rows.front().line);
    for (std::size_t k = first.size() - n; k < first.size(); ++k)
      header_labels.emplace_back(first[k]);
  }

  std::vector<std::string> body_labels;
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t r = body_start; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != width)
      throw ParseError("matrix is not square: expected " + std::to_string(width) +
                           " cells, found " + std::to_string(row.cells.size()),
                       row.line);
    if (row_labels) body_labels.emplace_back(row.cells.front());
    for (std::size_t c = row_labels ? 1 : 0; c < width; ++c)
      values.push_back(finite_cell(row.cells[c], row.line, c + 1));
  }

  std::vector<std::string> labels;
  if (header && row_labels && header_labels != body_labels)
    throw ParseError("row labels do not match header labels");
  if (header)
    labels = std::move(header_labels);
  else if (row_labels)
    labels = std::move(body_labels);
  else
    labels = LabeledMatrix::default_labels(n);
  return build(std::move(labels), std::move(values));
}

template <class Json>
LabeledMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("JSON matrix document must be an object");
  if (!j.contains("matrix")) throw ParseError("JSON document has no \"matrix\" member");
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || rows.empty())
    throw ParseError("\"matrix\" must be a nonempty array of rows");
  const std::size_t n = rows.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError("matrix is not square: row must have " + std::to_string(n) + " numbers",
                       r + 1);
    for (std::size_t c = 0; c < n; ++c) {
      const auto& cell = row[c];
      if (!cell.is_number()) throw ParseError("non-numeric cell", r + 1, c + 1);
      const double v = cell.template get<double>();
      if (!std::isfinite(v)) throw ParseError("non-finite cell", r + 1, c + 1);
      values.push_back(v);
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = j.at("labels");
    if (!l.is_array()) throw ParseError("\"labels\" must be an array of strings");
    if (l.size() != n)
      throw ParseError("\"labels\" has " + std::to_string(l.size()) + " entries for " +
                       std::to_string(n) + " rows");
    for (const auto& label : l) {
      if (!label.is_string()) throw ParseError("\"labels\" must be an array of strings");
      labels.push_back(label.template get<std::string>());
    }
  } else {
    labels = LabeledMatrix::default_labels(n);
  }
  return build(std::move(labels), std::move(values));
}

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

void check_csv_label(const std::string& label) {
  if (label.find_first_of(",\"\r\n") != std::string::npos || trim(label) != label)
    throw InputError("label '" + label + "' cannot be written to CSV");
}

std::string matrix_json(const LabeledMatrix& m, const std::string& indent) {
  std::ostringstream os;
  const std::size_t n = m.size();
  os << "{\n" << indent << "  \"labels\": [";
  for (std::size_t k = 0; k < n; ++k) os << (k ? ", " : "") << quoted(m.labels()[k]);
  os << "],\n" << indent << "  \"matrix\": [\n";
  for (std::size_t x = 0; x < n; ++x) {
    os << indent << "    [";
    for (std::size_t y = 0; y < n; ++y) os << (y ? ", " : "") << format_number(m(x, y));
    os << "]" << (x + 1 < n ? "," : "") << "\n";
  }
  os << indent << "  ]\n" << indent << "}";
  return os.str();
}

std::string function_json(const LabelFunction& f) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < f.size(); ++k)
    os << (k ? ", " : "") << quoted(f.labels()[k]) << ": " << format_number(f[k]);
  os << "}";
  return os.str();
}

template <class Json>
LabelFunction function_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("label function must be a JSON object of numbers");
  std::vector<std::string> labels;
  std::vector<double> values;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number())
      throw ParseError("value for label '" + it.key() + "' is not a number");
    labels.push_back(it.key());
    values.push_back(it.value().template get<double>());
  }
  if (labels.empty()) throw ParseError("label function is empty");
  try {
    return LabelFunction(std::move(labels), std::move(values));
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

ordered_json min_slack_json(double v) {
  return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

ordered_json verdict_json(const PropertyVerdict& v) {
  ordered_json j;
  j["status"] = std::string(to_string(v.status));
  j["min_slack"] = min_slack_json(v.min_slack);
  j["count_checked"] = v.count_checked;
  j["violation_count"] = v.violation_count;
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : v.witnesses) {
    ordered_json wj;
    wj["x"] = w.x;
    wj["y"] = w.y;
    wj["z"] = w.z;
    wj["lhs"] = w.lhs;
    wj["rhs"] = w.rhs;
    wj["deficit"] = w.deficit;
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

std::string witness_text(const ViolationWitness& w) {
  return "(" + w.x + "," + w.y + "," + w.z + ") lhs=" + format_number(w.lhs) +
         " rhs=" + format_number(w.rhs) + " deficit=" + format_number(w.deficit);
}

std::string verdict_line(const PropertyVerdict& v) {
  std::string s(to_string(v.status));
  s += " min_slack=" + (std::isfinite(v.min_slack) ? format_number(v.min_slack) : "none");
  s += " checked=" + std::to_string(v.count_checked);
  s += " violations=" + std::to_string(v.violation_count);
  return s;
}

std::vector<std::pair<std::string, const PropertyVerdict*>> report_verdicts(
    const ClassificationReport& r) {
  std::vector<std::pair<std::string, const PropertyVerdict*>> out;
  for (std::size_t k = 0; k < kAllTypes.size(); ++k)
    out.emplace_back("triangle_" + std::string(to_string(kAllTypes[k])), &r.triangle[k]);
  for (std::size_t k = 0; k < kAllTypes.size(); ++k)
    out.emplace_back("prequad_" + std::string(to_string(kAllTypes[k])), &r.prequadrangle[k]);
  out.emplace_back("strict_t", &r.strict);
  return out;
}

}  // namespace

LabeledMatrix parse_matrix(std::string_view text, Format format) {
  if (trim(text).find_first_not_of("\r\n") == std::string_view::npos)
    throw ParseError("empty input");
  switch (format) {
    case Format::csv: return parse_csv(text);
    case Format::json: return matrix_from_json(parse_json(text));
    case Format::text: break;
  }
  throw InputError("text is an output-only format");
}

LabeledMatrix parse_matrix(std::string_view text) { return parse_matrix(text, detect_format(text)); }

std::string serialize_matrix(const LabeledMatrix& m, Format format) {
  const std::size_t n = m.size();
  std::ostringstream os;
  switch (format) {
    case Format::csv:
      for (const auto& label : m.labels()) check_csv_label(label);
      for (const auto& label : m.labels()) os << ',' << label;
      os << '\n';
      for (std::size_t x = 0; x < n; ++x) {
        os << m.labels()[x];
        for (std::size_t y = 0; y < n; ++y) os << ',' << format_number(m(x, y));
        os << '\n';
      }
      return os.str();
    case Format::json:
      return matrix_json(m, "") + "\n";
    case Format::text: {
      std::size_t w = 1;
      for (const auto& label : m.labels()) w = std::max(w, label.size());
      for (double v : m.entries()) w = std::max(w, format_number(v).size());
      os << std::setw(static_cast<int>(w)) << "";
      for (const auto& label : m.labels()) os << "  " << std::setw(static_cast<int>(w)) << label;
      os << '\n';
      for (std::size_t x = 0; x < n; ++x) {
        os << std::setw(static_cast<int>(w)) << m.labels()[x];
        for (std::size_t y = 0; y < n; ++y)
          os << "  " << std::setw(static_cast<int>(w)) << format_number(m(x, y));
        os << '\n';
      }
      return os.str();
    }
  }
  return {};
}

LabelFunction parse_label_function(std::string_view text) {
  if (trim(text).find_first_not_of("\r\n") == std::string_view::npos)
    throw ParseError("empty label function");
  if (detect_format(text) == Format::json) return function_from_json(parse_json(text));
  auto rows = split_csv(text);
  std::vector<std::string> labels;
  std::vector<double> values;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != 2)
      throw ParseError("label function rows must have two cells (label,value)", row.line);
    if (r == 0 && !to_number(row.cells[1])) continue;  // header
    labels.emplace_back(row.cells[0]);
    values.push_back(finite_cell(row.cells[1], row.line, 2));
  }
  if (labels.empty()) throw ParseError("label function is empty");
  try {
    return LabelFunction(std::move(labels), std::move(values));
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_label_function(const LabelFunction& f, Format format) {
  if (format == Format::json) return function_json(f) + "\n";
  std::ostringstream os;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (format == Format::csv) check_csv_label(f.labels()[k]);
    os << f.labels()[k] << (format == Format::csv ? "," : " ") << format_number(f[k]) << '\n';
  }
  return os.str();
}

std::string serialize_report(const ClassificationReport& r, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["labels"] = r.labels;
    j["tolerances"] = {{"eps_ineq", r.tolerances.eps_ineq},
                       {"eps_eq", r.tolerances.eps_eq},
                       {"eps_strict", r.tolerances.eps_strict}};
    for (const auto& [name, value] : r.flags()) j[name] = value;
    ordered_json verdicts;
    for (const auto& [name, verdict] : report_verdicts(r)) verdicts[name] = verdict_json(*verdict);
    j["verdicts"] = std::move(verdicts);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "labels:";
  for (const auto& label : r.labels) os << ' ' << label;
  os << "\nflags:\n";
  for (const auto& [name, value] : r.flags())
    os << "  " << std::left << std::setw(28) << name << (value ? "yes" : "no") << '\n';
  os << "verdicts:\n";
  for (const auto& [name, verdict] : report_verdicts(r)) {
    os << "  " << std::left << std::setw(12) << name << verdict_line(*verdict) << '\n';
    for (const auto& w : verdict->witnesses) os << "    witness " << witness_text(w) << '\n';
  }
  return os.str();
}

std::string serialize_verdict(const PropertyVerdict& v, std::string_view property, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["property"] = std::string(property);
    const ordered_json body = verdict_json(v);
    for (const auto& [key, value] : body.items()) j[key] = value;
    return j.dump(2) + "\n";
  }
  std::string s = std::string(property) + " " + verdict_line(v) + "\n";
  if (!v.witnesses.empty()) s += "witness " + witness_text(v.witnesses.front()) + "\n";
  return s;
}

std::string serialize_decomposition(const Decomposition& parts) {
  return "{\n  \"d\": " + matrix_json(parts.d, "  ") + ",\n  \"f\": " + function_json(parts.f) +
         "\n}\n";
}

bool looks_like_decomposition(std::string_view text) {
  if (detect_format(text) != Format::json) return false;
  const auto j = ordered_json::parse(text, nullptr, false);
  return j.is_object() && j.contains("d") && j.contains("f");
}

Decomposition parse_decomposition(std::string_view text) {
  const auto j = parse_json(text);
  if (!j.is_object() || !j.contains("d") || !j.contains("f"))
    throw ParseError("decomposition must be an object with \"d\" and \"f\"");
  return {matrix_from_json(j.at("d")), function_from_json(j.at("f"))};
}

std::string serialize_zero_coordinates(const ZeroCoordinates& coords) {
  return "{\n  \"ref\": " + quoted(coords.ref) + ",\n  \"a\": " + function_json(coords.a) +
         ",\n  \"b\": " + function_json(coords.b) + "\n}\n";
}

std::string serialize_preorder(const PreorderResult& p, Format format) {
  const auto& labels = p.labels;
  auto rep = [&](std::size_t cls) { return labels[p.classes[cls].front()]; };
  if (format == Format::json) {
    ordered_json j;
    j["labels"] = labels;
    ordered_json relation = ordered_json::array();
    for (std::size_t x = 0; x < labels.size(); ++x)
      for (std::size_t y = 0; y < labels.size(); ++y)
        if (p.related(x, y)) relation.push_back({labels[x], labels[y]});
    j["relation"] = std::move(relation);
    ordered_json classes = ordered_json::array();
    for (const auto& cls : p.classes) {
      ordered_json members = ordered_json::array();
      for (std::size_t k : cls) members.push_back(labels[k]);
      classes.push_back(std::move(members));
    }
    j["classes"] = std::move(classes);
    ordered_json order = ordered_json::array();
    for (const auto& [a, b] : p.quotient_order) order.push_back({rep(a), rep(b)});
    j["quotient_order"] = std::move(order);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "classes:\n";
  for (const auto& cls : p.classes) {
    os << " ";
    for (std::size_t k : cls) os << ' ' << labels[k];
    os << '\n';
  }
  os << "quotient order:\n";
  for (const auto& [a, b] : p.quotient_order) os << "  [" << rep(a) << "] <= [" << rep(b) << "]\n";
  return os.str();
}

}  // namespace protometric::io
