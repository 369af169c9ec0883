#include "bipolar/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "json.hpp"

namespace bipolar {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

[[noreturn]] void fail(std::size_t location, std::string_view unit, const std::string& what) {
  throw ParseError(fmt::format("{} {}: {}", unit, location, what), location);
}

std::optional<double> parse_real(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

void insert_record(BipolarFuzzySet& set, std::string id, double mu, double nu,
                   std::size_t location, std::string_view unit) {
  if (id.empty()) fail(location, unit, "empty element id");
  if (set.contains(id)) fail(location, unit, fmt::format("duplicate element id '{}'", id));
  for (const auto& [name, v] : {std::pair{"mu", mu}, std::pair{"nu", nu}}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      fail(location, unit,
           fmt::format("element '{}': {} = {} is outside [0, 1]", id, name, v));
    }
  }
  set.insert(std::move(id), BipolarValue(mu, nu));
}

BipolarFuzzySet read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!trim(line).empty()) {
      for (auto field : split_fields(line)) header.emplace_back(field);
      break;
    }
  }
  if (header.empty()) fail(std::max<std::size_t>(line_no, 1), "line", "missing header row");

  auto column = [&](std::string_view name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) fail(line_no, "line", fmt::format("missing column '{}'", name));
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t id_col = column("id");
  const std::size_t mu_col = column("mu");
  const std::size_t nu_col = column("nu");

  BipolarFuzzySet set;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      fail(line_no, "line",
           fmt::format("expected {} fields, found {}", header.size(), fields.size()));
    }
    const auto mu = parse_real(fields[mu_col]);
    const auto nu = parse_real(fields[nu_col]);
    if (!mu) fail(line_no, "line", fmt::format("mu '{}' is not a number", fields[mu_col]));
    if (!nu) fail(line_no, "line", fmt::format("nu '{}' is not a number", fields[nu_col]));
    insert_record(set, std::string(fields[id_col]), *mu, *nu, line_no, "line");
  }
  return set;
}

BipolarFuzzySet read_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(e.byte, "byte", "malformed JSON");
  }
  if (!doc.is_array()) fail(1, "record", "expected a top-level array of records");

  BipolarFuzzySet set;
  std::size_t record = 0;
  for (const auto& item : doc) {
    ++record;
    if (!item.is_object()) fail(record, "record", "expected an object");
    for (const char* key : {"id", "mu", "nu"}) {
      if (!item.contains(key)) fail(record, "record", fmt::format("missing field '{}'", key));
    }
    if (!item["id"].is_string()) fail(record, "record", "'id' must be a string");
    for (const char* key : {"mu", "nu"}) {
      if (!item[key].is_number()) fail(record, "record", fmt::format("'{}' must be a number", key));
    }
    insert_record(set, item["id"].get<std::string>(), item["mu"].get<double>(),
                  item["nu"].get<double>(), record, "record");
  }
  return set;
}

std::string quote(std::string_view s) { return json(std::string(s)).dump(); }

// Identifiers are written verbatim unless they need CSV quoting.
std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k != 0) out += sep;
    out += parts[k];
  }
  return out;
}

std::vector<std::string> decomposition_fields(const ElementRow& row, const NumberStyle& style) {
  std::vector<std::string> fields{csv_field(row.id)};
  for (double v : {row.value.mu(), row.value.nu(), row.penta.t, row.penta.f, row.penta.u,
                   row.penta.c, row.penta.i, row.polar.tau, row.polar.omega}) {
    fields.push_back(format_number(v, style));
  }
  fields.emplace_back(to_string(row.cls));
  return fields;
}

void write_report_csv(std::ostream& out, const MeasureReport& report, const NumberStyle& style) {
  std::vector<std::string> header{"id", "mu", "nu", "t", "f", "u", "c", "i", "tau", "omega",
                                  "class"};
  for (const auto& k : report.cardinality_kinds) header.push_back("cardinality_" + k);
  for (const auto& k : report.entropy_kinds) header.push_back("entropy_" + k);
  out << join(header, ",") << '\n';

  for (const auto& row : report.elements) {
    auto fields = decomposition_fields(row, style);
    for (double v : row.cardinality) fields.push_back(format_number(v, style));
    for (double v : row.entropy) fields.push_back(format_number(v, style));
    out << join(fields, ",") << '\n';
  }

  if (!report.aggregates.empty()) {
    out << "\naggregate,value\n";
    for (const auto& [name, value] : report.aggregates) {
      out << csv_field(name) << ',' << format_number(value, style) << '\n';
    }
  }

  if (report.similarity) {
    const auto& m = *report.similarity;
    out << "\nrow,column," << m.measure << '_' << m.kind << '\n';
    for (std::size_t r = 0; r < m.lower.size(); ++r) {
      for (std::size_t c = 0; c < m.lower[r].size(); ++c) {
        out << csv_field(m.ids[r]) << ',' << csv_field(m.ids[c]) << ','
            << format_number(m.lower[r][c], style) << '\n';
      }
    }
  }
}

void write_metadata_json(std::ostream& out, const ReportMetadata& meta) {
  out << "  \"metadata\": {\n";
  out << "    \"dataset\": " << quote(meta.dataset) << ",\n";
  out << "    \"settings\": {";
  for (std::size_t k = 0; k < meta.settings.size(); ++k) {
    out << (k == 0 ? "\n" : ",\n") << "      " << quote(meta.settings[k].first) << ": "
        << quote(meta.settings[k].second);
  }
  out << (meta.settings.empty() ? "},\n" : "\n    },\n");
  out << "    \"tool_version\": " << quote(meta.tool_version) << "\n";
  out << "  }";
}

std::string number_list(const std::vector<double>& values, const NumberStyle& style) {
  std::vector<std::string> parts;
  parts.reserve(values.size());
  for (double v : values) parts.push_back(format_number(v, style));
  return "[" + join(parts, ", ") + "]";
}

void write_report_json(std::ostream& out, const MeasureReport& report, const NumberStyle& style) {
  out << "{\n";
  write_metadata_json(out, report.metadata);
  out << ",\n  \"elements\": [";
  for (std::size_t r = 0; r < report.elements.size(); ++r) {
    const auto& row = report.elements[r];
    out << (r == 0 ? "\n" : ",\n") << "    {";
    std::vector<std::string> members{"\"id\": " + quote(row.id)};
    const std::pair<const char*, double> numbers[] = {
        {"mu", row.value.mu()}, {"nu", row.value.nu()}, {"t", row.penta.t},
        {"f", row.penta.f},     {"u", row.penta.u},     {"c", row.penta.c},
        {"i", row.penta.i},     {"tau", row.polar.tau}, {"omega", row.polar.omega}};
    for (const auto& [key, value] : numbers) {
      members.push_back(fmt::format("\"{}\": {}", key, format_number(value, style)));
    }
    members.push_back("\"class\": " + quote(to_string(row.cls)));
    auto keyed = [&](const std::vector<std::string>& kinds, const std::vector<double>& values) {
      std::vector<std::string> parts;
      for (std::size_t k = 0; k < kinds.size() && k < values.size(); ++k) {
        parts.push_back(quote(kinds[k]) + ": " + format_number(values[k], style));
      }
      return "{" + join(parts, ", ") + "}";
    };
    members.push_back("\"cardinality\": " + keyed(report.cardinality_kinds, row.cardinality));
    members.push_back("\"entropy\": " + keyed(report.entropy_kinds, row.entropy));
    out << join(members, ", ") << "}";
  }
  out << (report.elements.empty() ? "],\n" : "\n  ],\n");

  out << "  \"aggregates\": {";
  for (std::size_t k = 0; k < report.aggregates.size(); ++k) {
    out << (k == 0 ? "\n" : ",\n") << "    " << quote(report.aggregates[k].first) << ": "
        << format_number(report.aggregates[k].second, style);
  }
  out << (report.aggregates.empty() ? "},\n" : "\n  },\n");

  out << "  \"similarity\": ";
  if (!report.similarity) {
    out << "null\n";
  } else {
    const auto& m = *report.similarity;
    std::vector<std::string> ids;
    for (const auto& id : m.ids) ids.push_back(quote(id));
    out << "{\n";
    out << "    \"measure\": " << quote(m.measure) << ",\n";
    out << "    \"kind\": " << quote(m.kind) << ",\n";
    out << "    \"ids\": [" << join(ids, ", ") << "],\n";
    out << "    \"lower\": [";
    for (std::size_t r = 0; r < m.lower.size(); ++r) {
      out << (r == 0 ? "\n" : ",\n") << "      " << number_list(m.lower[r], style);
    }
    out << (m.lower.empty() ? "]\n" : "\n    ]\n");
    out << "  }\n";
  }
  out << "}\n";
}

std::string points_text(const std::vector<BipolarValue>& points, const NumberStyle& style) {
  std::vector<std::string> parts;
  for (const auto& p : points) {
    parts.push_back("(" + format_number(p.mu(), style) + ";" + format_number(p.nu(), style) + ")");
  }
  return join(parts, " ");
}

}  // namespace

std::string_view to_string(Format format) noexcept {
  return format == Format::Csv ? "csv" : "json";
}

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

Format format_from_path(std::string_view path) noexcept {
  if (path.size() < 5) return Format::Csv;
  std::string ext(path.substr(path.size() - 5));
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return ext == ".json" ? Format::Json : Format::Csv;
}

std::string format_number(double x, const NumberStyle& style) {
  std::string text;
  if (style.mode == NumberStyle::Mode::Paper) {
    const double scale = std::pow(10.0, style.digits);
    // The guard keeps values such as 0.58 (stored as 0.5799999...) from dropping a digit.
    const double truncated = std::floor(std::abs(x) * scale + 1e-9) / scale;
    text = fmt::format("{:.{}f}", std::copysign(truncated, x), style.digits);
  } else {
    int decimals = style.digits - 1;
    if (x != 0.0 && std::isfinite(x)) {
      const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
      decimals = std::clamp(style.digits - 1 - exponent, 0, 15);
    }
    text = fmt::format("{:.{}f}", x, decimals);
  }
  if (text.starts_with('-') && text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

BipolarFuzzySet read_dataset(std::istream& in, Format format) {
  return format == Format::Csv ? read_csv(in) : read_json(in);
}

void write_dataset(std::ostream& out, const BipolarFuzzySet& set, Format format,
                   const NumberStyle& style) {
  if (format == Format::Csv) {
    out << "id,mu,nu\n";
    for (const auto& [id, x] : set) {
      out << csv_field(id) << ',' << format_number(x.mu(), style) << ','
          << format_number(x.nu(), style) << '\n';
    }
    return;
  }
  out << "[";
  std::size_t k = 0;
  for (const auto& [id, x] : set) {
    out << (k++ == 0 ? "\n" : ",\n") << "  {\"id\": " << quote(id)
        << ", \"mu\": " << format_number(x.mu(), style)
        << ", \"nu\": " << format_number(x.nu(), style) << "}";
  }
  out << (set.empty() ? "]\n" : "\n]\n");
}

ElementRow describe(std::string id, const BipolarValue& value) {
  const PentaValue penta = to_penta(value);
  return ElementRow{std::move(id), value, penta, to_tau_omega(penta), classify(value), {}, {}};
}

void write_report(std::ostream& out, const MeasureReport& report, Format format,
                  const NumberStyle& style) {
  if (format == Format::Csv) {
    write_report_csv(out, report, style);
  } else {
    write_report_json(out, report, style);
  }
}

void write_audit(std::ostream& out, const AuditReport& report, const ReportMetadata& metadata,
                 Format format, const NumberStyle& style) {
  if (format == Format::Csv) {
    out << "axiom,status,checks,witness_points,witness_values,detail\n";
    for (const auto& r : report.axioms) {
      out << r.axiom << ',' << to_string(r.status) << ',' << r.checks << ',';
      if (r.witness) {
        std::vector<std::string> values;
        for (double v : r.witness->values) values.push_back(format_number(v, style));
        out << points_text(r.witness->points, style) << ',' << join(values, " ") << ','
            << csv_field(r.witness->detail);
      } else {
        out << ",,";
      }
      out << '\n';
    }
    return;
  }

  out << "{\n";
  write_metadata_json(out, metadata);
  out << ",\n  \"family\": " << quote(report.family()) << ",\n";
  out << "  \"measure\": " << quote(report.measure()) << ",\n";
  out << "  \"axioms\": [";
  for (std::size_t k = 0; k < report.axioms.size(); ++k) {
    const auto& r = report.axioms[k];
    out << (k == 0 ? "\n" : ",\n") << "    {\"axiom\": " << quote(r.axiom)
        << ", \"status\": " << quote(to_string(r.status)) << ", \"checks\": " << r.checks
        << ", \"witness\": ";
    if (!r.witness) {
      out << "null}";
      continue;
    }
    std::vector<std::string> points;
    for (const auto& p : r.witness->points) {
      points.push_back("[" + format_number(p.mu(), style) + ", " + format_number(p.nu(), style) +
                       "]");
    }
    out << "{\"points\": [" << join(points, ", ")
        << "], \"values\": " << number_list(r.witness->values, style)
        << ", \"detail\": " << quote(r.witness->detail) << "}}";
  }
  out << (report.axioms.empty() ? "],\n" : "\n  ],\n");
  out << "  \"expected_pattern\": " << (matches_expected_pattern(report) ? "true" : "false")
      << "\n}\n";
}

}  // namespace bipolar
