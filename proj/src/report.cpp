#include "boxspec/report.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "boxspec/error.hpp"
#include "boxspec/numfmt.hpp"

namespace boxspec {

namespace {

std::string quote_if_needed(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c == '\n' || c == '\r' ? ' ' : c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += quote_if_needed(fields[i]);
  }
  return line;
}

bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw InvalidInput("not a boolean: '" + std::string(s) + "'");
}

void check_schema(std::string_view field) {
  if (parse_integer(field) != kSchemaVersion) {
    throw InvalidInput("unsupported schema_version " + std::string(field));
  }
}

std::vector<std::string> fields_of(std::string_view line, std::size_t expected) {
  std::vector<std::string> f = split_csv_line(line);
  if (f.size() != expected) {
    throw InvalidInput("expected " + std::to_string(expected) + " CSV fields, got " + std::to_string(f.size()));
  }
  check_schema(f[0]);
  return f;
}

template <class Row, class Parse>
std::vector<Row> read_table(std::istream& is, const std::string& header, Parse parse) {
  std::string line;
  if (!std::getline(is, line) || line != header) throw InvalidInput("missing or unexpected CSV header");
  std::vector<Row> rows;
  while (std::getline(is, line)) {
    if (!line.empty()) rows.push_back(parse(line));
  }
  return rows;
}

double json_real(const nlohmann::json& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

nlohmann::json json_real(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

nlohmann::json cuboid_json(const Cuboid& box) {
  return {{"a1", box.a1()}, {"a2", box.a2()}, {"a3", box.a3()}};
}

std::string format_indices(const std::vector<IndexTriple>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) s += '|';
    s += std::to_string(idx[i][0]) + ' ' + std::to_string(idx[i][1]) + ' ' + std::to_string(idx[i][2]);
  }
  return s;
}

// Row j of the listing belongs to the point whose cumulative multiplicity first reaches j.
template <class Fn>
void for_each_index(std::span<const SpectralPoint> points, std::int64_t k, Fn&& fn) {
  std::int64_t j = 1;
  for (const SpectralPoint& p : points) {
    for (std::size_t m = 0; m < p.multiplicity() && j <= k; ++m, ++j) fn(j, p);
  }
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  return out;
}

std::string optimize_csv_header() {
  return "schema_version,k,a1,a2,a3,lambda_star,delta,evaluations,restarts_agreeing,unique_within_tol,status";
}

std::string to_csv_row(const OptimalRecord& r) {
  const double nan = std::nan("");
  return join({std::to_string(kSchemaVersion), std::to_string(r.k),
               format_real(r.cuboid ? r.cuboid->a1() : nan), format_real(r.cuboid ? r.cuboid->a2() : nan),
               format_real(r.cuboid ? r.cuboid->a3() : nan), format_real(r.lambda_star), format_real(r.delta),
               std::to_string(r.evaluations), std::to_string(r.restarts_agreeing),
               r.unique_within_tol ? "true" : "false", r.status});
}

OptimalRecord parse_optimize_row(std::string_view line) {
  const auto f = fields_of(line, 11);
  OptimalRecord r;
  r.k = parse_integer(f[1]);
  const double a1 = parse_real(f[2]);
  const double a2 = parse_real(f[3]);
  const double a3 = parse_real(f[4]);
  if (!std::isnan(a1)) r.cuboid = Cuboid::from_three_sides(a1, a2, a3);
  r.lambda_star = parse_real(f[5]);
  r.delta = parse_real(f[6]);
  r.evaluations = parse_integer(f[7]);
  r.restarts_agreeing = static_cast<int>(parse_integer(f[8]));
  r.unique_within_tol = parse_bool(f[9]);
  r.status = f[10];
  return r;
}

void write_optimize_csv(std::ostream& os, std::span<const OptimalRecord> records) {
  os << optimize_csv_header() << '\n';
  for (const OptimalRecord& r : records) os << to_csv_row(r) << '\n';
}

std::vector<OptimalRecord> read_optimize_csv(std::istream& is) {
  return read_table<OptimalRecord>(is, optimize_csv_header(), parse_optimize_row);
}

std::string verify_csv_header() { return "schema_version,suite,input_repr,lhs,rhs,slack,pass"; }

std::string to_csv_row(const VerifyRow& r) {
  const BoundReport& b = r.report;
  return join({std::to_string(kSchemaVersion), r.suite, b.name + "(" + b.inputs + ")", format_real(b.lhs),
               format_real(b.rhs), format_real(b.slack), b.pass ? "true" : "false"});
}

VerifyRow parse_verify_row(std::string_view line) {
  const auto f = fields_of(line, 7);
  VerifyRow r;
  r.suite = f[1];
  const std::string& repr = f[2];
  const auto open = repr.find('(');
  if (open == std::string::npos || repr.empty() || repr.back() != ')') {
    throw InvalidInput("malformed input_repr '" + repr + "'");
  }
  r.report.name = repr.substr(0, open);
  r.report.inputs = repr.substr(open + 1, repr.size() - open - 2);
  r.report.lhs = parse_real(f[3]);
  r.report.rhs = parse_real(f[4]);
  r.report.slack = parse_real(f[5]);
  r.report.pass = parse_bool(f[6]);
  return r;
}

void write_verify_csv(std::ostream& os, std::span<const VerifyRow> rows) {
  os << verify_csv_header() << '\n';
  for (const VerifyRow& r : rows) os << to_csv_row(r) << '\n';
}

std::vector<VerifyRow> read_verify_csv(std::istream& is) {
  return read_table<VerifyRow>(is, verify_csv_header(), parse_verify_row);
}

void write_spectrum_csv(std::ostream& os, const Cuboid& box, std::span<const SpectralPoint> points,
                        std::int64_t k) {
  os << "schema_version,j,value,value_over_pi2,multiplicity,indices\n";
  for_each_index(points, k, [&](std::int64_t j, const SpectralPoint& p) {
    const std::string over =
        box.is_unit_cube() ? std::to_string(std::llround(p.value / kPi2)) : std::string();
    os << join({std::to_string(kSchemaVersion), std::to_string(j), format_real(p.value), over,
                std::to_string(p.multiplicity()), format_indices(p.indices)})
       << '\n';
  });
}

nlohmann::json spectrum_json(const Cuboid& box, std::span<const SpectralPoint> points, std::int64_t k) {
  nlohmann::json rows = nlohmann::json::array();
  for_each_index(points, k, [&](std::int64_t j, const SpectralPoint& p) {
    nlohmann::json idx = nlohmann::json::array();
    for (const IndexTriple& t : p.indices) idx.push_back({t[0], t[1], t[2]});
    nlohmann::json over = nullptr;
    if (box.is_unit_cube()) over = std::llround(p.value / kPi2);
    rows.push_back({{"j", j},
                    {"value", p.value},
                    {"value_over_pi2", over},
                    {"multiplicity", p.multiplicity()},
                    {"indices", idx}});
  });
  return {{"schema_version", kSchemaVersion}, {"cuboid", cuboid_json(box)}, {"eigenvalues", rows}};
}

void write_bundle_csv(std::ostream& os, const Cuboid& box, const CountBundle& b) {
  os << "schema_version,a1,a2,a3,lambda,N,T,T_x1,T_x2,T_x3,Tp_x1,Tp_x2,Tp_x3,f1,f2,f3,identity_ok\n";
  std::vector<std::string> f{std::to_string(kSchemaVersion), format_real(box.a1()), format_real(box.a2()),
                             format_real(box.a3()), format_real(b.lambda), std::to_string(b.N),
                             std::to_string(b.T)};
  for (auto v : b.T_plane) f.push_back(std::to_string(v));
  for (auto v : b.T_plane_pos) f.push_back(std::to_string(v));
  for (auto v : b.floors) f.push_back(std::to_string(v));
  f.push_back(b.consistent() ? "true" : "false");
  os << join(f) << '\n';
}

nlohmann::json bundle_json(const Cuboid& box, const CountBundle& b) {
  return {{"schema_version", kSchemaVersion},
          {"cuboid", cuboid_json(box)},
          {"lambda", b.lambda},
          {"N", b.N},
          {"T", b.T},
          {"T_x", b.T_plane},
          {"Tp_x", b.T_plane_pos},
          {"floors", b.floors},
          {"identity_ok", b.consistent()}};
}

nlohmann::json to_json(const OptimalRecord& r) {
  const double nan = std::nan("");
  return {{"schema_version", kSchemaVersion},
          {"k", r.k},
          {"a1", json_real(r.cuboid ? r.cuboid->a1() : nan)},
          {"a2", json_real(r.cuboid ? r.cuboid->a2() : nan)},
          {"a3", json_real(r.cuboid ? r.cuboid->a3() : nan)},
          {"lambda_star", json_real(r.lambda_star)},
          {"delta", json_real(r.delta)},
          {"evaluations", r.evaluations},
          {"restarts_agreeing", r.restarts_agreeing},
          {"unique_within_tol", r.unique_within_tol},
          {"status", r.status}};
}

OptimalRecord optimal_record_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw InvalidInput("unsupported schema_version");
  OptimalRecord r;
  r.k = j.at("k").get<std::int64_t>();
  if (!j.at("a1").is_null()) {
    r.cuboid = Cuboid::from_three_sides(j.at("a1").get<double>(), j.at("a2").get<double>(),
                                        j.at("a3").get<double>());
  }
  r.lambda_star = json_real(j.at("lambda_star"));
  r.delta = json_real(j.at("delta"));
  r.evaluations = j.at("evaluations").get<std::int64_t>();
  r.restarts_agreeing = j.at("restarts_agreeing").get<int>();
  r.unique_within_tol = j.at("unique_within_tol").get<bool>();
  r.status = j.at("status").get<std::string>();
  return r;
}

nlohmann::json to_json(const VerifyRow& r) {
  return {{"schema_version", kSchemaVersion},
          {"suite", r.suite},
          {"name", r.report.name},
          {"inputs", r.report.inputs},
          {"lhs", json_real(r.report.lhs)},
          {"rhs", json_real(r.report.rhs)},
          {"slack", json_real(r.report.slack)},
          {"pass", r.report.pass}};
}

VerifyRow verify_row_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw InvalidInput("unsupported schema_version");
  VerifyRow r;
  r.suite = j.at("suite").get<std::string>();
  r.report.name = j.at("name").get<std::string>();
  r.report.inputs = j.at("inputs").get<std::string>();
  r.report.lhs = json_real(j.at("lhs"));
  r.report.rhs = json_real(j.at("rhs"));
  r.report.slack = json_real(j.at("slack"));
  r.report.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace boxspec
