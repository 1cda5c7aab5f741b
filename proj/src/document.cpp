#include "karteszi/document.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "karteszi/error.hpp"

namespace karteszi::io {

using nlohmann::json;

bool operator==(const ConfigDocument& a, const ConfigDocument& b) {
  auto bits = [](double x) {
    std::uint64_t u;
    std::memcpy(&u, &x, sizeof u);
    return u;
  };
  auto same_pt = [&](const config::ConfigPoint& p, const config::ConfigPoint& q) {
    return p.id == q.id && p.orbit == q.orbit && p.index == q.index && bits(p.pos.x) == bits(q.pos.x) &&
           bits(p.pos.y) == bits(q.pos.y);
  };
  auto same_ln = [&](const config::ConfigLine& p, const config::ConfigLine& q) {
    return p.id == q.id && p.orbit == q.orbit && p.index == q.index && bits(p.line.a()) == bits(q.line.a()) &&
           bits(p.line.b()) == bits(q.line.b()) && bits(p.line.c()) == bits(q.line.c());
  };
  return a.schema_version == b.schema_version && a.kind == b.kind && a.params == b.params &&
         bits(a.tolerance.eps_inc) == bits(b.tolerance.eps_inc) &&
         bits(a.tolerance.sep_factor) == bits(b.tolerance.sep_factor) &&
         std::equal(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(), same_pt) &&
         std::equal(a.lines.begin(), a.lines.end(), b.lines.begin(), b.lines.end(), same_ln) &&
         a.incidence == b.incidence && a.flags.verdict == b.flags.verdict && a.flags.extras == b.flags.extras &&
         a.flags.missing == b.flags.missing && bits(a.flags.min_margin) == bits(b.flags.min_margin) &&
         a.flags.max_line_degree == b.flags.max_line_degree &&
         a.flags.max_point_degree == b.flags.max_point_degree;
}

ConfigDocument to_document(const config::KConfig& config) {
  ConfigDocument doc;
  doc.params = config.params;
  doc.tolerance = config.tolerance;
  doc.points = config.points;
  doc.lines = config.lines;
  doc.incidence = config.incidence;
  doc.flags = config.flags;
  return doc;
}

config::KConfig from_document(const ConfigDocument& doc) {
  config::KConfig cfg;
  cfg.params = doc.params;
  cfg.tolerance = doc.tolerance;
  cfg.points = doc.points;
  cfg.lines = doc.lines;
  cfg.incidence = doc.incidence;
  cfg.flags = doc.flags;
  return cfg;
}

namespace {

std::string real(double x) {
  if (!std::isfinite(x)) throw Error(Errc::SchemaError, "non-finite real cannot be written");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";  // keeps -0.0 a float
  return s;
}

void write_flags(std::ostringstream& os, const std::vector<config::Flag>& flags) {
  os << '[';
  for (std::size_t i = 0; i < flags.size(); ++i) {
    os << (i ? ", " : "") << '[' << flags[i].first << ", " << flags[i].second << ']';
  }
  os << ']';
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::SchemaError, std::string("missing field '") + key + "'");
  return j.at(key);
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const char* where) {
  std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) {
      throw Error(Errc::SchemaError, std::string("unknown field '") + key + "' in " + where);
    }
  }
}

std::vector<config::Flag> read_flags(const json& j) {
  std::vector<config::Flag> out;
  for (const auto& f : j) {
    if (!f.is_array() || f.size() != 2) throw Error(Errc::SchemaError, "flag must be [point, line]");
    out.emplace_back(f[0].get<int>(), f[1].get<int>());
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaError, e.what());
  }
}

void check_header(const json& j) {
  const int version = field(j, "schema_version").get<int>();
  if (version != kSchemaVersion) {
    throw Error(Errc::SchemaError, "unsupported schema_version " + std::to_string(version));
  }
}

}  // namespace

std::string serialize(const ConfigDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"schema_version\": " << doc.schema_version << ",\n";
  os << "  \"kind\": \"" << doc.kind << "\",\n";
  os << "  \"params\": {\"n\": " << doc.params.n << ", \"l\": " << doc.params.l << ", \"m\": " << doc.params.m
     << "},\n";
  os << "  \"tolerance\": {\"eps_inc\": " << real(doc.tolerance.eps_inc)
     << ", \"sep_factor\": " << real(doc.tolerance.sep_factor) << "},\n";
  os << "  \"points\": [\n";
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    const auto& p = doc.points[i];
    os << "    {\"id\": " << p.id << ", \"orbit\": \"" << config::orbit_tag(p.orbit) << "\", \"index\": " << p.index
       << ", \"x\": " << real(p.pos.x) << ", \"y\": " << real(p.pos.y) << '}'
       << (i + 1 < doc.points.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"lines\": [\n";
  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    const auto& l = doc.lines[i];
    os << "    {\"id\": " << l.id << ", \"orbit\": \"" << config::orbit_tag(l.orbit) << "\", \"index\": " << l.index
       << ", \"a\": " << real(l.line.a()) << ", \"b\": " << real(l.line.b()) << ", \"c\": " << real(l.line.c())
       << '}' << (i + 1 < doc.lines.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"incidence\": ";
  write_flags(os, doc.incidence);
  os << ",\n";
  os << "  \"flags\": {\"verdict\": \"" << config::verdict_name(doc.flags.verdict)
     << "\", \"min_margin\": " << real(doc.flags.min_margin)
     << ", \"max_line_degree\": " << doc.flags.max_line_degree
     << ", \"max_point_degree\": " << doc.flags.max_point_degree << ", \"extras\": ";
  write_flags(os, doc.flags.extras);
  os << ", \"missing\": ";
  write_flags(os, doc.flags.missing);
  os << "}\n}\n";
  return os.str();
}

ConfigDocument parse(const std::string& text) {
  const json j = parse_json(text);
  check_header(j);
  reject_unknown(j, {"schema_version", "kind", "params", "tolerance", "points", "lines", "incidence", "flags"},
                 "document");
  ConfigDocument doc;
  try {
    doc.kind = field(j, "kind").get<std::string>();
    if (doc.kind != "karteszi") throw Error(Errc::SchemaError, "expected kind 'karteszi', got '" + doc.kind + "'");

    const json& p = field(j, "params");
    reject_unknown(p, {"n", "l", "m"}, "params");
    doc.params = {field(p, "n").get<int>(), field(p, "l").get<int>(), field(p, "m").get<int>()};

    const json& t = field(j, "tolerance");
    reject_unknown(t, {"eps_inc", "sep_factor"}, "tolerance");
    doc.tolerance = {field(t, "eps_inc").get<double>(), field(t, "sep_factor").get<double>()};

    for (const auto& e : field(j, "points")) {
      reject_unknown(e, {"id", "orbit", "index", "x", "y"}, "point");
      doc.points.push_back({field(e, "id").get<int>(),
                            config::point_orbit_from_tag(field(e, "orbit").get<std::string>()),
                            field(e, "index").get<int>(),
                            {field(e, "x").get<double>(), field(e, "y").get<double>()}});
    }
    for (const auto& e : field(j, "lines")) {
      reject_unknown(e, {"id", "orbit", "index", "a", "b", "c"}, "line");
      doc.lines.push_back({field(e, "id").get<int>(), config::line_orbit_from_tag(field(e, "orbit").get<std::string>()),
                           field(e, "index").get<int>(),
                           geom::Line::from_coefficients(field(e, "a").get<double>(), field(e, "b").get<double>(),
                                                         field(e, "c").get<double>())});
    }
    doc.incidence = read_flags(field(j, "incidence"));

    const json& f = field(j, "flags");
    reject_unknown(f, {"verdict", "min_margin", "max_line_degree", "max_point_degree", "extras", "missing"}, "flags");
    doc.flags.verdict = config::verdict_from_name(field(f, "verdict").get<std::string>());
    doc.flags.min_margin = field(f, "min_margin").get<double>();
    doc.flags.max_line_degree = field(f, "max_line_degree").get<int>();
    doc.flags.max_point_degree = field(f, "max_point_degree").get<int>();
    doc.flags.extras = read_flags(field(f, "extras"));
    doc.flags.missing = read_flags(field(f, "missing"));
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaError, e.what());
  }

  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    if (doc.points[i].id != static_cast<int>(i)) throw Error(Errc::SchemaError, "point ids must be dense and sorted");
  }
  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    if (doc.lines[i].id != static_cast<int>(i)) throw Error(Errc::SchemaError, "line ids must be dense and sorted");
  }
  for (const auto& [pt, ln] : doc.incidence) {
    if (pt < 0 || ln < 0 || pt >= static_cast<int>(doc.points.size()) || ln >= static_cast<int>(doc.lines.size())) {
      throw Error(Errc::SchemaError, "incidence refers to a missing point or line");
    }
  }
  if (!std::is_sorted(doc.incidence.begin(), doc.incidence.end())) {
    throw Error(Errc::SchemaError, "incidence must be sorted");
  }
  return doc;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

void write_document(const config::KConfig& config, const std::filesystem::path& path) {
  write_text(path, serialize(to_document(config)));
}

config::KConfig read_document(const std::filesystem::path& path) { return from_document(parse(read_text(path))); }

std::string serialize_incidence(const combin::IncidenceStructure& s) {
  std::ostringstream os;
  os << "{\n  \"schema_version\": " << kSchemaVersion << ",\n  \"kind\": \"incidence\",\n  \"num_points\": "
     << s.num_points << ",\n  \"num_lines\": " << s.num_lines << ",\n  \"flags\": ";
  write_flags(os, s.flags);
  os << "\n}\n";
  return os.str();
}

combin::IncidenceStructure parse_incidence(const std::string& text) {
  const json j = parse_json(text);
  check_header(j);
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "karteszi") {
    const auto cfg = from_document(parse(text));
    return combin::IncidenceStructure::make(static_cast<int>(cfg.points.size()), static_cast<int>(cfg.lines.size()),
                                            cfg.incidence);
  }
  if (kind != "incidence") throw Error(Errc::SchemaError, "unknown document kind '" + kind + "'");
  reject_unknown(j, {"schema_version", "kind", "num_points", "num_lines", "flags"}, "incidence document");
  try {
    return combin::IncidenceStructure::make(field(j, "num_points").get<int>(), field(j, "num_lines").get<int>(),
                                            read_flags(field(j, "flags")));
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(Errc::SchemaError, e.what());
  }
}

combin::IncidenceStructure read_incidence(const std::filesystem::path& path) {
  return parse_incidence(read_text(path));
}

}  // namespace karteszi::io
