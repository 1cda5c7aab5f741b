#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "karteszi/combin.hpp"
#include "karteszi/config.hpp"

namespace karteszi::io {

inline constexpr int kSchemaVersion = 1;

/// On-disk form of a built configuration. Reals are written with 17
/// significant digits so doubles survive a round trip bit for bit.
struct ConfigDocument {
  int schema_version = kSchemaVersion;
  std::string kind = "karteszi";
  config::KParams params;
  geom::TolerancePolicy tolerance;
  std::vector<config::ConfigPoint> points;
  std::vector<config::ConfigLine> lines;
  std::vector<config::Flag> incidence;
  config::Diagnostics flags;

  friend bool operator==(const ConfigDocument& a, const ConfigDocument& b);
};

ConfigDocument to_document(const config::KConfig& config);
config::KConfig from_document(const ConfigDocument& doc);

std::string serialize(const ConfigDocument& doc);
/// Throws SchemaError on malformed or foreign-version input.
ConfigDocument parse(const std::string& text);

void write_document(const config::KConfig& config, const std::filesystem::path& path);
config::KConfig read_document(const std::filesystem::path& path);

/// Bare incidence list, for structures that were not built here:
///   {"schema_version": 1, "kind": "incidence", "num_points": P, "num_lines": L,
///    "flags": [[p, l], ...]}
std::string serialize_incidence(const combin::IncidenceStructure& s);
/// Accepts either document kind; a "karteszi" document contributes its incidence.
combin::IncidenceStructure parse_incidence(const std::string& text);
combin::IncidenceStructure read_incidence(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace karteszi::io
