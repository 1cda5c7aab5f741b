#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"
#include "karteszi/analyze.hpp"
#include "karteszi/document.hpp"
#include "karteszi/error.hpp"
#include "karteszi/render.hpp"

using namespace karteszi;
using namespace karteszi::io;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("karteszi-io-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

Errc parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::IoError;
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("document round trip through a file") {
  TempDir tmp;
  const auto cfg = config::build({7, 2, 3});
  const auto file = tmp.path / "k7.json";
  write_document(cfg, file);
  const auto back = read_document(file);
  CHECK(to_document(back) == to_document(cfg));
  CHECK(serialize(to_document(back)) == read_text(file));
}

TEST_CASE("schema violations") {
  const auto text = serialize(to_document(config::build({7, 2, 3})));
  CHECK(parse_error(replace_once(text, "\"schema_version\": 1", "\"schema_version\": 999")) == Errc::SchemaError);
  CHECK(parse_error(replace_once(text, "\"kind\": \"karteszi\"", "\"kind\": \"karteszi\", \"extra\": 1")) ==
        Errc::SchemaError);
  CHECK(parse_error("not json") == Errc::SchemaError);
  CHECK(parse_error("{}") == Errc::SchemaError);
}

TEST_CASE("missing file") {
  try {
    read_document("/nonexistent/k.json");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
}

TEST_CASE("exceptional configurations carry their flags") {
  const auto doc = to_document(config::build({12, 4, 5}));
  CHECK_FALSE(doc.flags.extras.empty());
  const auto text = serialize(doc);
  CHECK(text.find("extra_incidences") != std::string::npos);
  CHECK(parse(text) == doc);
}

TEST_CASE("reals keep their bits") {
  auto doc = to_document(config::build({11, 2, 4}));
  doc.points[0].pos = {-0.0, 1e-300};
  doc.lines[0].line = geom::Line::from_coefficients(0.6, 0.8, -0.0);
  const auto back = parse(serialize(doc));
  CHECK(back == doc);
  CHECK(std::signbit(back.points[0].pos.x));
}

TEST_CASE("property: round trip for the n <= 20 corpus") {
  for (const auto& p : analyze::all_params(20)) {
    const auto doc = to_document(config::build(p));
    const auto text = serialize(doc);
    const auto back = parse(text);
    CHECK(back == doc);
    CHECK(serialize(back) == text);
    CHECK(to_document(from_document(back)) == doc);
  }
}

TEST_CASE("incidence documents") {
  const auto s = combin::from_geometry(config::build({7, 2, 3}));
  CHECK(parse_incidence(serialize_incidence(s)) == s);
  CHECK(parse_incidence(serialize(to_document(config::build({7, 2, 3})))) == s);
  const auto custom = parse_incidence(
      R"({"schema_version": 1, "kind": "incidence", "num_points": 3, "num_lines": 3,
          "flags": [[0,0],[1,0],[1,1],[2,1],[2,2],[0,2]]})");
  CHECK(custom.flags.size() == 6);
}

TEST_CASE("svg glyph counts") {
  for (config::KParams p : {config::KParams{7, 2, 3}, config::KParams{13, 3, 5}}) {
    const auto svg = render_svg(config::build(p));
    CHECK(count(svg, "<circle ") == static_cast<std::size_t>(3 * p.n));
    CHECK(count(svg, "<line ") == static_cast<std::size_t>(3 * p.n));
    CHECK(svg.find("orbit-lc") != std::string::npos);
    CHECK(count(svg, "extra-incidence\"") == 0);
  }
}

TEST_CASE("svg highlights overfull lines") {
  const RenderStyle style;
  const auto svg = render_svg(config::build({12, 4, 5}), style);
  CHECK(count(svg, "orbit-lm extra-incidence") == 12);
  CHECK(svg.find(style.highlight_color) != std::string::npos);
}

TEST_CASE("svg is deterministic") {
  TempDir tmp;
  const auto cfg = config::build({13, 3, 5});
  render_svg(cfg, {}, tmp.path / "a.svg");
  render_svg(config::build({13, 3, 5}), {}, tmp.path / "b.svg");
  CHECK(read_text(tmp.path / "a.svg") == read_text(tmp.path / "b.svg"));
}

TEST_CASE("display phase is recorded in metadata only") {
  RenderStyle s;
  s.display_phase_deg = 90.0;
  const auto svg = render_svg(config::build({7, 2, 3}), s);
  CHECK(svg.find("display_phase_deg") != std::string::npos);
  CHECK(svg != render_svg(config::build({7, 2, 3})));
}

TEST_CASE("styles") {
  CHECK(load_style("default").canvas_px == 1000);
  const auto mono = load_style("mono");
  CHECK(mono.orbit_colors.size() == 6);
  TempDir tmp;
  write_text(tmp.path / "s.json", R"({"canvas_px": 400, "orbit_colors": {"Lc": "#000000"}})");
  const auto custom = load_style((tmp.path / "s.json").string());
  CHECK(custom.canvas_px == 400);
  CHECK(custom.orbit_colors.at("Lc") == "#000000");
  RenderStyle bad;
  bad.canvas_px = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = RenderStyle{};
  bad.orbit_colors.erase("Pm");
  CHECK_THROWS_AS(bad.validate(), Error);
}

}  // TEST_SUITE
