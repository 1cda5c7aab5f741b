#include "karteszi/render.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "karteszi/document.hpp"
#include "karteszi/error.hpp"

namespace karteszi::io {

namespace {

constexpr const char* kOrbitKeys[] = {"P1", "Pl", "Pm", "Ll", "Lm", "Lc"};

std::string css_class(std::string_view tag) {
  std::string out = "orbit-";
  for (char ch : tag) out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

bool plain_color(const std::string& c) {
  return !c.empty() && c.find_first_of("<>{};\"'&") == std::string::npos;
}

}  // namespace

void RenderStyle::validate() const {
  if (canvas_px <= 0) throw Error(Errc::InvalidStyle, "canvas_px must be positive");
  if (!(margin_frac >= 0.0 && margin_frac < 0.5)) throw Error(Errc::InvalidStyle, "margin_frac must be in [0, 0.5)");
  if (!(point_radius_px > 0.0)) throw Error(Errc::InvalidStyle, "point_radius_px must be positive");
  if (!(line_width_px > 0.0)) throw Error(Errc::InvalidStyle, "line_width_px must be positive");
  if (!(line_clip_radius > 0.0)) throw Error(Errc::InvalidStyle, "line_clip_radius must be positive");
  if (!std::isfinite(display_phase_deg)) throw Error(Errc::InvalidStyle, "display_phase_deg must be finite");
  for (const char* key : kOrbitKeys) {
    auto it = orbit_colors.find(key);
    if (it == orbit_colors.end()) throw Error(Errc::InvalidStyle, std::string("no color for orbit ") + key);
    if (!plain_color(it->second)) throw Error(Errc::InvalidStyle, "bad color '" + it->second + "'");
  }
  if (!plain_color(highlight_color) || !plain_color(background)) throw Error(Errc::InvalidStyle, "bad color");
}

RenderStyle load_style(const std::string& name_or_path) {
  RenderStyle style;
  if (name_or_path.empty() || name_or_path == "default") return style;
  if (name_or_path == "mono") {
    for (auto& [key, color] : style.orbit_colors) color = key[0] == 'P' ? "#000000" : "#808080";
    style.highlight_color = "#000000";
    return style;
  }
  using nlohmann::json;
  json j;
  try {
    j = json::parse(read_text(name_or_path));
    for (const auto& [key, value] : j.items()) {
      if (key == "canvas_px") style.canvas_px = value.get<int>();
      else if (key == "margin_frac") style.margin_frac = value.get<double>();
      else if (key == "point_radius_px") style.point_radius_px = value.get<double>();
      else if (key == "line_width_px") style.line_width_px = value.get<double>();
      else if (key == "line_clip_radius") style.line_clip_radius = value.get<double>();
      else if (key == "display_phase_deg") style.display_phase_deg = value.get<double>();
      else if (key == "highlight_extras") style.highlight_extras = value.get<bool>();
      else if (key == "highlight_color") style.highlight_color = value.get<std::string>();
      else if (key == "background") style.background = value.get<std::string>();
      else if (key == "orbit_colors") {
        for (const auto& [orbit, color] : value.items()) style.orbit_colors[orbit] = color.get<std::string>();
      } else {
        throw Error(Errc::InvalidStyle, "unknown style key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidStyle, e.what());
  }
  style.validate();
  return style;
}

std::string render_svg(const config::KConfig& config, const RenderStyle& style) {
  style.validate();
  for (const auto& l : config.lines) {
    if (std::abs(l.line.c()) >= style.line_clip_radius) {
      throw Error(Errc::InvalidStyle, "line " + std::to_string(l.id) + " misses the clip disk");
    }
  }

  const double half = 0.5 * style.canvas_px;
  const double scale = half * (1.0 - 2.0 * style.margin_frac) / style.line_clip_radius;
  const double phase = style.display_phase_deg * std::numbers::pi / 180.0;
  const double cs = std::cos(phase), sn = std::sin(phase);
  auto screen = [&](geom::Point p) {
    const double x = cs * p.x - sn * p.y;
    const double y = sn * p.x + cs * p.y;
    return geom::Point{half + scale * x, half - scale * y};
  };

  std::set<int> hot_lines, hot_points;
  if (style.highlight_extras) {
    const auto deg = config.line_degrees();
    for (std::size_t i = 0; i < deg.size(); ++i) {
      if (deg[i] > 4) hot_lines.insert(static_cast<int>(i));
    }
    for (const auto& [p, l] : config.flags.extras) {
      hot_points.insert(p);
      hot_lines.insert(l);
    }
  }

  const auto& p = config.params;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.canvas_px << "\" height=\""
     << style.canvas_px << "\" viewBox=\"0 0 " << style.canvas_px << ' ' << style.canvas_px << "\">\n";
  os << "<title>K(" << p.n << ';' << p.l << ',' << p.m << ")</title>\n";
  os << "<metadata>n=" << p.n << " l=" << p.l << " m=" << p.m
     << " verdict=" << config::verdict_name(config.flags.verdict)
     << " display_phase_deg=" << fixed(style.display_phase_deg) << "</metadata>\n";
  os << "<style>\n";
  for (const char* key : kOrbitKeys) {
    const auto& color = style.orbit_colors.at(key);
    if (key[0] == 'P') {
      os << '.' << css_class(key) << " { fill: " << color << "; stroke: none; }\n";
    } else {
      os << '.' << css_class(key) << " { stroke: " << color << "; stroke-width: " << fixed(style.line_width_px)
         << "; fill: none; }\n";
    }
  }
  os << "line.extra-incidence { stroke: " << style.highlight_color << "; stroke-width: "
     << fixed(2.0 * style.line_width_px) << "; }\n";
  os << "circle.extra-incidence { fill: " << style.highlight_color << "; }\n";
  os << "</style>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << style.canvas_px << "\" height=\"" << style.canvas_px << "\" fill=\""
     << style.background << "\"/>\n";

  os << "<g id=\"lines\">\n";
  const double r = style.line_clip_radius;
  for (const auto& l : config.lines) {
    const double a = l.line.a(), b = l.line.b(), c = l.line.c();
    const geom::Point foot{-a * c, -b * c};
    const double h = std::sqrt(r * r - c * c);
    const geom::Point e1 = screen(foot + h * geom::Point{-b, a});
    const geom::Point e2 = screen(foot - h * geom::Point{-b, a});
    os << "<line id=\"line-" << l.id << "\" class=\"" << css_class(config::orbit_tag(l.orbit))
       << (hot_lines.count(l.id) ? " extra-incidence" : "") << "\" x1=\"" << fixed(e1.x) << "\" y1=\""
       << fixed(e1.y) << "\" x2=\"" << fixed(e2.x) << "\" y2=\"" << fixed(e2.y) << "\"/>\n";
  }
  os << "</g>\n<g id=\"points\">\n";
  for (const auto& pt : config.points) {
    const geom::Point s = screen(pt.pos);
    os << "<circle id=\"point-" << pt.id << "\" class=\"" << css_class(config::orbit_tag(pt.orbit))
       << (hot_points.count(pt.id) ? " extra-incidence" : "") << "\" cx=\"" << fixed(s.x) << "\" cy=\""
       << fixed(s.y) << "\" r=\"" << fixed(style.point_radius_px) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void render_svg(const config::KConfig& config, const RenderStyle& style, const std::filesystem::path& path) {
  write_text(path, render_svg(config, style));
}

}  // namespace karteszi::io
