#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "karteszi/config.hpp"

namespace karteszi::io {

struct RenderStyle {
  int canvas_px = 1000;
  double margin_frac = 0.08;
  double point_radius_px = 5.0;
  double line_width_px = 1.2;
  /// Lines are drawn as chords of this disk (in circumradii).
  double line_clip_radius = 1.05;
  /// Display-only rotation, in degrees; recorded in the SVG metadata.
  double display_phase_deg = 0.0;
  bool highlight_extras = true;
  std::string highlight_color = "#e4007c";
  std::string background = "#ffffff";
  /// Keys: P1 Pl Pm Ll Lm Lc.
  std::map<std::string, std::string> orbit_colors = {
      {"P1", "#1f3b73"}, {"Pl", "#2e8b57"}, {"Pm", "#d2691e"},
      {"Ll", "#5b7fc7"}, {"Lm", "#6fbf8f"}, {"Lc", "#e0a060"},
  };

  /// Throws InvalidStyle on non-positive dimensions or a missing orbit color.
  void validate() const;
};

/// "default" or "mono", else a JSON file whose keys mirror RenderStyle's fields
/// (orbit colors under "orbit_colors").
RenderStyle load_style(const std::string& name_or_path);

std::string render_svg(const config::KConfig& config, const RenderStyle& style = {});
void render_svg(const config::KConfig& config, const RenderStyle& style, const std::filesystem::path& path);

}  // namespace karteszi::io
