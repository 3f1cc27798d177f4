#include "confetti/image.hpp"

namespace confetti {

std::string ppm_bytes(const ColorGrid& grid, const RunManifest& manifest) {
  std::string out;
  out += "P6\n# " + manifest_line(manifest) + "\n";
  out += std::to_string(grid.ncols()) + " " + std::to_string(grid.nrows()) +
         "\n255\n";
  out.reserve(out.size() +
              static_cast<std::size_t>(grid.ncols()) * grid.nrows() * 3);
  for (int j = grid.nrows() - 1; j >= 0; --j) {
    for (int i = 0; i < grid.ncols(); ++i) {
      const char v = grid.at(i, j) == Color::Black ? '\x00' : '\xff';
      out.append(3, v);
    }
  }
  return out;
}

std::string svg_text(const Configuration& config, double p, const Rect& region,
                     double pixels_per_unit, const RunManifest& manifest) {
  if (!(pixels_per_unit > 0.0))
    throw ConfigError("pixels_per_unit must be positive");
  if (!region.valid() || !(region.area() > 0.0))
    throw ConfigError("render region must have positive area");

  const double w = region.width() * pixels_per_unit;
  const double h = region.height() * pixels_per_unit;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- " + manifest_line(manifest) + " -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         format_double(w) + "\" height=\"" + format_double(h) +
         "\" viewBox=\"0 0 " + format_double(region.width()) + " " +
         format_double(region.height()) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + format_double(region.width()) +
         "\" height=\"" + format_double(region.height()) +
         "\" fill=\"#b0b0b0\"/>\n";
  out += "<clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"" +
         format_double(region.width()) + "\" height=\"" +
         format_double(region.height()) + "\"/></clipPath>\n";
  out += "<g clip-path=\"url(#frame)\" stroke=\"#666666\" stroke-width=\"" +
         format_double(0.5 / pixels_per_unit) + "\">\n";

  const auto& shape = config.shape();
  const double reach = shape.axis_reach();
  const Rect visible = region.expanded(reach);
  // Stored order is top leaf first; SVG paints last-on-top, so walk deepest
  // leaf first.
  const auto& pts = config.points();
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    if (!visible.contains(Vec2{it->x, it->y}, 0.0)) continue;
    const char* fill = it->u < p ? "#000000" : "#ffffff";
    const double cx = it->x - region.x0;
    const double cy = region.y1 - it->y;  // image y axis points down
    if (shape.kind() == ShapeKind::UnitDisk) {
      out += "<circle cx=\"" + format_double(cx) + "\" cy=\"" +
             format_double(cy) + "\" r=\"1\" fill=\"" + fill + "\"/>\n";
    } else {
      const double hw = shape.halfwidth();
      out += "<rect x=\"" + format_double(cx - hw) + "\" y=\"" +
             format_double(cy - hw) + "\" width=\"" + format_double(2 * hw) +
             "\" height=\"" + format_double(2 * hw) + "\" fill=\"" + fill +
             "\"/>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace confetti
