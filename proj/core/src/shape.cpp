#include "confetti/shape.hpp"

#include <cmath>

#include "confetti/errors.hpp"

namespace confetti {

ConfettiShape ConfettiShape::square(double halfwidth) {
  if (!(halfwidth > 0.0)) {
    throw ConfigError("square halfwidth must be positive");
  }
  return ConfettiShape(ShapeKind::Square, halfwidth);
}

double ConfettiShape::diameter() const {
  if (kind_ == ShapeKind::UnitDisk) return 2.0;
  return 2.0 * halfwidth_ * std::sqrt(2.0);
}

ConfettiShape ConfettiShape::parse(const std::string& text) {
  if (text == "disk") return unit_disk();
  const std::string prefix = "square:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string arg = text.substr(prefix.size());
    try {
      size_t used = 0;
      const double hw = std::stod(arg, &used);
      if (used != arg.size()) throw ConfigError("trailing characters");
      return square(hw);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("bad square halfwidth '" + arg + "'");
    }
  }
  throw ConfigError("unknown shape '" + text + "' (want disk or square:<halfwidth>)");
}

std::string ConfettiShape::describe() const {
  if (kind_ == ShapeKind::UnitDisk) return "disk";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "square:%g", halfwidth_);
  return buf;
}

}  // namespace confetti
