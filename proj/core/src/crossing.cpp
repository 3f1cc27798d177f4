#include "confetti/crossing.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace confetti {

namespace {
constexpr double kGridEps = 1e-9;
constexpr int kMaxDoublings = 20;

int grid_cells(double extent, double pitch) {
  return std::max(1, static_cast<int>(std::floor(extent / pitch + kGridEps)));
}
}  // namespace

ColorGrid::ColorGrid(Vec2 origin, double pitch, int ncols, int nrows,
                     Color fill)
    : origin_(origin), pitch_(pitch), ncols_(ncols), nrows_(nrows) {
  if (ncols < 1 || nrows < 1 || !(pitch > 0.0)) {
    throw ConfigError("grid needs positive pitch and at least one cell");
  }
  cells_.assign(static_cast<std::size_t>(ncols) * nrows,
                static_cast<std::uint8_t>(fill));
}

std::size_t ColorGrid::count(Color c) const {
  std::size_t n = 0;
  for (std::uint8_t v : cells_) n += (v == static_cast<std::uint8_t>(c));
  return n;
}

bool has_crossing(const ColorGrid& grid, Direction direction, Color color) {
  const int nc = grid.ncols(), nr = grid.nrows();
  static constexpr int dx8[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  static constexpr int dy8[8] = {0, 0, 1, -1, 1, -1, 1, -1};
  const int degree = color == Color::Black ? 8 : 4;

  std::vector<std::uint8_t> visited(static_cast<std::size_t>(nc) * nr, 0);
  std::vector<int> stack;
  const bool horizontal = direction == Direction::Horizontal;

  const int nsrc = horizontal ? nr : nc;
  for (int t = 0; t < nsrc; ++t) {
    const int i = horizontal ? 0 : t;
    const int j = horizontal ? t : 0;
    if (grid.at(i, j) == color) {
      visited[static_cast<std::size_t>(j) * nc + i] = 1;
      stack.push_back(j * nc + i);
    }
  }
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    const int i = cur % nc, j = cur / nc;
    if (horizontal ? (i == nc - 1) : (j == nr - 1)) return true;
    for (int d = 0; d < degree; ++d) {
      const int ni = i + dx8[d], nj = j + dy8[d];
      if (ni < 0 || ni >= nc || nj < 0 || nj >= nr) continue;
      const std::size_t nidx = static_cast<std::size_t>(nj) * nc + ni;
      if (visited[nidx] || grid.at(ni, nj) != color) continue;
      visited[nidx] = 1;
      stack.push_back(nj * nc + ni);
    }
  }
  return false;
}

CrossingResult crossing_result(const ColorGrid& grid) {
  CrossingResult r;
  r.black_horizontal = has_crossing(grid, Direction::Horizontal, Color::Black);
  r.black_vertical = has_crossing(grid, Direction::Vertical, Color::Black);
  r.white_horizontal = has_crossing(grid, Direction::Horizontal, Color::White);
  r.white_vertical = has_crossing(grid, Direction::Vertical, Color::White);
  assert(pixel_duality_holds(r));
  return r;
}

bool pixel_duality_holds(const CrossingResult& r) {
  return (r.black_horizontal != r.white_vertical) &&
         (r.black_vertical != r.white_horizontal);
}

bool pixel_duality_holds(const ColorGrid& grid) {
  CrossingResult r;
  r.black_horizontal = has_crossing(grid, Direction::Horizontal, Color::Black);
  r.black_vertical = has_crossing(grid, Direction::Vertical, Color::Black);
  r.white_horizontal = has_crossing(grid, Direction::Horizontal, Color::White);
  r.white_vertical = has_crossing(grid, Direction::Vertical, Color::White);
  return pixel_duality_holds(r);
}

MarkGrid::MarkGrid(Vec2 origin, double pitch, int ncols, int nrows)
    : origin_(origin), pitch_(pitch), ncols_(ncols), nrows_(nrows) {
  if (ncols < 1 || nrows < 1 || !(pitch > 0.0)) {
    throw ConfigError("grid needs positive pitch and at least one cell");
  }
  marks_.assign(static_cast<std::size_t>(ncols) * nrows,
                std::numeric_limits<double>::quiet_NaN());
}

MarkGrid rasterize_marks(Configuration& config, const Rect& rect,
                         double pitch) {
  if (!(pitch > 0.0)) throw ConfigError("pitch must be positive");
  if (!config.window().contains(rect, kGridEps)) {
    throw ConfigError("raster rectangle must lie inside the window");
  }
  const int nc = grid_cells(rect.width(), pitch);
  const int nr = grid_cells(rect.height(), pitch);
  MarkGrid grid({rect.x0, rect.y0}, pitch, nc, nr);

  const ConfettiShape& shape = config.shape();
  const double reach = shape.axis_reach() + kCoverTol;
  const double ox = rect.x0, oy = rect.y0;
  std::size_t remaining = grid.marks_.size();
  std::size_t next = 0;
  int doublings = 0;

  // Paint top-down into empty cells only: a cell keeps the mark of the first
  // (= highest; ties resolved by the stored z/id order) covering leaf, which
  // is exactly color_at's answer. Deeper slabs appended by deepening arrive
  // after all shallower leaves, preserving the order.
  while (remaining > 0) {
    const auto& pts = config.points();
    for (; next < pts.size() && remaining > 0; ++next) {
      const ConfettiPoint& pt = pts[next];
      const int i0 = std::max(
          0, static_cast<int>(std::ceil((pt.x - reach - ox) / pitch - 0.5 - kGridEps)));
      const int i1 = std::min(
          nc - 1,
          static_cast<int>(std::floor((pt.x + reach - ox) / pitch - 0.5 + kGridEps)));
      if (i0 > i1) continue;
      const int j0 = std::max(
          0, static_cast<int>(std::ceil((pt.y - reach - oy) / pitch - 0.5 - kGridEps)));
      const int j1 = std::min(
          nr - 1,
          static_cast<int>(std::floor((pt.y + reach - oy) / pitch - 0.5 + kGridEps)));
      for (int j = j0; j <= j1; ++j) {
        const double cy = oy + (j + 0.5) * pitch;
        double* row = grid.marks_.data() + static_cast<std::size_t>(j) * nc;
        for (int i = i0; i <= i1; ++i) {
          if (!std::isnan(row[i])) continue;
          const double cx = ox + (i + 0.5) * pitch;
          if (shape.covers({pt.x, pt.y}, {cx, cy})) {
            row[i] = pt.u;
            --remaining;
          }
        }
      }
    }
    if (remaining == 0) break;
    if (doublings >= kMaxDoublings) {
      throw DeepeningError("raster cells still uncovered after 20 doublings");
    }
    config.extend_one_slab();
    ++doublings;
  }
  return grid;
}

ColorGrid threshold_grid(const MarkGrid& marks, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("threshold p must lie in [0,1]");
  }
  ColorGrid grid(marks.origin(), marks.pitch(), marks.ncols(), marks.nrows());
  for (int j = 0; j < marks.nrows(); ++j) {
    for (int i = 0; i < marks.ncols(); ++i) {
      grid.set(i, j, marks.mark(i, j) < p ? Color::Black : Color::White);
    }
  }
  return grid;
}

ColorGrid rasterize(Configuration& config, double p, const Rect& rect,
                    double pitch) {
  return threshold_grid(rasterize_marks(config, rect, pitch), p);
}

bool annulus_event(Configuration& config, double p, Vec2 q, double r,
                   double pitch) {
  if (!(r > 0.0)) throw ConfigError("annulus scale r must be positive");
  const Rect left{q.x - 1.5 * r, q.y - 1.5 * r, q.x - 0.5 * r, q.y + 1.5 * r};
  const Rect right{q.x + 0.5 * r, q.y - 1.5 * r, q.x + 1.5 * r, q.y + 1.5 * r};
  const Rect top{q.x - 1.5 * r, q.y + 0.5 * r, q.x + 1.5 * r, q.y + 1.5 * r};
  const Rect bottom{q.x - 1.5 * r, q.y - 1.5 * r, q.x + 1.5 * r, q.y - 0.5 * r};
  for (const Rect& rc : {left, right, top, bottom}) {
    if (!config.window().contains(rc, kGridEps)) {
      throw ConfigError("annulus rectangles must lie inside the window");
    }
  }
  return has_crossing(rasterize(config, p, left, pitch), Direction::Vertical,
                      Color::Black) &&
         has_crossing(rasterize(config, p, right, pitch), Direction::Vertical,
                      Color::Black) &&
         has_crossing(rasterize(config, p, top, pitch), Direction::Horizontal,
                      Color::Black) &&
         has_crossing(rasterize(config, p, bottom, pitch),
                      Direction::Horizontal, Color::Black);
}

}  // namespace confetti
