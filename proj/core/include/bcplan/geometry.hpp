#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bcplan {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }

double distance(const Point2& a, const Point2& b);

struct GridCell {
  int x = 0;
  int y = 0;
};

inline bool operator==(const GridCell& a, const GridCell& b) { return a.x == b.x && a.y == b.y; }
inline bool operator<(const GridCell& a, const GridCell& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

/// Immutable rasterized occupancy map. Cell (cx, cy) covers the closed square
/// [origin.x + cx*res, origin.x + (cx+1)*res] x [origin.y + cy*res, origin.y + (cy+1)*res];
/// row 0 is the first row of the source image. All queries are read-only and
/// safe to call concurrently.
class OccupancyGrid {
 public:
  OccupancyGrid(int width, int height, double resolution, std::vector<std::uint8_t> occupied,
                Point2 origin = {0.0, 0.0});

  /// Parses a P2 (ASCII) or P5 (binary) PGM. A cell is occupied iff its gray
  /// value is < 128 (black = obstacle). Throws std::runtime_error on a
  /// malformed header, zero dimensions, or truncated data.
  static OccupancyGrid from_pgm(std::string_view bytes, double resolution,
                                Point2 origin = {0.0, 0.0});
  static OccupancyGrid from_pgm_file(const std::string& path, double resolution,
                                     Point2 origin = {0.0, 0.0});

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  Point2 origin() const { return origin_; }
  double extent_x() const { return width_ * resolution_; }
  double extent_y() const { return height_ * resolution_; }

  bool occupied(int cx, int cy) const { return cells_[std::size_t(cy) * width_ + cx] != 0; }
  bool in_extent(const Point2& p) const;

  /// True iff the closed disk of the given radius around p intersects no
  /// occupied cell. Points outside the grid extent are never free.
  bool point_free(const Point2& p, double radius) const;

  /// True iff point_free holds at samples spaced <= max_spacing along [a, b],
  /// endpoints included. max_spacing <= 0 selects the default resolution/2.
  bool segment_free(const Point2& a, const Point2& b, double radius,
                    double max_spacing = 0.0) const;

  /// Zero-width visibility test: true iff the segment [a, b] touches no
  /// occupied cell (supercover traversal; a segment through a lattice corner
  /// touches all four cells sharing it).
  bool line_of_sight(const Point2& a, const Point2& b) const;

  /// All in-bounds cells whose closed square intersects the closed segment,
  /// sorted and deduplicated. Exposed for diagnostics and tests.
  std::vector<GridCell> supercover_cells(const Point2& a, const Point2& b) const;

 private:
  template <class Visitor>
  bool walk_segment(const Point2& a, const Point2& b, Visitor&& visit) const;

  int width_;
  int height_;
  double resolution_;
  Point2 origin_;
  std::vector<std::uint8_t> cells_;
};

}  // namespace bcplan
