#include "bcplan/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bcplan {

double distance(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             std::vector<std::uint8_t> occupied, Point2 origin)
    : width_(width), height_(height), resolution_(resolution), origin_(origin),
      cells_(std::move(occupied)) {
  if (width_ <= 0 || height_ <= 0) throw std::invalid_argument("grid dimensions must be positive");
  if (!(resolution_ > 0.0)) throw std::invalid_argument("grid resolution must be positive");
  if (cells_.size() != std::size_t(width_) * std::size_t(height_))
    throw std::invalid_argument("occupancy array size does not match grid dimensions");
}

namespace {

class PgmReader {
 public:
  explicit PgmReader(std::string_view data) : data_(data) {}

  void skip_separators() {
    while (pos_ < data_.size()) {
      const char c = data_[pos_];
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_uint(const char* what) {
    skip_separators();
    if (pos_ >= data_.size() || !std::isdigit(static_cast<unsigned char>(data_[pos_])))
      throw std::runtime_error(std::string("pgm: expected ") + what);
    std::uint64_t v = 0;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      v = v * 10 + std::uint64_t(data_[pos_] - '0');
      if (v > 0xffffffffull) throw std::runtime_error(std::string("pgm: ") + what + " out of range");
      ++pos_;
    }
    return v;
  }

  // P5 requires exactly one separator byte between the header and raster.
  void consume_single_separator() {
    if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_])))
      throw std::runtime_error("pgm: missing separator before binary raster");
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }
  unsigned char byte_at(std::size_t i) const { return static_cast<unsigned char>(data_[i]); }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace

OccupancyGrid OccupancyGrid::from_pgm(std::string_view bytes, double resolution, Point2 origin) {
  if (bytes.size() < 2) throw std::runtime_error("pgm: truncated header");
  const bool ascii = bytes[0] == 'P' && bytes[1] == '2';
  const bool binary = bytes[0] == 'P' && bytes[1] == '5';
  if (!ascii && !binary) throw std::runtime_error("pgm: not a P2/P5 file");

  PgmReader reader(bytes.substr(2));
  const std::uint64_t width = reader.read_uint("width");
  const std::uint64_t height = reader.read_uint("height");
  const std::uint64_t maxval = reader.read_uint("maxval");
  if (width == 0 || height == 0) throw std::runtime_error("pgm: zero image dimensions");
  if (maxval == 0 || maxval > 65535) throw std::runtime_error("pgm: invalid maxval");
  if (width * height > 64ull * 1024 * 1024) throw std::runtime_error("pgm: image too large");

  const std::size_t count = std::size_t(width * height);
  std::vector<std::uint8_t> occ(count);

  if (ascii) {
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t v = reader.read_uint("pixel value");
      if (v > maxval) throw std::runtime_error("pgm: pixel value exceeds maxval");
      occ[i] = v < 128 ? 1 : 0;
    }
  } else {
    reader.consume_single_separator();
    const std::size_t bytes_per = maxval > 255 ? 2 : 1;
    if (reader.remaining() < count * bytes_per) throw std::runtime_error("pgm: truncated raster data");
    const std::size_t base = 2 + reader.pos();
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t v = bytes[base + i * bytes_per] & 0xffu;
      if (bytes_per == 2) v = (v << 8) | (bytes[base + i * bytes_per + 1] & 0xffu);
      occ[i] = v < 128 ? 1 : 0;
    }
  }
  return OccupancyGrid(int(width), int(height), resolution, std::move(occ), origin);
}

OccupancyGrid OccupancyGrid::from_pgm_file(const std::string& path, double resolution,
                                           Point2 origin) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pgm: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_pgm(buf.str(), resolution, origin);
}

bool OccupancyGrid::in_extent(const Point2& p) const {
  return p.x >= origin_.x && p.x <= origin_.x + extent_x() &&
         p.y >= origin_.y && p.y <= origin_.y + extent_y();
}

bool OccupancyGrid::point_free(const Point2& p, double radius) const {
  if (!(radius >= 0.0)) throw std::invalid_argument("point_free: radius must be >= 0");
  if (!in_extent(p)) return false;

  const double gx = (p.x - origin_.x) / resolution_;
  const double gy = (p.y - origin_.y) / resolution_;
  const double gr = radius / resolution_;

  const auto clamp_cell = [](double v, int hi) {
    if (v < 0.0) return 0;
    if (v > double(hi)) return hi;
    return int(v);
  };
  const int x0 = clamp_cell(std::floor(gx - gr), width_ - 1);
  const int x1 = clamp_cell(std::floor(gx + gr), width_ - 1);
  const int y0 = clamp_cell(std::floor(gy - gr), height_ - 1);
  const int y1 = clamp_cell(std::floor(gy + gr), height_ - 1);

  const double r2 = gr * gr;
  for (int cy = y0; cy <= y1; ++cy) {
    for (int cx = x0; cx <= x1; ++cx) {
      if (!occupied(cx, cy)) continue;
      const double qx = std::clamp(gx, double(cx), double(cx + 1));
      const double qy = std::clamp(gy, double(cy), double(cy + 1));
      const double dx = gx - qx;
      const double dy = gy - qy;
      if (dx * dx + dy * dy <= r2) return false;
    }
  }
  return true;
}

bool OccupancyGrid::segment_free(const Point2& a, const Point2& b, double radius,
                                 double max_spacing) const {
  const double spacing = max_spacing > 0.0 ? max_spacing : resolution_ * 0.5;
  const double len = distance(a, b);
  const long long steps = len > 0.0 ? (long long)std::ceil(len / spacing) : 0;
  for (long long k = 0; k <= steps; ++k) {
    Point2 p = b;
    if (k < steps) {
      const double t = double(k) / double(steps > 0 ? steps : 1);
      p = {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
    }
    if (!point_free(p, radius)) return false;
  }
  return true;
}

template <class Visitor>
bool OccupancyGrid::walk_segment(const Point2& a, const Point2& b, Visitor&& visit) const {
  const double ax = (a.x - origin_.x) / resolution_;
  const double ay = (a.y - origin_.y) / resolution_;
  const double bx = (b.x - origin_.x) / resolution_;
  const double by = (b.y - origin_.y) / resolution_;

  const auto emit = [&](long long cx, long long cy) -> bool {
    if (cx < 0 || cy < 0 || cx >= width_ || cy >= height_) return true;
    return visit(int(cx), int(cy));
  };
  // Cells whose closed square contains the point: up to 4 when it sits on a
  // lattice line or corner.
  const auto emit_point_cells = [&](double x, double y) -> bool {
    const long long cx = (long long)std::floor(x);
    const long long cy = (long long)std::floor(y);
    const bool bx_edge = x == std::floor(x);
    const bool by_edge = y == std::floor(y);
    for (int dx = bx_edge ? -1 : 0; dx <= 0; ++dx)
      for (int dy = by_edge ? -1 : 0; dy <= 0; ++dy)
        if (!emit(cx + dx, cy + dy)) return false;
    return true;
  };

  if (!emit_point_cells(ax, ay)) return false;
  if (!emit_point_cells(bx, by)) return false;
  if (ax == bx && ay == by) return true;

  const double dx = bx - ax;
  const double dy = by - ay;

  // A segment lying exactly on a lattice line touches both adjacent rows or
  // columns along its whole length.
  if (dx == 0.0 && ax == std::floor(ax)) {
    const long long c = (long long)ax;
    const long long r0 = (long long)std::floor(std::min(ay, by));
    const long long r1 = (long long)std::floor(std::max(ay, by));
    for (long long r = r0; r <= r1; ++r)
      if (!emit(c - 1, r) || !emit(c, r)) return false;
    return true;
  }
  if (dy == 0.0 && ay == std::floor(ay)) {
    const long long r = (long long)ay;
    const long long c0 = (long long)std::floor(std::min(ax, bx));
    const long long c1 = (long long)std::floor(std::max(ax, bx));
    for (long long c = c0; c <= c1; ++c)
      if (!emit(c, r - 1) || !emit(c, r)) return false;
    return true;
  }

  // Clip against a one-cell-inflated grid box so far-away endpoints do not
  // produce long out-of-bounds walks. For in-extent endpoints this is the
  // identity window [0, 1].
  double t0 = 0.0, t1 = 1.0;
  {
    const double xmin = -1.0, xmax = double(width_) + 1.0;
    const double ymin = -1.0, ymax = double(height_) + 1.0;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {ax - xmin, xmax - ax, ay - ymin, ymax - ay};
    for (int i = 0; i < 4; ++i) {
      if (p[i] == 0.0) {
        if (q[i] < 0.0) return true;
      } else {
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
          if (r > t0) t0 = r;
        } else {
          if (r < t1) t1 = r;
        }
      }
    }
    if (t0 > t1) return true;
  }

  const double px = t0 == 0.0 ? ax : ax + t0 * dx;
  const double py = t0 == 0.0 ? ay : ay + t0 * dy;
  long long cx = (long long)std::floor(px);
  long long cy = (long long)std::floor(py);
  if (px == std::floor(px) && dx < 0.0) cx -= 1;
  if (py == std::floor(py) && dy < 0.0) cy -= 1;
  if (!emit(cx, cy)) return false;

  const int sx = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
  const int sy = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);
  const double inf = std::numeric_limits<double>::infinity();
  const auto next_tx = [&]() { return sx == 0 ? inf : (double(cx + (sx > 0 ? 1 : 0)) - ax) / dx; };
  const auto next_ty = [&]() { return sy == 0 ? inf : (double(cy + (sy > 0 ? 1 : 0)) - ay) / dy; };

  const long long max_steps = 2ll * (width_ + height_) + 16;
  for (long long step = 0; step < max_steps; ++step) {
    const double tx = next_tx();
    const double ty = next_ty();
    const double t = std::min(tx, ty);
    if (!(t < t1) || !(t < 1.0)) break;
    if (tx < ty) {
      cx += sx;
      if (!emit(cx, cy)) return false;
    } else if (ty < tx) {
      cy += sy;
      if (!emit(cx, cy)) return false;
    } else {
      // Exact corner crossing: the segment touches all four cells around it.
      if (!emit(cx + sx, cy)) return false;
      if (!emit(cx, cy + sy)) return false;
      cx += sx;
      cy += sy;
      if (!emit(cx, cy)) return false;
    }
  }
  return true;
}

bool OccupancyGrid::line_of_sight(const Point2& a, const Point2& b) const {
  return walk_segment(a, b, [&](int cx, int cy) { return !occupied(cx, cy); });
}

std::vector<GridCell> OccupancyGrid::supercover_cells(const Point2& a, const Point2& b) const {
  std::vector<GridCell> out;
  walk_segment(a, b, [&](int cx, int cy) {
    out.push_back({cx, cy});
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bcplan
