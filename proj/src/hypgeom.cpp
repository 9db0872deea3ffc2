#include "sccat/hypgeom.hpp"

#include <algorithm>
#include <limits>

namespace sccat::hyp {

namespace {

using Vec = Eigen::Vector2d;

/// Angle of the sector at p between the lines along u1 and u2 that contains
/// the direction c, or nullopt when c lies in no sector bounded by the given
/// rays (only possible when `rays_only`).
std::optional<double> facing_sector(const Vec& u1, const Vec& u2, const Vec& c, bool rays_only) {
  Eigen::Matrix2d m;
  m << u1, u2;
  const Vec xy = m.inverse() * c;
  if (rays_only && (xy(0) <= 0 || xy(1) <= 0)) return std::nullopt;
  const Vec s1 = (xy(0) >= 0 ? 1.0 : -1.0) * u1;
  const Vec s2 = (xy(1) >= 0 ? 1.0 : -1.0) * u2;
  return std::acos(std::clamp(s1.normalized().dot(s2.normalized()), -1.0, 1.0));
}

}  // namespace

InternalAngleResult euclidean_min_internal_angle(int n) {
  if (n < 6) throw std::invalid_argument("euclidean_min_internal_angle: n must be >= 6");
  const int vertices = n + 1;
  const int max_len = n / 6;
  std::vector<Vec> pts;
  for (int k = 0; k < vertices; ++k) {
    const double a = 2 * pi<double>() * k / vertices;
    pts.emplace_back(std::cos(a), std::sin(a));
  }
  struct Chord {
    int a, b, len;
  };
  std::vector<Chord> chords;
  for (int i = 0; i < vertices; ++i)
    for (int len = 1; len <= max_len; ++len) chords.push_back({i, (i + len) % vertices, len});

  InternalAngleResult best;
  best.angle = std::numeric_limits<double>::infinity();
  best.min_crossing_angle = std::numeric_limits<double>::infinity();
  constexpr double tie = 1e-12;

  for (std::size_t x = 0; x < chords.size(); ++x) {
    for (std::size_t y = x + 1; y < chords.size(); ++y) {
      const Chord& c1 = chords[x];
      const Chord& c2 = chords[y];
      std::optional<double> angle;
      bool shared = false;
      if (chords_interleave(c1.a, c1.b, c2.a, c2.b, vertices)) {
        const Vec u1 = pts[c1.b] - pts[c1.a], u2 = pts[c2.b] - pts[c2.a];
        Eigen::Matrix2d m;
        m << u1, -u2;
        const Vec st = m.inverse() * (pts[c2.a] - pts[c1.a]);
        const Vec p = pts[c1.a] + st(0) * u1;
        angle = facing_sector(u1, u2, -p, false);
        best.min_crossing_angle = std::min(best.min_crossing_angle, *angle);
      } else {
        int common = -1, o1 = -1, o2 = -1;
        if (c1.a == c2.a) common = c1.a, o1 = c1.b, o2 = c2.b;
        else if (c1.a == c2.b) common = c1.a, o1 = c1.b, o2 = c2.a;
        else if (c1.b == c2.a) common = c1.b, o1 = c1.a, o2 = c2.b;
        else if (c1.b == c2.b) common = c1.b, o1 = c1.a, o2 = c2.a;
        if (common < 0) continue;
        angle = facing_sector(pts[o1] - pts[common], pts[o2] - pts[common], -pts[common], true);
        shared = true;
      }
      if (!angle) continue;
      ++best.pairs_examined;
      const bool better = *angle < best.angle - tie ||
                          (*angle <= best.angle + tie && shared && !best.shared_endpoint);
      if (better) {
        best.angle = *angle;
        best.first_start = c1.a;
        best.first_end = c1.b;
        best.second_start = c2.a;
        best.second_end = c2.b;
        best.first_length = c1.len;
        best.second_length = c2.len;
        best.shared_endpoint = shared;
      }
    }
  }
  return best;
}

}  // namespace sccat::hyp
