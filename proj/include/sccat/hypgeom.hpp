#pragma once

// Regular and singular hyperbolic polygons in the conformal unit-disk model.
// Closed forms are the source of truth for corner and chord angles; the
// embedding routines exist to cross-check them and to locate crossings.

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace sccat::hyp {

template <typename Scalar>
using DiskPoint = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
constexpr Scalar pi() {
  return Scalar(3.141592653589793238462643383279502884L);
}

template <typename Scalar>
std::complex<Scalar> to_complex(const DiskPoint<Scalar>& p) {
  return {p.x(), p.y()};
}

template <typename Scalar>
DiskPoint<Scalar> from_complex(const std::complex<Scalar>& z) {
  return DiskPoint<Scalar>(z.real(), z.imag());
}

/// cosh⁻¹((1/√3)·cot(nπ/(6n+1))): the largest radius for which length-n
/// diagonals of the regular (6n+1)-gon still meet at more than 2π/3.
template <typename Scalar = double>
Scalar r_max(int n) {
  if (n < 1) throw std::invalid_argument("r_max: n must be >= 1");
  using std::acosh, std::sqrt, std::tan;
  const Scalar alpha = Scalar(n) * pi<Scalar>() / Scalar(6 * n + 1);
  const Scalar arg = Scalar(1) / (sqrt(Scalar(3)) * tan(alpha));
  if (!(arg > Scalar(1))) throw std::logic_error("r_max: acosh argument not above 1");
  return acosh(arg);
}

/// Angle at a boundary vertex between the radius and the chord to the vertex
/// at central angle `phi` (measured on one side): cot β = cosh(r)·tan(φ/2).
/// Strictly decreasing on (0, 2π), from π/2 to −π/2.
template <typename Scalar>
Scalar chord_angle_beta(Scalar r, Scalar phi) {
  using std::atan2, std::cos, std::cosh, std::sin;
  return atan2(cos(phi / 2), cosh(r) * sin(phi / 2));
}

/// Base angle of T(m, r), half the corner angle of the regular m-gon of radius r.
template <typename Scalar>
Scalar base_angle_theta(Scalar r, int m) {
  return chord_angle_beta(r, 2 * pi<Scalar>() / Scalar(m));
}

/// The angle θ of the radius-bound argument: base angle of the isosceles
/// triangle over a length-n diagonal of the (6n+1)-gon. Equals π/3 at r_max(n).
template <typename Scalar>
Scalar diagonal_base_angle(Scalar r, int n) {
  return chord_angle_beta(r, 2 * pi<Scalar>() * Scalar(n) / Scalar(6 * n + 1));
}

/// Length of the chord joining boundary vertices k steps apart in a regular
/// g-gon of radius r.
template <typename Scalar>
Scalar diagonal_length(Scalar r, int g, int k) {
  using std::asinh, std::sin, std::sinh;
  return 2 * asinh(sinh(r) * sin(pi<Scalar>() * Scalar(k) / Scalar(g)));
}

template <typename Scalar>
Scalar edge_length_lambda(Scalar r, int m) {
  return diagonal_length(r, m, 1);
}

/// Angle between the boundary edge and the chord k steps away, at their
/// common vertex, in a regular g-gon of radius r.
template <typename Scalar>
Scalar chord_wedge(Scalar r, int g, int k) {
  const Scalar step = 2 * pi<Scalar>() / Scalar(g);
  return chord_angle_beta(r, step) - chord_angle_beta(r, step * Scalar(k));
}

template <typename Scalar>
Scalar hyperbolic_distance(const DiskPoint<Scalar>& p, const DiskPoint<Scalar>& q) {
  using std::abs, std::atanh;
  const auto a = to_complex(p), b = to_complex(q);
  return 2 * atanh(abs(a - b) / abs(Scalar(1) - std::conj(a) * b));
}

/// Möbius isometry moving p to the origin. It fixes tangent directions at p.
template <typename Scalar>
std::complex<Scalar> move_to_origin(const std::complex<Scalar>& p, const std::complex<Scalar>& z) {
  return (z - p) / (Scalar(1) - std::conj(p) * z);
}

/// Direction (argument of the initial tangent) of the geodesic from p to q.
template <typename Scalar>
Scalar direction(const DiskPoint<Scalar>& p, const DiskPoint<Scalar>& q) {
  return std::arg(move_to_origin(to_complex(p), to_complex(q)));
}

/// Hyperbolic angle at p between the geodesics towards q1 and q2, in [0, π].
template <typename Scalar>
Scalar angle_at(const DiskPoint<Scalar>& p, const DiskPoint<Scalar>& q1, const DiskPoint<Scalar>& q2) {
  using std::abs, std::arg;
  const auto a = move_to_origin(to_complex(p), to_complex(q1));
  const auto b = move_to_origin(to_complex(p), to_complex(q2));
  return abs(arg(b / a));
}

/// Poincaré ↔ Klein; geodesics are straight chords in Klein coordinates.
template <typename Scalar>
DiskPoint<Scalar> to_klein(const DiskPoint<Scalar>& p) {
  return (2 / (1 + p.squaredNorm())) * p;
}

template <typename Scalar>
DiskPoint<Scalar> from_klein(const DiskPoint<Scalar>& k) {
  using std::sqrt;
  return k / (1 + sqrt(1 - k.squaredNorm()));
}

template <typename Scalar>
struct PolygonEmbedding {
  int n = 0;
  Scalar r = 0;
  std::vector<DiskPoint<Scalar>> vertices;
  DiskPoint<Scalar> center = DiskPoint<Scalar>::Zero();
};

/// Regular n-gon of radius r centred at the origin, vertex k at angle 2πk/n.
template <typename Scalar>
PolygonEmbedding<Scalar> embed_polygon(int n, Scalar r) {
  using std::cos, std::sin, std::tanh;
  if (n < 3) throw std::invalid_argument("embed_polygon: n must be >= 3");
  PolygonEmbedding<Scalar> e;
  e.n = n;
  e.r = r;
  const Scalar rho = tanh(r / 2);
  for (int k = 0; k < n; ++k) {
    const Scalar a = 2 * pi<Scalar>() * Scalar(k) / Scalar(n);
    e.vertices.emplace_back(rho * cos(a), rho * sin(a));
  }
  return e;
}

enum class CrossStatus { crossing, disjoint, shared_endpoint };

template <typename Scalar>
struct CrossResult {
  CrossStatus status = CrossStatus::disjoint;
  DiskPoint<Scalar> point = DiskPoint<Scalar>::Zero();
  Scalar angle = 0;  // angle at the crossing between the rays towards b1 and b2
};

/// Interior intersection of the geodesic segments a1–b1 and a2–b2.
template <typename Scalar>
CrossResult<Scalar> geodesic_cross(const DiskPoint<Scalar>& a1, const DiskPoint<Scalar>& b1,
                                   const DiskPoint<Scalar>& a2, const DiskPoint<Scalar>& b2,
                                   Scalar eps = Scalar(1e-12)) {
  CrossResult<Scalar> out;
  auto same = [&](const DiskPoint<Scalar>& x, const DiskPoint<Scalar>& y) { return (x - y).norm() <= eps; };
  if (same(a1, a2) || same(a1, b2) || same(b1, a2) || same(b1, b2)) {
    out.status = CrossStatus::shared_endpoint;
    return out;
  }
  const DiskPoint<Scalar> p = to_klein(a1), q = to_klein(b1), u = to_klein(a2), v = to_klein(b2);
  const DiskPoint<Scalar> d1 = q - p, d2 = v - u;
  Eigen::Matrix<Scalar, 2, 2> m;
  m << d1, -d2;
  const Scalar det = m.determinant();
  if (std::abs(det) <= eps * d1.norm() * d2.norm()) return out;  // parallel chords
  const Eigen::Matrix<Scalar, 2, 1> st = m.inverse() * (u - p);
  if (st(0) <= eps || st(0) >= 1 - eps || st(1) <= eps || st(1) >= 1 - eps) return out;
  out.status = CrossStatus::crossing;
  out.point = from_klein<Scalar>(p + st(0) * d1);
  out.angle = angle_at(out.point, b1, b2);
  return out;
}

/// Strict interleaving of chord endpoints around an n-cycle: the chords
/// (i1, j1) and (i2, j2) cross in the polygon interior.
inline bool chords_interleave(int i1, int j1, int i2, int j2, int n) {
  auto inside = [n](int lo, int hi, int x) {  // x strictly inside the ccw arc lo -> hi
    const int span = ((hi - lo) % n + n) % n;
    const int off = ((x - lo) % n + n) % n;
    return off > 0 && off < span;
  };
  if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2) return false;
  return inside(i1, j1, i2) != inside(i1, j1, j2);
}

/// Minimal internal angle between diagonals of length ≤ ⌊n/6⌋ in the regular
/// Euclidean (n+1)-gon, over crossing pairs and pairs sharing an endpoint
/// from opposite sides. The internal angle is the one facing the centre.
struct InternalAngleResult {
  double angle = 0;
  int first_start = 0, first_end = 0, second_start = 0, second_end = 0;
  int first_length = 0, second_length = 0;
  bool shared_endpoint = false;
  double min_crossing_angle = 0;  // best over strictly crossing pairs only
  std::size_t pairs_examined = 0;
};

InternalAngleResult euclidean_min_internal_angle(int n);

}  // namespace sccat::hyp
