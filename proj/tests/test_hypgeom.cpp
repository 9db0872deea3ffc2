#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "sccat/hypgeom.hpp"

using namespace sccat::hyp;
using Big = boost::multiprecision::cpp_bin_float_50;
using P = DiskPoint<double>;

namespace {
const double kPi = pi<double>();
}

TEST_CASE("r_max against frozen high-precision values") {
  CHECK(r_max(1) == doctest::Approx(0.620671737556385871).epsilon(1e-14));
  CHECK(r_max(2) == doctest::Approx(0.443675233543736284).epsilon(1e-14));
  CHECK(r_max(10) == doctest::Approx(0.200277199371022611).epsilon(1e-14));
  CHECK(r_max(100) == doctest::Approx(0.0634719484178783679).epsilon(1e-13));
  CHECK(r_max(1000) == doctest::Approx(0.0200760238800095908).epsilon(1e-12));
  // two-digit table values
  CHECK(std::abs(r_max(1) - 0.62) < 0.01);
  CHECK(std::abs(r_max(10) - 0.20) < 0.01);
  CHECK(std::abs(r_max(100) - 0.06) < 0.01);
  CHECK(std::abs(r_max(1000) - 0.02) < 0.01);
  CHECK_THROWS(r_max(0));
}

TEST_CASE("double precision tracks 50 digits") {
  for (int n = 1; n <= 400; n += 7) {
    const Big big = r_max<Big>(n);
    CHECK(std::abs(r_max<double>(n) - big.convert_to<double>()) < 1e-12);
    CHECK(r_max<double>(n + 1) < r_max<double>(n));
  }
  for (double r : {0.05, 0.3, 0.9}) {
    for (double phi : {0.1, 1.0, 2.5, 5.0}) {
      const Big b = chord_angle_beta<Big>(Big(r), Big(phi));
      CHECK(std::abs(chord_angle_beta(r, phi) - b.convert_to<double>()) < 1e-14);
    }
  }
}

TEST_CASE("base angle") {
  CHECK(base_angle_theta(0.5, 8) == doctest::Approx(1.13383147271522662).epsilon(1e-14));
  CHECK(base_angle_theta(1e-9, 6) == doctest::Approx(kPi / 3).epsilon(1e-12));
  for (int n = 1; n <= 50; ++n) {
    CHECK(diagonal_base_angle(r_max(n), n) == doctest::Approx(kPi / 3).epsilon(1e-12));
    CHECK(diagonal_base_angle(0.999 * r_max(n), n) > kPi / 3);
    CHECK(diagonal_base_angle(1.001 * r_max(n), n) < kPi / 3);
  }
  CHECK(base_angle_theta(r_max(1), 7) == doctest::Approx(kPi / 3).epsilon(1e-12));
}

TEST_CASE("chord angle beta") {
  CHECK(chord_angle_beta(0.4, 1e-12) == doctest::Approx(kPi / 2));
  CHECK(chord_angle_beta(0.4, 2 * kPi / 9) == base_angle_theta(0.4, 9));
  CHECK(chord_angle_beta(0.3, kPi / 2) == doctest::Approx(0.763235039745613089).epsilon(1e-14));
  const auto sq = embed_polygon(4, 0.3);
  CHECK(angle_at(sq.vertices[0], sq.center, sq.vertices[1]) == doctest::Approx(chord_angle_beta(0.3, kPi / 2)));
  double last = kPi;
  for (double phi = 0.05; phi < 2 * kPi; phi += 0.05) {
    const double b = chord_angle_beta(0.7, phi);
    CHECK(b < last);
    last = b;
  }
}

TEST_CASE("edge length") {
  for (int m : {5, 8, 13}) {
    for (double r : {0.1, 0.4, 1.2}) {
      const auto e = embed_polygon(m, r);
      for (int k = 0; k < m; ++k)
        CHECK(hyperbolic_distance(e.vertices[k], e.vertices[(k + 1) % m]) ==
              doctest::Approx(edge_length_lambda(r, m)).epsilon(1e-10));
      CHECK(hyperbolic_distance(e.center, e.vertices[0]) == doctest::Approx(r).epsilon(1e-12));
    }
  }
  CHECK(edge_length_lambda(1e-6, 7) == doctest::Approx(2e-6 * std::sin(kPi / 7)).epsilon(1e-9));
  CHECK(edge_length_lambda(0.1, 8) < edge_length_lambda(0.2, 8));
  CHECK(edge_length_lambda(0.2, 8) < edge_length_lambda(0.4, 8));
}

TEST_CASE("embedded polygon") {
  const double r = 0.8;
  const auto sq = embed_polygon(4, r);
  CHECK(sq.vertices[0].x() == doctest::Approx(std::tanh(r / 2)));
  CHECK(std::abs(sq.vertices[1].x()) < 1e-15);
  CHECK(sq.vertices[1].y() == doctest::Approx(std::tanh(r / 2)));
  CHECK_THROWS(embed_polygon(2, r));

  for (int m : {7, 12, 19}) {
    const auto e = embed_polygon(m, 0.45);
    for (int k = 0; k < m; ++k) {
      const P& v = e.vertices[k];
      const P& prev = e.vertices[(k + m - 1) % m];
      const P& next = e.vertices[(k + 1) % m];
      CHECK(angle_at(v, prev, next) == doctest::Approx(2 * base_angle_theta(0.45, m)).epsilon(1e-10));
      for (int j = 2; j < m / 2; ++j)
        CHECK(angle_at(v, next, e.vertices[(k + j) % m]) ==
              doctest::Approx(chord_wedge(0.45, m, j)).epsilon(1e-9));
    }
  }
}

TEST_CASE("geodesic crossings") {
  const P o(0, 0);
  auto x = geodesic_cross<double>(P(-0.5, 0), P(0.5, 0), P(0, -0.5), P(0, 0.5));
  CHECK(x.status == CrossStatus::crossing);
  CHECK(x.point.norm() < 1e-15);
  CHECK(x.angle == doctest::Approx(kPi / 2));

  const auto sq = embed_polygon(4, 0.6);
  const auto& v = sq.vertices;
  CHECK(geodesic_cross(v[0], v[2], v[1], v[3]).status == CrossStatus::crossing);
  CHECK(geodesic_cross(v[0], v[1], v[2], v[3]).status == CrossStatus::disjoint);
  CHECK(geodesic_cross(v[0], v[1], v[1], v[2]).status == CrossStatus::shared_endpoint);
  CHECK(chords_interleave(0, 2, 1, 3, 4));
  CHECK_FALSE(chords_interleave(0, 1, 2, 3, 4));
  CHECK(chords_interleave(0, 3, 1, 4, 19));
  CHECK_FALSE(chords_interleave(0, 3, 3, 6, 19));

  // interleaving decides crossing for random chords of random polygons
  std::mt19937_64 rng(31);
  for (int t = 0; t < 2000; ++t) {
    const int n = 4 + static_cast<int>(rng() % 20);
    const auto e = embed_polygon(n, 0.1 + 0.02 * static_cast<double>(rng() % 50));
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    int c = static_cast<int>(rng() % n), d = static_cast<int>(rng() % n);
    if (a == b || c == d) continue;
    auto res = geodesic_cross(e.vertices[a], e.vertices[b], e.vertices[c], e.vertices[d]);
    CHECK((res.status == CrossStatus::crossing) == chords_interleave(a, b, c, d, n));
    if (res.status == CrossStatus::crossing) {
      CHECK(res.angle > 0);
      CHECK(res.angle < kPi);
    }
  }
}

TEST_CASE("angle at the origin is Euclidean") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int t = 0; t < 200; ++t) {
    P q1(u(rng), u(rng)), q2(u(rng), u(rng));
    const double e = std::acos(std::clamp(q1.normalized().dot(q2.normalized()), -1.0, 1.0));
    CHECK(angle_at(P(0, 0), q1, q2) == doctest::Approx(e).epsilon(1e-9));
    CHECK(from_klein(to_klein(q1)).isApprox(q1, 1e-14));
  }
}

TEST_CASE("hyperbolic angles stay above pi/3 below r_max") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const int k = 1 + static_cast<int>(rng() % n);
    const int g = 6 * n + 1 + static_cast<int>(rng() % 30);
    const double r = r_max(n) * (0.01 + 0.98 * static_cast<double>(rng() % 1000) / 1000.0);
    CHECK(chord_angle_beta(r, 2 * kPi * k / g) > kPi / 3);
  }
}

TEST_CASE("euclidean internal angles") {
  auto res = euclidean_min_internal_angle(18);
  CHECK(res.angle == doctest::Approx(13 * kPi / 19).epsilon(1e-12));
  CHECK(res.angle == doctest::Approx(2.14951076298249011).epsilon(1e-12));
  CHECK(res.shared_endpoint);
  CHECK(res.first_length == 3);
  CHECK(res.second_length == 3);
  for (int n = 6; n <= 40; ++n) {
    auto r = euclidean_min_internal_angle(n);
    // inscribed angle over the arc left by two maximal diagonals
    const double expect = kPi - 2 * kPi * (n / 6) / (n + 1);
    CHECK(r.angle == doctest::Approx(expect).epsilon(1e-12));
    CHECK(r.angle > 2 * kPi / 3);
    CHECK(r.min_crossing_angle >= r.angle - 1e-12);
  }
  CHECK_THROWS(euclidean_min_internal_angle(5));
}
