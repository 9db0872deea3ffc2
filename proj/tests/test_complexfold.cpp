#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "sccat/complexfold.hpp"

using namespace sccat;

namespace {

struct Built {
  Presentation p;
  SmallCancellationReport rep;
  MetricParams mp;
  std::vector<Disc> discs;
  std::vector<Piece> pieces;
  FoldSchedule fs;
};

Built build(const Presentation& p) {
  Built b{p, check_conditions(p), {}, {}, {}, {}};
  b.mp = choose_radius(b.rep);
  b.discs = build_discs(p, b.mp);
  b.pieces = enumerate_pieces(p);
  b.fs = segments_from_pieces(b.discs, b.pieces);
  return b;
}

}  // namespace

TEST_CASE("radius for the genus-2 group") {
  auto b = build(load_presentation(SCCAT_DATA "/genus2.txt"));
  CHECK(b.mp.g == 8);
  CHECK(b.mp.n_eff == 1);
  CHECK(b.mp.r == doctest::Approx(0.558604563800747284).epsilon(1e-14));
  CHECK(std::abs(b.mp.r - 0.56) < 0.005);
  CHECK(b.mp.theta == hyp::base_angle_theta(b.mp.r, 8));
  CHECK(b.mp.theta > hyp::pi<double>() / 3);
  REQUIRE(b.discs.size() == 1);
  CHECK(b.discs[0].boundary_length == 8);
  CHECK(b.discs[0].corner_angle == doctest::Approx(2 * hyp::base_angle_theta(b.mp.r, 8)));
  CHECK(b.discs[0].center_link_length == doctest::Approx(2 * hyp::pi<double>()));
}

TEST_CASE("radius choice") {
  auto b = build(load_presentation(SCCAT_DATA "/shared_pair.txt"));
  CHECK(b.mp.g == 13);
  CHECK(b.mp.n_eff == 2);
  CHECK(b.mp.r == doctest::Approx(0.9 * hyp::r_max(2)));
  auto bad = check_conditions(load_presentation(SCCAT_DATA "/commutator.txt"));
  CHECK_THROWS_AS(choose_radius(bad), std::invalid_argument);
  CHECK_THROWS_AS(choose_radius(b.rep, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(choose_radius(b.rep, 0.0), std::invalid_argument);
  CHECK(choose_radius(b.rep, 0.99).r > b.mp.r);
}

TEST_CASE("discs") {
  auto p = parse_presentation(
      "generators: a b c d e f g h i j k l m n o\n"
      "relator: a b c d e f g\n"
      "relator: h i j k l m n o h- i- j- k- l- o-");
  auto b = build(p);
  CHECK(b.discs[0].center_link_length == doctest::Approx(2 * hyp::pi<double>()));
  CHECK(b.discs[1].center_link_length == doctest::Approx(4 * hyp::pi<double>()));
  for (const auto& d : b.discs) CHECK(d.chart.n == 7);
}

TEST_CASE("folds follow maximal pairs") {
  auto g2 = build(load_presentation(SCCAT_DATA "/genus2.txt"));
  CHECK(g2.fs.folds.size() == 4);
  for (const Fold& f : g2.fs.folds) {
    CHECK(f.first.length == 1);
    CHECK(f.second.length == 1);
    CHECK(f.reversed);
  }
  CHECK(check_fold_maximality(g2.fs, g2.discs).pass);

  auto sp = build(load_presentation(SCCAT_DATA "/shared_pair.txt"));
  REQUIRE(sp.fs.folds.size() == 1);
  const Fold& f = sp.fs.folds[0];
  CHECK(f.first.length == 2);
  CHECK_FALSE(f.reversed);
  CHECK(f.first.disc != f.second.disc);

  // a piece seen three times gives three pairwise folds and one class
  auto tri = build(parse_presentation(
      "generators: a b c d e f g h i j k l m n o p q r s t u v w x y z\n"
      "relator: a b c d e f g h i j k l m\n"
      "relator: a b n o p q r s t u v w x\n"
      "relator: a b y z c- d- e- f- g- h- i- j- k-"));
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < tri.fs.folds.size(); ++i)
    if (tri.fs.folds[i].first.length == 2) order.push_back(i);
  CHECK(order.size() == 3);
  auto classes = fold_partition(tri.fs, order);
  std::size_t big = 0;
  for (const auto& c : classes)
    if (c.front().length == 2) {
      ++big;
      CHECK(c.size() == 3);
    }
  CHECK(big == 1);
  CHECK(check_fold_maximality(tri.fs, tri.discs).pass);
}

TEST_CASE("fold partition does not depend on order") {
  auto b = build(load_presentation(SCCAT_DATA "/genus2.txt"));
  std::vector<std::size_t> order(b.fs.folds.size());
  std::iota(order.begin(), order.end(), 0);
  auto base = fold_partition(b.fs, order);
  do {
    CHECK(fold_partition(b.fs, order) == base);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("truncated pieces are caught") {
  auto b = build(parse_presentation(
      "generators: a b c d e f g h i j k l m n o p q r s t u v w x y z\n"
      "relator: a b c d e f g h i j k l m n o p q r s\n"
      "relator: a b c t u v w x y z d- e- f- g- h- i- j- k- l-"));
  const Fold* found = nullptr;
  for (const Fold& f : b.fs.folds)
    if (f.first.length == 3) found = &f;
  REQUIRE(found);
  const Fold whole = *found;
  REQUIRE(whole.first.length == 3);
  REQUIRE_FALSE(whole.reversed);
  CHECK(check_fold_maximality(b.fs, b.discs).pass);

  auto sub = [&](int shift) {
    Fold f = whole;
    const int n1 = b.discs[f.first.disc].boundary_length, n2 = b.discs[f.second.disc].boundary_length;
    f.first = {f.first.disc, cyclic_mod(f.first.start + shift, n1), cyclic_mod(f.first.start + shift + 2, n1), 2};
    f.second = {f.second.disc, cyclic_mod(f.second.start + shift, n2), cyclic_mod(f.second.start + shift + 2, n2), 2};
    return f;
  };
  FoldSchedule cut;
  cut.folds = {sub(0), sub(1)};
  auto rep = check_fold_maximality(cut, b.discs);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->first != rep.witness->second);

  CHECK(check_fold_maximality(FoldSchedule{}, b.discs).pass);
}

TEST_CASE("area estimate") {
  auto b = build(load_presentation(SCCAT_DATA "/genus2.txt"));
  auto a = area_estimate(b.p, b.mp);
  CHECK(a.approx_area == doctest::Approx(hyp::pi<double>() * b.mp.r * b.mp.r).epsilon(1e-15));
  CHECK(a.approx_area == doctest::Approx(0.980299614441925373).epsilon(1e-13));
  CHECK(a.formula_n == 1);
  CHECK(a.formula_area == doctest::Approx(1.21024643758262392).epsilon(1e-13));

  auto two = build(parse_presentation(
      "generators: a b c d e f g h\nrelator: a b a- b- c d c- d-\nrelator: e f e- f- g h g- h-"));
  auto a2 = area_estimate(two.p, two.mp);
  CHECK(a2.approx_area == doctest::Approx(2 * a.approx_area));
  CHECK(a2.formula_area == doctest::Approx(2 * a.formula_area));
}
