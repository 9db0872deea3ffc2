#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sccat/pieces.hpp"

using namespace sccat;

using oracle::random_presentation;

void check_against_oracle(const Presentation& p) { CHECK(oracle::piece_disagreement(p) == ""); }

TEST_CASE("genus-2 pieces have length 1") {
  auto p = load_presentation(SCCAT_DATA "/genus2.txt");
  auto pieces = enumerate_pieces(p);
  CHECK(pieces.size() == 4);
  for (const auto& pc : pieces) CHECK(pc.word.size() == 1);
  auto rep = check_conditions(p);
  CHECK(rep.g == 8);
  CHECK(rep.max_piece_length == 1);
  CHECK(rep.passes_uniform);
  CHECK(rep.per_relator_max_ratio[0] == Ratio{1, 8});
  check_against_oracle(p);
}

TEST_CASE("a^7 overlaps its own rotations") {
  auto p = parse_presentation("generators: a b\nrelator: a a a a a a a\nrelator: a b a a b b");
  auto rep = check_conditions(p);
  CHECK(rep.per_relator_max_piece[0] == 6);
  CHECK(rep.proper_power_flags[0]);
  CHECK_FALSE(rep.passes_uniform);
  check_against_oracle(p);
}

TEST_CASE("no pieces on distinct letters") {
  auto p = parse_presentation("generators: a b c d e f g\nrelator: a b c d e f g");
  CHECK(enumerate_pieces(p).empty());
  auto rep = check_conditions(p);
  CHECK(rep.max_piece_length == 0);
  CHECK(rep.passes_uniform);
}

TEST_CASE("gate examples") {
  auto pp = load_presentation(SCCAT_DATA "/proper_power.txt");
  auto r1 = check_conditions(pp);
  CHECK_FALSE(r1.passes_uniform);
  CHECK(refusal_reason(r1).find("proper power") == 0);

  auto st = check_conditions(load_presentation(SCCAT_DATA "/strictness.txt"));
  CHECK(st.g == 12);
  CHECK(st.max_piece_length == 2);
  CHECK(st.passes_c16 == false);
  CHECK_FALSE(st.passes_uniform);

  auto cm = check_conditions(load_presentation(SCCAT_DATA "/commutator.txt"));
  CHECK(cm.short_relators);
  CHECK_FALSE(cm.passes_uniform);

  auto sp = check_conditions(load_presentation(SCCAT_DATA "/shared_pair.txt"));
  CHECK(sp.max_piece_length == 2);
  CHECK(sp.passes_uniform);
  CHECK(refusal_reason(sp).empty());
}

TEST_CASE("uniform implies plain C'(1/6)") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    auto rep = check_conditions(random_presentation(rng, 3 + static_cast<int>(rng() % 3), 80));
    if (rep.passes_uniform) CHECK(rep.passes_c16);
    for (std::size_t i = 0; i < rep.per_relator_max_piece.size(); ++i)
      CHECK(rep.per_relator_max_piece[i] <= rep.max_piece_length);
  }
}

TEST_CASE("random presentations agree with brute force") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 150; ++t) check_against_oracle(random_presentation(rng, 2 + static_cast<int>(rng() % 2), 60));
}
