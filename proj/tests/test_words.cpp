#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "sccat/words.hpp"

using namespace sccat;
using testutil::word;

namespace {

Word scan_reduce(Word w) {
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1].inverse()) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        again = true;
        break;
      }
    }
  }
  return w;
}

Word strip_ends(Word w) {
  w = scan_reduce(w);
  while (w.size() >= 2 && w.front() == w.back().inverse()) w = Word(w.begin() + 1, w.end() - 1);
  return w;
}

Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    best = std::min(best, r);
  }
  return best;
}

std::size_t exponent_by_periods(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return n / d;
  }
  return 1;
}

std::set<Word> closure_oracle(const Presentation& p) {
  std::set<Word> out;
  for (const auto& r : p.relators()) {
    for (const Word& base : {r.letters(), inverse(r.letters())}) {
      for (std::size_t k = 0; k < base.size(); ++k) {
        Word w(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
        w.insert(w.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
        out.insert(w);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("parse examples") {
  auto p = parse_presentation("generators: a b\nrelator: a b a- b-");
  CHECK(p.generator_count() == 2);
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0].size() == 4);

  auto q = parse_presentation("generators: a\nrelator: a a- a");
  CHECK(q.relators()[0].letters() == word("a"));
  CHECK_FALSE(q.normalization_log().empty());

  auto g2 = load_presentation(SCCAT_DATA "/genus2.txt");
  CHECK(g2.relators()[0].size() == 8);
  CHECK(load_presentation(SCCAT_DATA "/genus2.json").relators() == g2.relators());
}

TEST_CASE("parse errors carry positions") {
  try {
    load_presentation(SCCAT_DATA "/malformed.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 14);
  }
  CHECK_THROWS_AS(parse_presentation("generators: a\nrelator: a a-"), TrivialRelatorError);
  CHECK_THROWS_AS(parse_presentation("relator: a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: a a"), ParseError);
  CHECK_THROWS_AS(parse_presentation_json("{\"generators\": [\"a\"], \"relators\": [[\"b\"]]}"), ParseError);
}

TEST_CASE("duplicates are removed up to rotation and inversion") {
  auto p = load_presentation(SCCAT_DATA "/genus2_duplicate.txt");
  CHECK(p.relators().size() == 1);
  REQUIRE(p.normalization_log().size() == 1);
  CHECK(p.normalization_log()[0].find("warning") != std::string::npos);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(word("a b b- a")) == word("a a"));
  CHECK(free_reduce(Word{}).empty());
  CHECK(free_reduce(word("a b a- a b- a-")).empty());

  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    Word w = testutil::random_word(rng, 3, static_cast<int>(rng() % 16));
    Word r = free_reduce(w);
    CHECK(r == scan_reduce(w));
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);
    Word ww = w;
    const Word wi = inverse(w);
    ww.insert(ww.end(), wi.begin(), wi.end());
    CHECK(free_reduce(ww).empty());
  }
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclic_reduce(word("b- a b b"))->letters() == least_rotation(word("a b")));
  CHECK(cyclic_reduce(word("a b a- b-"))->letters() == word("a b a- b-"));
  CHECK(cyclic_reduce(word("a- b a"))->letters() == word("b"));
  CHECK_FALSE(cyclic_reduce(word("a b b- a-")).has_value());

  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    Word w = testutil::random_word(rng, 3, 1 + static_cast<int>(rng() % 14));
    auto c = cyclic_reduce(w);
    Word o = strip_ends(w);
    if (o.empty()) {
      CHECK_FALSE(c.has_value());
      continue;
    }
    REQUIRE(c.has_value());
    CHECK(c->letters() == least_rotation(o));
    CHECK(is_cyclically_reduced(c->letters()));
    CHECK(c->inverse().letters() == least_rotation(inverse(o)));
  }
}

TEST_CASE("proper powers") {
  auto ab3 = proper_power_root(CyclicWord(word("a b a b a b")));
  CHECK(ab3.root.letters() == word("a b"));
  CHECK(ab3.exponent == 3);
  CHECK(proper_power_root(CyclicWord(word("a b a- b-"))).exponent == 1);
  auto a6 = proper_power_root(CyclicWord(word("a a a a a a")));
  CHECK(a6.root.letters() == word("a"));
  CHECK(a6.exponent == 6);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    Word base = testutil::random_reduced(rng, 2, 1 + static_cast<int>(rng() % 5));
    auto c = cyclic_reduce(base);
    if (!c) continue;
    Word w;
    const int e = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < e; ++i) w.insert(w.end(), c->letters().begin(), c->letters().end());
    CyclicWord cw(w);
    CHECK(proper_power_root(cw).exponent == exponent_by_periods(cw.letters()));
  }
}

TEST_CASE("symmetrized closure") {
  auto count = [](const Presentation& p) { return symmetrized_closure(p).size(); };
  CHECK(count(parse_presentation("generators: a b\nrelator: a b a- b-")) == 8);
  CHECK(count(parse_presentation("generators: a b c d e\nrelator: a b c d e")) == 10);
  CHECK(count(Presentation::create({"a"}, {})) == 0);

  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    std::vector<Word> raw;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k)
      raw.push_back(testutil::random_reduced(rng, 2, 1 + static_cast<int>(rng() % 9)));
    Presentation p;
    try {
      p = Presentation::create(testutil::names(2), raw);
    } catch (const TrivialRelatorError&) {
      continue;
    }
    std::set<Word> got;
    for (const auto& e : symmetrized_closure(p)) got.insert(e.word);
    CHECK(got == closure_oracle(p));
    CHECK(got.size() == symmetrized_closure(p).size());
  }
}

TEST_CASE("Dehn reduction") {
  auto g2 = load_presentation(SCCAT_DATA "/genus2.txt");
  DehnReducer dehn(g2);
  CHECK(dehn.is_identity(word("a b a- b- c d c- d-")));
  CHECK(dehn.is_identity(word("b a- b- c d c- d- a")));
  CHECK_FALSE(dehn.is_identity(word("a b")));
  CHECK_FALSE(dehn.is_identity(word("a b a- b-")));

  // products of conjugates of relators and their inverses are trivial
  std::mt19937_64 rng(15);
  const Word r = g2.relators()[0].letters();
  for (int t = 0; t < 200; ++t) {
    Word w;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) {
      Word u = testutil::random_reduced(rng, 4, static_cast<int>(rng() % 6));
      Word rel = rng() % 2 ? r : inverse(r);
      w.insert(w.end(), u.begin(), u.end());
      w.insert(w.end(), rel.begin(), rel.end());
      Word ui = inverse(u);
      w.insert(w.end(), ui.begin(), ui.end());
    }
    CHECK(dehn.is_identity(w));
  }
  // short words contain no more than half a relator, so they are fixed points
  for (int t = 0; t < 200; ++t) {
    Word w = testutil::random_reduced(rng, 4, 1 + static_cast<int>(rng() % 4));
    CHECK(dehn.reduce(w) == w);
  }
}
