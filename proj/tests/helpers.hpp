#pragma once

#include <random>
#include <string>

#include "sccat/words.hpp"

namespace testutil {

inline sccat::Presentation parse(const std::string& text) { return sccat::parse_presentation(text); }

// Tokens like "a b- c", no reduction.
inline sccat::Word word(const std::string& letters) {
  sccat::Word w;
  std::size_t i = 0;
  while (i < letters.size()) {
    if (letters[i] == ' ') {
      ++i;
      continue;
    }
    sccat::Letter l{static_cast<std::uint32_t>(letters[i] - 'a'), false};
    ++i;
    if (i < letters.size() && letters[i] == '-') {
      l.inverted = true;
      ++i;
    }
    w.push_back(l);
  }
  return w;
}

// Random freely reduced word on m generators.
inline sccat::Word random_reduced(std::mt19937_64& rng, int m, int len) {
  sccat::Word w;
  std::uniform_int_distribution<int> pick(0, 2 * m - 1);
  while (static_cast<int>(w.size()) < len) {
    const int x = pick(rng);
    sccat::Letter l{static_cast<std::uint32_t>(x / 2), x % 2 == 1};
    if (!w.empty() && w.back() == l.inverse()) continue;
    w.push_back(l);
  }
  return w;
}

inline sccat::Word random_word(std::mt19937_64& rng, int m, int len) {
  sccat::Word w;
  std::uniform_int_distribution<int> pick(0, 2 * m - 1);
  for (int i = 0; i < len; ++i) {
    const int x = pick(rng);
    w.push_back({static_cast<std::uint32_t>(x / 2), x % 2 == 1});
  }
  return w;
}

inline std::vector<std::string> names(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back(m <= 26 ? std::string(1, char('a' + i)) : "x" + std::to_string(i));
  return out;
}

}  // namespace testutil
