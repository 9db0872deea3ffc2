#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sccat {

/// A letter of the alphabet S ⊔ S⁻¹: a generator index plus an inversion flag.
/// Letters are totally ordered by generator index first, then uninverted before
/// inverted.
struct Letter {
  std::uint32_t generator = 0;
  bool inverted = false;

  constexpr Letter inverse() const { return {generator, !inverted}; }
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);

/// Freely reduce: cancel adjacent x·x⁻¹ pairs until none remain.
Word free_reduce(const Word& w);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Nonempty cyclically reduced word stored in its lexicographically least
/// rotation.
class CyclicWord {
 public:
  /// Requires `letters` nonempty and cyclically reduced; throws otherwise.
  explicit CyclicWord(Word letters);

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  /// Letter at cyclic position i (any integer).
  Letter at(std::ptrdiff_t i) const;

  /// The rotation starting at `offset`.
  Word rotation(std::size_t offset) const;

  CyclicWord inverse() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  Word letters_;
};

/// Strip conjugating ends and cancel; nullopt when the word is trivial.
std::optional<CyclicWord> cyclic_reduce(const Word& w);

struct PowerDecomposition {
  CyclicWord root;
  std::size_t exponent;
};

PowerDecomposition proper_power_root(const CyclicWord& w);

/// Canonical key of a relator up to rotation and inversion.
CyclicWord relator_key(const CyclicWord& w);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A relator that freely reduces to the empty word.
class TrivialRelatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generators plus cyclically reduced relators, pairwise distinct up to
/// rotation and inversion. Immutable after construction.
class Presentation {
 public:
  Presentation() = default;

  /// Reduces every relator, rejects trivial ones and drops duplicates,
  /// recording each change in the normalization log.
  static Presentation create(std::vector<std::string> generator_names,
                             const std::vector<Word>& raw_relators);

  const std::vector<std::string>& generator_names() const { return generators_; }
  const std::vector<CyclicWord>& relators() const { return relators_; }
  const std::vector<std::string>& normalization_log() const { return log_; }

  std::size_t generator_count() const { return generators_.size(); }
  std::size_t total_length() const;
  std::size_t min_relator_length() const;

  std::string format_word(const Word& w) const;
  std::string format_letter(Letter l) const;

 private:
  std::vector<std::string> generators_;
  std::vector<CyclicWord> relators_;
  std::vector<std::string> log_;
};

/// Line format: `generators: a b` then one `relator: a b a- b-` per relator.
Presentation parse_presentation(std::string_view text);

/// `{"generators": [...], "relators": [["a","b","a-","b-"], ...]}`
Presentation parse_presentation_json(std::string_view text);

/// Picks the JSON reader when `path` ends in `.json`.
Presentation load_presentation(const std::string& path);

/// One element of the symmetrized closure. For `inverted == false` the word
/// is the rotation of the relator starting at `offset`; otherwise it reads the
/// relator backwards from `offset`, inverting each letter.
struct ClosureElement {
  Word word;
  std::size_t relator = 0;
  std::size_t offset = 0;
  bool inverted = false;
};

/// All rotations of all relators and their inverses, deduplicated as words.
std::vector<ClosureElement> symmetrized_closure(const Presentation& p);

/// Dehn's algorithm: repeatedly replaces more than half of a relator by the
/// shorter remainder. Decides the word problem for C'(1/6) presentations.
class DehnReducer {
 public:
  explicit DehnReducer(const Presentation& p);
  Word reduce(const Word& w) const;
  bool is_identity(const Word& w) const { return reduce(w).empty(); }

 private:
  std::vector<Word> closure_;
};

}  // namespace sccat
