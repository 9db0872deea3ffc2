#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sccat/words.hpp"

namespace sccat {

/// A place where a word is read on a relator boundary. The covered boundary
/// edges are `offset .. offset+length-1` (cyclically) whatever the direction;
/// `inverted` means the word is read backwards along them, inverting letters.
struct Occurrence {
  std::size_t relator = 0;
  std::size_t offset = 0;
  bool inverted = false;
  std::size_t length = 0;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Reads the word described by an occurrence.
Word read_occurrence(const Presentation& p, const Occurrence& occ);

/// A maximal piece: every occurrence of `word` in the symmetrized closure,
/// plus the occurrence pairs whose common path extends in neither direction.
/// Of the two mutually inverse readings of a piece only the
/// lexicographically smaller word is reported.
struct Piece {
  Word word;
  std::vector<Occurrence> occurrences;
  std::vector<std::pair<std::size_t, std::size_t>> maximal_pairs;  // indices into occurrences
  bool maximal = true;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Occurrences are proper boundary subpaths: on a relator of length n a
/// piece occurrence has length at most n-1.
std::vector<Piece> enumerate_pieces(const Presentation& p);

/// Exact rational number (small numerators and denominators only).
struct Ratio {
  std::size_t num = 0;
  std::size_t den = 1;
  double value() const { return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0; }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct SmallCancellationReport {
  std::size_t g = 0;
  std::size_t max_piece_length = 0;
  std::vector<std::size_t> per_relator_max_piece;
  std::vector<Ratio> per_relator_max_ratio;
  std::vector<bool> proper_power_flags;
  bool passes_c16 = false;
  bool passes_uniform = false;
  bool short_relators = false;  // g < 7: no piece can satisfy the strict bound

  friend bool operator==(const SmallCancellationReport&, const SmallCancellationReport&) = default;
};

/// Longest piece on each relator via one sort of closure positions; does not
/// materialize occurrence pairs, so it scales to thousands of relators.
SmallCancellationReport check_conditions(const Presentation& p);

/// Human-readable reason for a failed uniform check, empty when it passes.
std::string refusal_reason(const SmallCancellationReport& r);

}  // namespace sccat
