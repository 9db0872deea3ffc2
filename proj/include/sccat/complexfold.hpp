#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sccat/hypgeom.hpp"
#include "sccat/pieces.hpp"
#include "sccat/words.hpp"

namespace sccat {

/// Metric chosen for every disc of the presentation complex.
struct MetricParams {
  std::size_t g = 0;           // minimum relator length
  int n_eff = 1;               // longest diagonal that must keep angles above π/3
  double radius_factor = 0.9;  // r = radius_factor · r_max(n_eff)
  double r_max = 0;
  double r = 0;
  double lambda = 0;  // boundary edge length
  double theta = 0;   // base angle of T(g, r); corners measure 2θ

  friend bool operator==(const MetricParams&, const MetricParams&) = default;
};

/// Throws std::invalid_argument unless the report passes the uniform check
/// and `radius_factor` lies in (0, 1).
MetricParams choose_radius(const SmallCancellationReport& report, double radius_factor = 0.9);

/// The singular disc D(g_i, g, r): g_i copies of T(g, r) around one centre.
/// It only embeds in the plane when g_i = g, so geometry is done in `chart`,
/// the regular g-gon, on windows of fewer than g consecutive boundary
/// vertices; boundary vertex `anchor + t` of the disc sits at chart vertex t.
struct Disc {
  std::size_t relator = 0;
  int boundary_length = 0;
  int g = 0;
  double r = 0;
  double corner_angle = 0;
  double center_link_length = 0;
  hyp::PolygonEmbedding<double> chart;
};

std::vector<Disc> build_discs(const Presentation& p, const MetricParams& mp);

/// The region cut off a disc by the chord from `start` to `end`, covering
/// `length` boundary edges counterclockwise from `start`.
struct Segment {
  std::size_t disc = 0;
  int start = 0;
  int end = 0;
  int length = 0;

  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Isometric identification of two segments subtended by one piece. Boundary
/// vertex `first.start + t` goes to `second.start + t`, or to
/// `second.start + length - t` when `reversed`.
struct Fold {
  Segment first;
  Segment second;
  bool reversed = false;
  std::size_t piece = 0;
  std::size_t pair = 0;

  int image(int t) const { return reversed ? second.start + first.length - t : second.start + t; }
};

struct FoldSchedule {
  std::vector<Fold> folds;
  std::vector<std::vector<Segment>> diagonals;  // per disc, distinct chords
};

FoldSchedule segments_from_pieces(const std::vector<Disc>& discs, const std::vector<Piece>& pieces);

struct MaximalityReport {
  bool pass = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // fold indices
  std::string detail;
};

/// Two folds that overlap or touch on one disc and map consistently into a
/// second disc must be covered by a single fold; otherwise the schedule was
/// built from non-maximal pieces.
MaximalityReport check_fold_maximality(const FoldSchedule& fs, const std::vector<Disc>& discs);

/// Classes of segments identified by the folds, unioned in the given order.
/// Each class and the list of classes come back sorted.
std::vector<std::vector<Segment>> fold_partition(const FoldSchedule& fs,
                                                 std::span<const std::size_t> order);

struct AreaEstimate {
  double approx_area = 0;   // (Σ g_i / g) · π · r²
  double formula_area = 0;  // same with r_max at the longest admissible piece length
  int formula_n = 1;

  friend bool operator==(const AreaEstimate&, const AreaEstimate&) = default;
};

AreaEstimate area_estimate(const Presentation& p, const MetricParams& mp);

inline int cyclic_mod(long x, long n) { return static_cast<int>(((x % n) + n) % n); }

}  // namespace sccat
