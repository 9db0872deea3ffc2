#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sccat/complexfold.hpp"
#include "sccat/metric_graph.hpp"
#include "sccat/pieces.hpp"
#include "sccat/words.hpp"

namespace sccat {

/// Raised when a construction invariant fails; always a bug, never a verdict.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Link of the image of the 1-skeleton vertex, at each construction stage.
struct Type1Link {
  LinkGraph unfolded;  // one edge of weight 2θ per relator corner
  LinkGraph folded;    // corners interior to a common piece collapsed
  LinkGraph final;     // stubs at piece ends identified, degree-2 vertices smoothed
  double min_central_path = 0;
  std::size_t surviving_bigons = 0;  // parallel edges left after collapsing
};

Type1Link build_type1_link(const Presentation& p, const FoldSchedule& fs, const MetricParams& mp);
Type1Link build_type1_link(const Presentation& p, const std::vector<Piece>& pieces, const MetricParams& mp);

/// A point in the interior of one lift of a disc to the universal cover, in
/// that disc's chart: boundary vertex `anchor + t` sits at chart vertex t and
/// `z` is in Poincaré coordinates. `lift` is the group element at boundary
/// position 0 of the lifted disc, as a word.
struct ChartPoint {
  std::size_t disc = 0;
  int anchor = 0;
  std::complex<double> z;
  Word lift;
};

/// Points of disc interiors of the universal cover identified with one
/// another by the folds, up to the group action. Only classes containing a
/// point on some fold diagonal are enumerated; all other interior points
/// have a round circle of length 2π as link.
struct InteriorPointClass {
  std::vector<ChartPoint> members;
  bool crossing = false;  // seeded at a crossing of two chords
};

std::vector<InteriorPointClass> enumerate_interior_points(const Presentation& p, const FoldSchedule& fs,
                                                          const std::vector<Disc>& discs);

struct Type2Link {
  LinkGraph graph;  // smoothed quotient of the circles
  std::size_t circles = 0;
  std::size_t circle_groups = 0;  // circles after whole-circle identifications
  std::size_t half_identifications = 0;
  std::size_t whole_identifications = 0;
  double min_alpha = 0;  // shared arc of the half-circles at one point
  double min_beta = 0;   // longest arc of a circle glued to no other circle
};

Type2Link build_type2_link(const Presentation& p, const InteriorPointClass& c, const std::vector<Disc>& discs,
                           const FoldSchedule& fs, const MetricParams& mp);

struct WitnessStep {
  std::string vertex;
  double arc = 0;  // length of the link edge leaving `vertex`

  friend bool operator==(const WitnessStep&, const WitnessStep&) = default;
};

struct Type2Result {
  std::size_t disc = 0;
  double x = 0, y = 0;  // seed point, Poincaré coordinates in the disc chart
  int anchor = 0;
  bool crossing = false;
  std::size_t circles = 0;
  std::size_t circle_groups = 0;
  double girth = 0;
  double alpha = 0;
  double beta = 0;
  std::vector<WitnessStep> witness;

  friend bool operator==(const Type2Result&, const Type2Result&) = default;
};

enum class Verdict { certified, refused };

struct CertifyOptions {
  double radius_factor = 0.9;
  double tolerance = 1e-9;         // slack allowed below 2π for type-2 girths
  double type1_margin = 1e-6;      // required excess of the type-1 girth over 2π
};

struct Certificate {
  std::size_t generators = 0;
  std::vector<std::size_t> relator_lengths;
  SmallCancellationReport conditions;
  std::optional<MetricParams> metric;
  std::optional<AreaEstimate> area;
  std::size_t pieces = 0;
  std::size_t folds = 0;

  double type1_girth = 0;
  std::vector<WitnessStep> type1_witness;
  double min_central_path = 0;
  std::vector<Type2Result> type2;
  std::vector<double> center_link_lengths;

  Verdict verdict = Verdict::refused;
  std::string reason;
  bool marginal = false;
  double type1_margin = 0;       // type-1 girth − 2π
  double type2_margin = 0;       // min type-2 girth − 2π
  double center_margin = 0;      // min centre link length − 2π
  double tolerance = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Checks the uniform condition, metrizes, folds and verifies the Link
/// Condition at every vertex class of the base complex.
Certificate certify(const Presentation& p, const CertifyOptions& options = {});

std::string to_string(Verdict v);

}  // namespace sccat
