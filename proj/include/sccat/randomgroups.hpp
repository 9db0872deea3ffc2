#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "sccat/words.hpp"

namespace sccat {

/// Gromov density model: ⌊(2m−1)^{d·l}⌋ relators (at least one), each a
/// random cyclically reduced word of length exactly l on m generators.
struct DensityParams {
  int m = 2;
  int l = 12;
  double d = 0.05;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
};

/// Throws std::invalid_argument unless m ≥ 2, l ≥ 1, 0 < d < 1.
void validate(const DensityParams& dp);

std::size_t relator_count(const DensityParams& dp);

/// Sample `index` of the experiment; depends only on (seed, index).
Presentation sample_presentation(const DensityParams& dp, std::size_t index = 0);

struct StatsRow {
  int m = 0;
  int l = 0;
  double d = 0;
  std::size_t samples = 0;
  std::size_t passed_c16 = 0;
  std::size_t passed_uniform = 0;
  std::size_t certified = 0;
  std::size_t refused_after_gate = 0;
  double min_central_path = 0;         // over certified samples
  double mean_margin = 0;              // mean of min(type-1, type-2 girth) − 2π, finite values only
  double max_piece_mean = 0;
  std::map<std::size_t, std::size_t> max_piece_histogram;

  double rate(std::size_t k) const { return samples ? static_cast<double>(k) / static_cast<double>(samples) : 0.0; }
  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

/// One row per parameter set; empty when samples = 0.
using StatsTable = std::vector<StatsRow>;

StatsTable experiment(const DensityParams& dp, bool run_certify = false);

/// Header comment, column line, one line per row.
void write_csv(std::ostream& os, const StatsTable& table);

}  // namespace sccat
