#pragma once

#include <complex>
#include <string>

#include "sccat/complexfold.hpp"
#include "sccat/linkcert.hpp"

namespace sccat::svg {

/// Every disc in its own cell: the g_i-gon at radius r, corners marked,
/// diagonals drawn; with `folds`, segments are filled by fold class.
std::string render_discs(const Presentation& p, const MetricParams& mp, const FoldSchedule& fs, bool folds);

/// Vertex link before folding (top) and after folding and smoothing (bottom).
std::string render_links(const Type1Link& link);

/// Regular Euclidean n-gon with all diagonals of length ≤ k; when k = ⌊(n−1)/6⌋
/// the pair realizing the smallest internal angle is highlighted.
std::string render_demo(int n, int k);

/// SVG path data for the geodesic between two Poincaré points, in a frame
/// mapping the unit disc to the square of side `size` at (x0, y0).
std::string geodesic_path(std::complex<double> a, std::complex<double> b, double x0, double y0, double size);

}  // namespace sccat::svg
