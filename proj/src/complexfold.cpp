#include "sccat/complexfold.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sccat/detail/union_find.hpp"

namespace sccat {

MetricParams choose_radius(const SmallCancellationReport& report, double radius_factor) {
  if (!report.passes_uniform)
    throw std::invalid_argument("choose_radius: presentation is not uniformly C'(1/6)");
  if (!(radius_factor > 0 && radius_factor < 1))
    throw std::invalid_argument("choose_radius: radius factor must lie in (0, 1)");
  MetricParams mp;
  mp.g = report.g;
  mp.n_eff = static_cast<int>(std::max<std::size_t>(1, report.max_piece_length));
  if (mp.g < static_cast<std::size_t>(6 * mp.n_eff + 1))
    throw std::logic_error("choose_radius: g < 6·n_eff + 1 despite the uniform check");
  mp.radius_factor = radius_factor;
  mp.r_max = hyp::r_max<double>(mp.n_eff);
  mp.r = radius_factor * mp.r_max;
  mp.lambda = hyp::edge_length_lambda(mp.r, static_cast<int>(mp.g));
  mp.theta = hyp::base_angle_theta(mp.r, static_cast<int>(mp.g));
  return mp;
}

std::vector<Disc> build_discs(const Presentation& p, const MetricParams& mp) {
  const int g = static_cast<int>(mp.g);
  const auto chart = hyp::embed_polygon(g, mp.r);
  std::vector<Disc> discs;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    Disc d;
    d.relator = i;
    d.boundary_length = static_cast<int>(p.relators()[i].size());
    d.g = g;
    d.r = mp.r;
    d.corner_angle = 2 * mp.theta;
    d.center_link_length = d.boundary_length * (2 * hyp::pi<double>() / g);
    d.chart = chart;
    discs.push_back(std::move(d));
  }
  return discs;
}

FoldSchedule segments_from_pieces(const std::vector<Disc>& discs, const std::vector<Piece>& pieces) {
  FoldSchedule fs;
  fs.diagonals.resize(discs.size());
  std::vector<std::set<Segment>> chords(discs.size());
  auto segment_of = [&](const Occurrence& o) {
    const int n = discs.at(o.relator).boundary_length;
    const int start = static_cast<int>(o.offset);
    const int len = static_cast<int>(o.length);
    return Segment{o.relator, start, cyclic_mod(start + len, n), len};
  };
  for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
    const Piece& piece = pieces[pi];
    for (std::size_t k = 0; k < piece.maximal_pairs.size(); ++k) {
      const auto& [ia, ib] = piece.maximal_pairs[k];
      const Occurrence& a = piece.occurrences.at(ia);
      const Occurrence& b = piece.occurrences.at(ib);
      Fold f{segment_of(a), segment_of(b), a.inverted != b.inverted, pi, k};
      chords[f.first.disc].insert(f.first);
      chords[f.second.disc].insert(f.second);
      fs.folds.push_back(f);
    }
  }
  for (std::size_t d = 0; d < discs.size(); ++d) fs.diagonals[d].assign(chords[d].begin(), chords[d].end());
  return fs;
}

namespace {

/// A fold read from one side: disc vertex `start + t` (0 ≤ t ≤ length) maps to
/// `target_start + slope·t` on the target disc.
struct DirectedFold {
  std::size_t fold;
  std::size_t disc, target;
  int start, length;
  int target_start;
  int slope;
  int modulus, target_modulus;

  int image(int v) const {
    return cyclic_mod(target_start + slope * cyclic_mod(v - start, modulus), target_modulus);
  }
};

std::vector<DirectedFold> directed(const FoldSchedule& fs, const std::vector<Disc>& discs) {
  std::vector<DirectedFold> out;
  for (std::size_t i = 0; i < fs.folds.size(); ++i) {
    const Fold& f = fs.folds[i];
    const int k = f.first.length;
    const int na = discs.at(f.first.disc).boundary_length;
    const int nb = discs.at(f.second.disc).boundary_length;
    const int slope = f.reversed ? -1 : 1;
    out.push_back({i, f.first.disc, f.second.disc, f.first.start, k,
                   cyclic_mod(f.image(0), nb), slope, na, nb});
    const int back_start = cyclic_mod(f.second.start, nb);
    const int back_target = f.reversed ? f.first.start + k : f.first.start;
    out.push_back({i, f.second.disc, f.first.disc, back_start, k, cyclic_mod(back_target, na), slope, nb,
                   na});
  }
  return out;
}

}  // namespace

MaximalityReport check_fold_maximality(const FoldSchedule& fs, const std::vector<Disc>& discs) {
  MaximalityReport rep;
  const auto dir = directed(fs, discs);
  for (std::size_t x = 0; x < dir.size(); ++x) {
    for (std::size_t y = x + 1; y < dir.size(); ++y) {
      const DirectedFold& f1 = dir[x];
      const DirectedFold& f2 = dir[y];
      if (f1.fold == f2.fold || f1.disc != f2.disc || f1.target != f2.target || f1.slope != f2.slope)
        continue;
      const int n = f1.modulus;
      // Cyclic union of the two vertex intervals, when they meet.
      int ustart, ulen, shared;
      const int d12 = cyclic_mod(f2.start - f1.start, n);
      const int d21 = cyclic_mod(f1.start - f2.start, n);
      if (d12 <= f1.length) {
        ustart = f1.start;
        ulen = std::max(f1.length, d12 + f2.length);
        shared = f2.start;
      } else if (d21 <= f2.length) {
        ustart = f2.start;
        ulen = std::max(f2.length, d21 + f1.length);
        shared = f1.start;
      } else {
        continue;
      }
      if (ulen >= n) continue;
      if (f1.image(shared) != f2.image(shared)) continue;
      bool covered = false;
      for (const DirectedFold& f3 : dir) {
        if (f3.disc != f1.disc || f3.target != f1.target || f3.slope != f1.slope) continue;
        const int off = cyclic_mod(ustart - f3.start, n);
        if (off + ulen > f3.length) continue;
        if (f3.image(ustart) != f1.image(ustart)) continue;
        covered = true;
        break;
      }
      if (!covered) {
        rep.pass = false;
        rep.witness = std::make_pair(f1.fold, f2.fold);
        rep.detail = "folds " + std::to_string(f1.fold) + " and " + std::to_string(f2.fold) +
                     " combine to a common path of length " + std::to_string(ulen) + " on disc " +
                     std::to_string(f1.disc) + " that no fold covers";
        return rep;
      }
    }
  }
  return rep;
}

std::vector<std::vector<Segment>> fold_partition(const FoldSchedule& fs, std::span<const std::size_t> order) {
  std::map<Segment, std::size_t> index;
  std::vector<Segment> segs;
  auto id = [&](const Segment& s) {
    auto [it, fresh] = index.emplace(s, segs.size());
    if (fresh) segs.push_back(s);
    return it->second;
  };
  for (const Fold& f : fs.folds) {
    id(f.first);
    id(f.second);
  }
  detail::UnionFind uf(segs.size());
  for (std::size_t i : order) uf.unite(id(fs.folds.at(i).first), id(fs.folds.at(i).second));
  std::map<std::size_t, std::vector<Segment>> classes;
  for (std::size_t i = 0; i < segs.size(); ++i) classes[uf.find(i)].push_back(segs[i]);
  std::vector<std::vector<Segment>> out;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AreaEstimate area_estimate(const Presentation& p, const MetricParams& mp) {
  AreaEstimate a;
  const double scale = static_cast<double>(p.total_length()) / static_cast<double>(mp.g);
  a.approx_area = scale * hyp::pi<double>() * mp.r * mp.r;
  a.formula_n = std::max(1, static_cast<int>(mp.g / 6));
  const double rm = hyp::r_max<double>(a.formula_n);
  a.formula_area = scale * hyp::pi<double>() * rm * rm;
  return a;
}

}  // namespace sccat
