#include "sccat/linkcert.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "sccat/detail/union_find.hpp"

namespace sccat {

namespace {

constexpr double kPi = hyp::pi<double>();
constexpr double kTwoPi = 2 * kPi;
constexpr double kGeomEps = 1e-9;   // Klein-model incidence
constexpr double kAngleEps = 1e-9;  // breakpoint coincidence on link circles
constexpr std::size_t kMaxPieces = 20000;
constexpr std::size_t kMaxMembers = 20000;
constexpr std::size_t kMaxBreakpoints = 200000;

using cd = std::complex<double>;

std::size_t tail_vertex(Letter l) { return 2 * l.generator + (l.inverted ? 1 : 0); }
std::size_t head_vertex(Letter l) { return 2 * l.generator + (l.inverted ? 0 : 1); }

std::string link_vertex_label(const Presentation& p, std::size_t v) {
  return p.generator_names()[v / 2] + (v % 2 ? "-" : "+");
}

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

double circular_gap(double a, double b) {
  const double d = wrap(a - b);
  return std::min(d, kTwoPi - d);
}

double cross(cd a, cd b) { return a.real() * b.imag() - a.imag() * b.real(); }
cd poincare_to_klein(cd z) { return 2.0 * z / (1.0 + std::norm(z)); }
cd klein_to_poincare(cd w) { return w / (1.0 + std::sqrt(std::max(0.0, 1.0 - std::norm(w)))); }

struct Chart {
  int g = 0;
  double rp = 0;  // Poincaré radius of a boundary vertex
  double rk = 0;  // Klein radius
  cd vp(int t) const { return std::polar(rp, kTwoPi * t / g); }
  cd vk(int t) const { return std::polar(rk, kTwoPi * t / g); }
  cd turn(int s) const { return std::polar(1.0, -kTwoPi * s / g); }
};

Chart chart_of(const std::vector<Disc>& discs) {
  Chart c;
  c.g = discs.front().g;
  c.rp = std::tanh(discs.front().r / 2);
  c.rk = std::tanh(discs.front().r);
  return c;
}

/// Shift s with target anchor = from + s, wrapped to (-n/2, n/2]; windows
/// further apart than g/3 vertices never overlap.
std::optional<int> anchor_shift(int from, int to, int n, int g) {
  int s = cyclic_mod(to - from, n);
  if (2 * s > n) s -= n;
  if (3 * std::abs(s) > g) return std::nullopt;
  return s;
}

/// One fold seen from one of its segments.
struct Side {
  std::size_t fold;
  std::size_t disc;
  int start;
  int k;
  std::size_t target;
  int target_start;
  bool reversed;
  Word hop;  // target lift = source lift · hop
};

/// Both segments of a fold bound the same path of the 1-skeleton, so the
/// lifted discs agree at the path's first vertex.
std::vector<Side> sides_of(const Presentation& p, const FoldSchedule& fs) {
  auto prefix = [&](std::size_t disc, int v) {
    const Word& w = p.relators()[disc].letters();
    return Word(w.begin(), w.begin() + cyclic_mod(v, static_cast<long>(w.size())));
  };
  auto join = [](Word a, const Word& b) {
    const Word ib = inverse(b);
    a.insert(a.end(), ib.begin(), ib.end());
    return free_reduce(a);
  };
  std::vector<Side> out;
  for (std::size_t i = 0; i < fs.folds.size(); ++i) {
    const Fold& f = fs.folds[i];
    if (f.first.length < 2) continue;
    const Word pa = prefix(f.first.disc, f.first.start), pb = prefix(f.second.disc, f.image(0));
    out.push_back({i, f.first.disc, f.first.start, f.first.length, f.second.disc, f.second.start, f.reversed,
                   join(pa, pb)});
    out.push_back({i, f.second.disc, f.second.start, f.first.length, f.first.disc, f.first.start, f.reversed,
                   join(pb, pa)});
  }
  return out;
}

cd apply_side(const Side& s, const Chart& c, cd z) {
  return s.reversed ? std::polar(1.0, kTwoPi * s.k / c.g) * std::conj(z) : z;
}

enum class Where { outside, diagonal, interior };

/// Position of a Klein point relative to the segment of length k anchored at
/// chart vertex 0.
Where locate(cd w, int k, const Chart& c) {
  const cd v0 = c.vk(0), vk = c.vk(k);
  const double chord = cross(v0 - vk, w - vk) / std::abs(v0 - vk);
  if (chord < -kGeomEps) return Where::outside;
  for (int t = 0; t < k; ++t) {
    const cd a = c.vk(t), b = c.vk(t + 1);
    if (cross(b - a, w - a) / std::abs(b - a) < kGeomEps) return Where::outside;
  }
  return chord <= kGeomEps ? Where::diagonal : Where::interior;
}

bool strictly_inside_chart(cd w, const Chart& c) {
  const int t = static_cast<int>(std::floor(wrap(std::arg(w)) * c.g / kTwoPi));
  for (int d = -1; d <= 1; ++d) {
    const cd a = c.vk(t + d), b = c.vk(t + d + 1);
    if (cross(b - a, w - a) / std::abs(b - a) < kGeomEps) return false;
  }
  return true;
}

/// Identification of an arc of the link circle at member i with an arc of
/// the circle at member j: direction ψ goes to σψ + c.
struct Ident {
  std::size_t i, j;
  double start, length;
  int sigma;
  double c;
  bool whole;
};

struct Closure {
  std::vector<ChartPoint> members;
  std::vector<Ident> idents;
};

/// With `dehn`, members must also lie on the same lift; without it, any lift
/// matches.
std::optional<std::size_t> find_member(const std::vector<ChartPoint>& members, const ChartPoint& x,
                                       const std::vector<Disc>& discs, const Chart& c, int* shift,
                                       const DehnReducer* dehn) {
  for (std::size_t q = 0; q < members.size(); ++q) {
    if (members[q].disc != x.disc) continue;
    const auto s = anchor_shift(x.anchor, members[q].anchor, discs[x.disc].boundary_length, c.g);
    if (!s) continue;
    if (std::abs(x.z * c.turn(*s) - members[q].z) < kGeomEps) {
      if (dehn) {
        Word w = inverse(members[q].lift);
        w.insert(w.end(), x.lift.begin(), x.lift.end());
        if (!dehn->is_identity(w)) continue;
      }
      if (shift) *shift = *s;
      return q;
    }
  }
  return std::nullopt;
}

Closure close_class(const ChartPoint& seed, const std::vector<Side>& sides, const std::vector<Disc>& discs,
                    const Chart& c, const DehnReducer& dehn) {
  Closure out;
  out.members.push_back(seed);
  for (std::size_t m = 0; m < out.members.size(); ++m) {
    for (const Side& side : sides) {
      const ChartPoint cur = out.members[m];
      if (side.disc != cur.disc) continue;
      const auto s = anchor_shift(cur.anchor, side.start, discs[side.disc].boundary_length, c.g);
      if (!s) continue;
      const cd zs = cur.z * c.turn(*s);
      const Where where = locate(poincare_to_klein(zs), side.k, c);
      if (where == Where::outside) continue;

      Word lift = cur.lift;
      lift.insert(lift.end(), side.hop.begin(), side.hop.end());
      const ChartPoint img{side.target, side.target_start, apply_side(side, c, zs), free_reduce(lift)};
      int s2 = 0;
      auto j = find_member(out.members, img, discs, c, &s2, &dehn);
      if (!j) {
        if (out.members.size() >= kMaxMembers) throw InternalError("interior point class too large");
        out.members.push_back(img);
        j = out.members.size() - 1;
      }

      const double step = kTwoPi / c.g;
      const int sigma = side.reversed ? -1 : 1;
      const double shift = side.reversed ? step * (side.k + *s - s2) : -step * (*s + s2);
      if (*j == m) {
        if (sigma == 1 && circular_gap(shift, 0) < kAngleEps) continue;
        throw InternalError("inconsistent gluing: a fold moves the link circle of a point onto itself");
      }

      Ident id{m, *j, 0, kTwoPi, sigma, wrap(shift), where == Where::interior};
      if (!id.whole) {
        const double to_v0 = std::arg(hyp::move_to_origin(zs, c.vp(0)));
        const double to_v1 = std::arg(hyp::move_to_origin(zs, c.vp(1)));
        const double start_side = wrap(to_v1 - to_v0) < kPi ? to_v0 : to_v0 + kPi;
        id.start = wrap(start_side + step * *s);
        id.length = kPi;
      }
      out.idents.push_back(id);
    }
  }
  return out;
}

struct GeoPiece {
  std::size_t disc;
  int anchor;
  cd p, q;  // Klein endpoints in the chart anchored at `anchor`
};

/// Cyrus–Beck clip of p→q to the counterclockwise polygon v_0 … v_k.
std::optional<std::pair<double, double>> clip(cd p, cd q, int k, const Chart& c) {
  double lo = 0, hi = 1;
  const cd d = q - p;
  for (int t = 0; t <= k; ++t) {
    const cd a = c.vk(t), b = c.vk(t == k ? 0 : t + 1);
    const cd e = t == k ? c.vk(0) - c.vk(k) : b - a;
    const double num = cross(e, p - a);
    const double den = cross(e, d);
    if (std::abs(den) < 1e-15) {
      if (num < -kGeomEps * std::abs(e)) return std::nullopt;
      continue;
    }
    const double x = -num / den;
    if (den > 0) lo = std::max(lo, x);
    else hi = std::min(hi, x);
  }
  if (hi - lo < 1e-9) return std::nullopt;
  return std::make_pair(lo, hi);
}

bool covered_by(const GeoPiece& big, cd p, cd q) {
  const cd d = big.q - big.p;
  const double len = std::abs(d);
  for (cd x : {p, q}) {
    if (std::abs(cross(d, x - big.p)) / len > kGeomEps) return false;
    const double t = std::real((x - big.p) * std::conj(d)) / (len * len);
    if (t < -kGeomEps || t > 1 + kGeomEps) return false;
  }
  return true;
}

std::vector<GeoPiece> transport_closure(const FoldSchedule& fs, const std::vector<Disc>& discs,
                                        const std::vector<Side>& sides, const Chart& c) {
  std::vector<GeoPiece> pieces;
  for (std::size_t d = 0; d < fs.diagonals.size(); ++d)
    for (const Segment& s : fs.diagonals[d])
      if (s.length >= 2) pieces.push_back({d, s.start, c.vk(0), c.vk(s.length)});

  for (std::size_t idx = 0; idx < pieces.size(); ++idx) {
    for (const Side& side : sides) {
      const GeoPiece cur = pieces[idx];
      if (side.disc != cur.disc) continue;
      const auto s = anchor_shift(cur.anchor, side.start, discs[cur.disc].boundary_length, c.g);
      if (!s) continue;
      const cd p = cur.p * c.turn(*s), q = cur.q * c.turn(*s);
      const auto range = clip(p, q, side.k, c);
      if (!range) continue;
      const cd a = apply_side(side, c, p + range->first * (q - p));
      const cd b = apply_side(side, c, p + range->second * (q - p));
      bool known = false;
      for (const GeoPiece& other : pieces) {
        if (other.disc != side.target) continue;
        const auto s2 = anchor_shift(side.target_start, other.anchor, discs[side.target].boundary_length, c.g);
        if (!s2) continue;
        if (covered_by(other, a * c.turn(*s2), b * c.turn(*s2))) {
          known = true;
          break;
        }
      }
      if (known) continue;
      if (pieces.size() >= kMaxPieces) throw InternalError("transported chords do not close up");
      pieces.push_back({side.target, side.target_start, a, b});
    }
  }
  return pieces;
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::certified ? "certified" : "refused"; }

Type1Link build_type1_link(const Presentation& p, const std::vector<Piece>& pieces, const MetricParams& mp) {
  const auto discs = build_discs(p, mp);
  return build_type1_link(p, segments_from_pieces(discs, pieces), mp);
}

Type1Link build_type1_link(const Presentation& p, const FoldSchedule& fs, const MetricParams& mp) {
  Type1Link out;
  const auto& rels = p.relators();
  const std::size_t nv = 2 * p.generator_count();
  const double corner = 2 * mp.theta;
  const int g = static_cast<int>(mp.g);
  auto delta = [&](int k) { return k <= 1 ? 0.0 : hyp::chord_wedge(mp.r, g, k); };

  std::vector<std::size_t> base(rels.size() + 1, 0);
  for (std::size_t i = 0; i < rels.size(); ++i) base[i + 1] = base[i] + rels[i].size();
  const std::size_t corners = base.back();
  auto corner_id = [&](std::size_t disc, int v) {
    return base[disc] + cyclic_mod(v, static_cast<long>(rels[disc].size()));
  };

  std::vector<std::pair<std::size_t, std::size_t>> ends(corners);
  std::vector<std::string> names(corners);
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t j = 0; j < rels[i].size(); ++j) {
      const auto jj = static_cast<std::ptrdiff_t>(j);
      ends[base[i] + j] = {head_vertex(rels[i].at(jj - 1)), tail_vertex(rels[i].at(jj))};
      names[base[i] + j] = "r" + std::to_string(i) + "." + std::to_string(j);
    }

  auto with_link_vertices = [&] {
    LinkGraph G;
    for (std::size_t v = 0; v < nv; ++v) G.add_vertex(link_vertex_label(p, v));
    return G;
  };
  out.unfolded = with_link_vertices();
  for (std::size_t c = 0; c < corners; ++c) out.unfolded.add_edge(ends[c].first, ends[c].second, corner, names[c]);

  // Corners strictly inside a piece are identified by its folds.
  detail::UnionFind uf(corners);
  for (const Fold& f : fs.folds)
    for (int t = 1; t < f.first.length; ++t)
      uf.unite(corner_id(f.first.disc, f.first.start + t), corner_id(f.second.disc, f.image(t)));

  std::map<std::size_t, std::size_t> class_index;
  std::vector<std::size_t> rep, class_of(corners);
  for (std::size_t c = 0; c < corners; ++c) {
    auto [it, fresh] = class_index.emplace(uf.find(c), rep.size());
    if (fresh) rep.push_back(c);
    class_of[c] = it->second;
  }
  for (std::size_t c = 0; c < corners; ++c) {
    auto e = ends[rep[class_of[c]]], f = ends[c];
    if (!(e == f || (e.first == f.second && e.second == f.first)))
      throw InternalError("fold identifies corners " + names[c] + " and " + names[rep[class_of[c]]] +
                          " with different ends");
  }
  const std::size_t ncls = rep.size();
  out.folded = with_link_vertices();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> parallel;
  for (std::size_t k = 0; k < ncls; ++k) {
    const auto& e = ends[rep[k]];
    out.folded.add_edge(e.first, e.second, corner, names[rep[k]]);
    ++parallel[std::minmax(e.first, e.second)];
  }
  for (const auto& [key, count] : parallel) out.surviving_bigons += count * (count - 1) / 2;

  // Stubs of length δ(k) at both ends of every fold of length k ≥ 2.
  auto side_of = [&](std::size_t cls, std::size_t x) {
    const auto& e = ends[rep[cls]];
    if (x == e.first) return 0;
    if (x == e.second) return 1;
    throw InternalError("piece end does not meet corner " + names[rep[cls]]);
  };
  struct Stub {
    std::size_t a;
    int as;
    std::size_t b;
    int bs;
    int k;
  };
  std::vector<Stub> stubs;
  for (const Fold& f : fs.folds) {
    const int k = f.first.length;
    if (k < 2) continue;
    const CyclicWord& ra = rels[f.first.disc];
    for (int t : {0, k}) {
      const std::size_t x = t == 0 ? tail_vertex(ra.at(f.first.start)) : head_vertex(ra.at(f.first.start + k - 1));
      const std::size_t ca = class_of[corner_id(f.first.disc, f.first.start + t)];
      const std::size_t cb = class_of[corner_id(f.second.disc, f.image(t))];
      stubs.push_back({ca, side_of(ca, x), cb, side_of(cb, x), k});
    }
  }

  std::vector<std::array<std::set<int>, 2>> bp(ncls);
  for (const Stub& s : stubs) {
    bp[s.a][s.as].insert(s.k);
    bp[s.b][s.bs].insert(s.k);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const Stub& s : stubs) {
      auto sync = [&](const std::set<int>& from, std::set<int>& to) {
        const std::vector<int> snapshot(from.begin(), from.upper_bound(s.k));
        for (int k : snapshot) changed |= to.insert(k).second;
      };
      sync(bp[s.a][s.as], bp[s.b][s.bs]);
      sync(bp[s.b][s.bs], bp[s.a][s.as]);
    }
  }

  std::map<std::tuple<std::size_t, int, int>, std::size_t> node_id, sub_id;
  for (std::size_t c = 0; c < ncls; ++c)
    for (int side : {0, 1})
      for (int k : bp[c][side]) {
        node_id.emplace(std::make_tuple(c, side, k), nv + node_id.size());
        sub_id.emplace(std::make_tuple(c, side, k), sub_id.size());
      }
  detail::UnionFind nodes(nv + node_id.size()), subs(sub_id.size());
  for (const Stub& s : stubs)
    for (auto it = bp[s.a][s.as].begin(); it != bp[s.a][s.as].end() && *it <= s.k; ++it) {
      nodes.unite(node_id.at({s.a, s.as, *it}), node_id.at({s.b, s.bs, *it}));
      subs.unite(sub_id.at({s.a, s.as, *it}), sub_id.at({s.b, s.bs, *it}));
    }

  LinkGraph G;
  std::map<std::size_t, std::size_t> vertex_of;
  auto vertex = [&](std::size_t node) {
    const std::size_t root = nodes.find(node);
    auto it = vertex_of.find(root);
    if (it != vertex_of.end()) return it->second;
    std::string label;
    if (root < nv) {
      label = link_vertex_label(p, root);
    } else {
      for (const auto& [key, id] : node_id)
        if (id == root) label = names[rep[std::get<0>(key)]] + (std::get<1>(key) ? "/v@" : "/u@") +
                                std::to_string(std::get<2>(key));
    }
    const std::size_t v = G.add_vertex(label);
    vertex_of.emplace(root, v);
    return v;
  };
  for (std::size_t v = 0; v < nv; ++v) vertex(v);

  std::map<std::size_t, std::pair<std::size_t, std::size_t>> emitted;
  out.min_central_path = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < ncls; ++c) {
    std::array<std::size_t, 2> last{ends[rep[c]].first, ends[rep[c]].second};
    std::array<int, 2> kmax{0, 0};
    for (int side : {0, 1}) {
      for (int k : bp[c][side]) {
        const std::size_t cur = node_id.at({c, side, k});
        const std::size_t u = vertex(last[side]), v = vertex(cur);
        const std::size_t sub = subs.find(sub_id.at({c, side, k}));
        auto [it, fresh] = emitted.emplace(sub, std::make_pair(u, v));
        if (fresh) {
          G.add_edge(u, v, delta(k) - delta(kmax[side]), "stub");
        } else if (it->second != std::make_pair(u, v) && it->second != std::make_pair(v, u)) {
          throw InternalError("stub identification with mismatched ends");
        }
        last[side] = cur;
        kmax[side] = k;
      }
    }
    const double central = corner - delta(kmax[0]) - delta(kmax[1]);
    out.min_central_path = std::min(out.min_central_path, central);
    if (!(central > kTwoPi / 3))
      throw InternalError("stubs at corner " + names[rep[c]] + " leave a central path of " + std::to_string(central));
    G.add_edge(vertex(last[0]), vertex(last[1]), central, names[rep[c]]);
  }
  out.final = G.smoothed();
  return out;
}

std::vector<InteriorPointClass> enumerate_interior_points(const Presentation& p, const FoldSchedule& fs,
                                                          const std::vector<Disc>& discs) {
  std::vector<InteriorPointClass> classes;
  if (discs.empty()) return classes;
  const Chart c = chart_of(discs);
  const auto sides = sides_of(p, fs);
  const DehnReducer dehn(p);
  const auto pieces = transport_closure(fs, discs, sides, c);

  struct Seed {
    ChartPoint point;
    bool crossing;
  };
  std::vector<Seed> seeds;
  std::vector<std::vector<double>> params(pieces.size(), std::vector<double>{0.0, 1.0});
  for (std::size_t a = 0; a < pieces.size(); ++a)
    for (std::size_t b = a + 1; b < pieces.size(); ++b) {
      if (pieces[a].disc != pieces[b].disc) continue;
      const auto s = anchor_shift(pieces[a].anchor, pieces[b].anchor, discs[pieces[a].disc].boundary_length, c.g);
      if (!s) continue;
      // b's endpoints in a's chart
      const cd rot = std::conj(c.turn(*s));
      const cd p1 = pieces[a].p, d1 = pieces[a].q - p1;
      const cd p2 = pieces[b].p * rot, d2 = pieces[b].q * rot - p2;
      const double den = cross(d1, d2);
      if (std::abs(den) < 1e-14) continue;
      const double t = cross(p2 - p1, d2) / den;
      const double u = cross(p2 - p1, d1) / den;
      if (t < -1e-12 || t > 1 + 1e-12 || u < -1e-12 || u > 1 + 1e-12) continue;
      const cd x = p1 + t * d1;
      if (!strictly_inside_chart(x, c)) continue;
      seeds.push_back({{pieces[a].disc, pieces[a].anchor, klein_to_poincare(x), {}}, true});
      params[a].push_back(t);
      params[b].push_back(u);
    }
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    auto& ts = params[a];
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      if (ts[i + 1] - ts[i] < 1e-7) continue;
      const cd x = pieces[a].p + 0.5 * (ts[i] + ts[i + 1]) * (pieces[a].q - pieces[a].p);
      if (!strictly_inside_chart(x, c)) continue;
      seeds.push_back({{pieces[a].disc, pieces[a].anchor, klein_to_poincare(x), {}}, false});
    }
  }

  for (const Seed& seed : seeds) {
    bool known = false;
    for (std::size_t k = 0; k < classes.size() && !known; ++k)
      if (find_member(classes[k].members, seed.point, discs, c, nullptr, nullptr)) {
        classes[k].crossing |= seed.crossing;
        known = true;
      }
    if (known) continue;
    Closure cl = close_class(seed.point, sides, discs, c, dehn);
    if (cl.idents.empty()) continue;
    classes.push_back({std::move(cl.members), seed.crossing});
  }
  return classes;
}

Type2Link build_type2_link(const Presentation& p, const InteriorPointClass& cls, const std::vector<Disc>& discs,
                           const FoldSchedule& fs, const MetricParams& mp) {
  (void)mp;
  Type2Link out;
  const Chart c = chart_of(discs);
  const Closure cl = close_class(cls.members.front(), sides_of(p, fs), discs, c, DehnReducer(p));
  const std::size_t M = cl.members.size();
  out.circles = M;
  for (const Ident& id : cl.idents) (id.whole ? out.whole_identifications : out.half_identifications)++;

  std::vector<std::vector<double>> bps(M);
  std::size_t total = 0;
  auto add = [&](std::size_t i, double a) {
    a = wrap(a);
    for (double b : bps[i])
      if (circular_gap(a, b) < kAngleEps) return false;
    if (++total > kMaxBreakpoints) throw InternalError("link breakpoints do not stabilise");
    bps[i].push_back(a);
    return true;
  };
  auto covers = [](const Ident& id, double a) {
    if (id.whole) return true;
    const double u = wrap(a - id.start);
    return u <= id.length + kAngleEps || u >= kTwoPi - kAngleEps;
  };
  for (const Ident& id : cl.idents) {
    add(id.i, id.start);
    if (!id.whole) add(id.i, id.start + id.length);
  }
  for (std::size_t i = 0; i < M; ++i)
    if (bps[i].empty()) add(i, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Ident& id : cl.idents) {
      for (const double b : std::vector<double>(bps[id.i]))
        if (covers(id, b)) changed |= add(id.j, id.sigma * b + id.c);
      for (const double b : std::vector<double>(bps[id.j])) {
        const double pre = id.sigma == 1 ? b - id.c : id.c - b;
        if (covers(id, pre)) changed |= add(id.i, pre);
      }
    }
  }
  std::vector<std::size_t> offset(M + 1, 0);
  for (std::size_t i = 0; i < M; ++i) {
    std::sort(bps[i].begin(), bps[i].end());
    offset[i + 1] = offset[i] + bps[i].size();
  }
  auto index_of = [&](std::size_t i, double a) {
    for (std::size_t q = 0; q < bps[i].size(); ++q)
      if (circular_gap(a, bps[i][q]) < 10 * kAngleEps) return q;
    throw InternalError("inconsistent gluing: breakpoint missing on link circle " + std::to_string(i));
  };
  auto arc = [&](std::size_t i, std::size_t q) {
    const double a0 = bps[i][q];
    const double a1 = q + 1 < bps[i].size() ? bps[i][q + 1] : bps[i][0] + kTwoPi;
    return std::make_pair(a0, a1);
  };

  detail::UnionFind nodes(offset[M]), subs(offset[M]);
  for (const Ident& id : cl.idents) {
    const std::size_t n = bps[id.i].size();
    for (std::size_t q = 0; q < n; ++q) {
      const auto [a0, a1] = arc(id.i, q);
      double u = wrap(a0 - id.start);
      if (u > kTwoPi - kAngleEps) u = 0;
      if (!id.whole && u + (a1 - a0) > id.length + kAngleEps) continue;
      const std::size_t i0 = index_of(id.j, id.sigma * a0 + id.c);
      const std::size_t i1 = index_of(id.j, id.sigma * a1 + id.c);
      const std::size_t qi = id.sigma == 1 ? i0 : i1;
      const auto [b0, b1] = arc(id.j, qi);
      if (std::abs((b1 - b0) - (a1 - a0)) > 1e-7)
        throw InternalError("inconsistent gluing: arcs of different length identified");
      nodes.unite(offset[id.i] + q, offset[id.j] + i0);
      nodes.unite(offset[id.i] + (q + 1) % n, offset[id.j] + i1);
      subs.unite(offset[id.i] + q, offset[id.j] + qi);
    }
  }

  // Whole-circle groups and the arcs private to one group.
  detail::UnionFind groups(M);
  for (const Ident& id : cl.idents)
    if (id.whole) groups.unite(id.i, id.j);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < M; ++i) roots.insert(groups.find(i));
  out.circle_groups = roots.size();
  std::map<std::size_t, std::set<std::size_t>> arc_groups;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t q = 0; q < bps[i].size(); ++q) arc_groups[subs.find(offset[i] + q)].insert(groups.find(i));

  out.min_beta = kTwoPi;
  out.min_alpha = kTwoPi;
  for (std::size_t i = 0; i < M; ++i) {
    const std::size_t n = bps[i].size();
    std::vector<bool> priv(n);
    bool all = true;
    for (std::size_t q = 0; q < n; ++q) {
      priv[q] = arc_groups[subs.find(offset[i] + q)].size() == 1;
      all = all && priv[q];
    }
    if (!all && out.circle_groups >= 2) {
      double best = 0, run = 0;
      for (std::size_t q = 0; q < 2 * n; ++q) {
        const auto [a0, a1] = arc(i, q % n);
        run = priv[q % n] ? run + (a1 - a0) : 0;
        best = std::max(best, run);
      }
      out.min_beta = std::min(out.min_beta, best);
    }
    double alpha = 0;
    bool any_half = false;
    for (std::size_t q = 0; q < n; ++q) {
      const auto [a0, a1] = arc(i, q);
      bool inside = true;
      for (const Ident& id : cl.idents) {
        if (id.i != i || id.whole) continue;
        any_half = true;
        double u = wrap(a0 - id.start);
        if (u > kTwoPi - kAngleEps) u = 0;
        inside = inside && u + (a1 - a0) <= id.length + kAngleEps;
      }
      if (inside) alpha += a1 - a0;
    }
    if (any_half) out.min_alpha = std::min(out.min_alpha, alpha);
  }

  LinkGraph G;
  std::map<std::size_t, std::size_t> vertex_of;
  auto vertex = [&](std::size_t i, std::size_t q) {
    const std::size_t root = nodes.find(offset[i] + q);
    auto it = vertex_of.find(root);
    if (it != vertex_of.end()) return it->second;
    const ChartPoint& m = cl.members[i];
    const std::size_t v = G.add_vertex("D" + std::to_string(m.disc) + "@" + std::to_string(m.anchor) + ":" +
                                       std::to_string(bps[i][q]));
    vertex_of.emplace(root, v);
    return v;
  };
  std::set<std::size_t> emitted;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t q = 0; q < bps[i].size(); ++q) {
      const std::size_t u = vertex(i, q), v = vertex(i, (q + 1) % bps[i].size());
      if (!emitted.insert(subs.find(offset[i] + q)).second) continue;
      const auto [a0, a1] = arc(i, q);
      G.add_edge(u, v, a1 - a0);
    }
  out.graph = G.smoothed();
  return out;
}

namespace {

std::vector<WitnessStep> witness_of(const LinkGraph& G, const Cycle& cyc) {
  std::vector<WitnessStep> w;
  for (std::size_t i = 0; i < cyc.edges.size(); ++i)
    w.push_back({G.label(cyc.vertices[i % cyc.vertices.size()]), G.edges()[cyc.edges[i]].weight});
  return w;
}

}  // namespace

Certificate certify(const Presentation& p, const CertifyOptions& options) {
  Certificate cert;
  cert.generators = p.generator_count();
  for (const auto& r : p.relators()) cert.relator_lengths.push_back(r.size());
  cert.conditions = check_conditions(p);
  cert.tolerance = options.tolerance;
  if (!cert.conditions.passes_uniform) {
    cert.reason = refusal_reason(cert.conditions);
    return cert;
  }

  const MetricParams mp = choose_radius(cert.conditions, options.radius_factor);
  cert.metric = mp;
  cert.area = area_estimate(p, mp);
  const auto pieces = enumerate_pieces(p);
  cert.pieces = pieces.size();
  const auto discs = build_discs(p, mp);
  const auto fs = segments_from_pieces(discs, pieces);
  cert.folds = fs.folds.size();
  const auto maximal = check_fold_maximality(fs, discs);
  if (!maximal.pass) throw InternalError("fold schedule not maximal: " + maximal.detail);

  const Type1Link t1 = build_type1_link(p, fs, mp);
  const Cycle c1 = girth(t1.final);
  cert.type1_girth = c1.length;
  cert.type1_witness = witness_of(t1.final, c1);
  cert.min_central_path = t1.min_central_path;
  cert.type1_margin = c1.length - kTwoPi;

  cert.center_margin = std::numeric_limits<double>::infinity();
  for (const Disc& d : discs) {
    cert.center_link_lengths.push_back(d.center_link_length);
    cert.center_margin = std::min(cert.center_margin, d.center_link_length - kTwoPi);
  }

  cert.type2_margin = std::numeric_limits<double>::infinity();
  for (const InteriorPointClass& cls : enumerate_interior_points(p, fs, discs)) {
    const Type2Link t2 = build_type2_link(p, cls, discs, fs, mp);
    const Cycle c2 = girth(t2.graph);
    Type2Result res;
    const ChartPoint& seed = cls.members.front();
    res.disc = seed.disc;
    res.anchor = seed.anchor;
    res.x = seed.z.real();
    res.y = seed.z.imag();
    res.crossing = cls.crossing;
    res.circles = t2.circles;
    res.circle_groups = t2.circle_groups;
    res.girth = c2.length;
    res.alpha = t2.min_alpha;
    res.beta = t2.min_beta;
    res.witness = witness_of(t2.graph, c2);
    cert.type2_margin = std::min(cert.type2_margin, c2.length - kTwoPi);
    cert.type2.push_back(std::move(res));
  }

  const bool center_ok = std::all_of(discs.begin(), discs.end(), [&](const Disc& d) { return d.boundary_length >= d.g; });
  const bool t1_ok = cert.type1_margin > options.type1_margin;
  const bool t2_ok = cert.type2_margin >= -options.tolerance;
  cert.marginal = t2_ok && cert.type2_margin < -1e-12;
  if (center_ok && t1_ok && t2_ok) {
    cert.verdict = Verdict::certified;
    return cert;
  }
  if (!t1_ok)
    cert.reason = "link of the vertex has girth " + std::to_string(cert.type1_girth) + ", not above 2π";
  else if (!t2_ok)
    cert.reason = "link of an interior point has girth below 2π by " + std::to_string(-cert.type2_margin);
  else
    cert.reason = "a disc centre has link shorter than 2π";
  return cert;
}

}  // namespace sccat
