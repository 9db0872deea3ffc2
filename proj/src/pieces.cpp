#include "sccat/pieces.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sccat {

namespace {

/// Start of a reading in the symmetrized closure: relator, start vertex and
/// direction. A forward reading from `start` covers edges start, start+1, ...;
/// a backward one covers start, start-1, ... and inverts every letter.
struct Position {
  std::size_t relator;
  std::ptrdiff_t start;
  bool backward;
};

class PositionTable {
 public:
  explicit PositionTable(const Presentation& p) : p_(p) {
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      const auto n = static_cast<std::ptrdiff_t>(p.relators()[i].size());
      for (bool back : {false, true})
        for (std::ptrdiff_t s = 0; s < n; ++s) positions_.push_back({i, s, back});
    }
  }

  std::size_t size() const { return positions_.size(); }
  const Position& operator[](std::size_t i) const { return positions_[i]; }

  std::size_t cap(const Position& pos) const { return p_.relators()[pos.relator].size() - 1; }

  Letter letter(const Position& pos, std::ptrdiff_t t) const {
    const CyclicWord& r = p_.relators()[pos.relator];
    return pos.backward ? r.at(pos.start - t).inverse() : r.at(pos.start + t);
  }

  /// Letter immediately before the reading.
  Letter before(const Position& pos) const { return letter(pos, -1); }

  Occurrence occurrence(const Position& pos, std::size_t len) const {
    const auto n = static_cast<std::ptrdiff_t>(p_.relators()[pos.relator].size());
    std::ptrdiff_t off = pos.backward ? pos.start - static_cast<std::ptrdiff_t>(len) + 1 : pos.start;
    off = ((off % n) + n) % n;
    return {pos.relator, static_cast<std::size_t>(off), pos.backward, len};
  }

  Word prefix(const Position& pos, std::size_t len) const {
    Word w;
    w.reserve(len);
    for (std::size_t t = 0; t < len; ++t) w.push_back(letter(pos, static_cast<std::ptrdiff_t>(t)));
    return w;
  }

  /// Readings truncated at their caps, sorted lexicographically, with the
  /// common-prefix length of each adjacent pair.
  void sort_with_lcp(std::vector<std::size_t>& order, std::vector<std::size_t>& lcp) const {
    order.resize(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return compare(positions_[a], positions_[b]) < 0;
    });
    lcp.assign(size(), 0);
    for (std::size_t i = 1; i < order.size(); ++i)
      lcp[i] = common_prefix(positions_[order[i - 1]], positions_[order[i]]);
  }

 private:
  int compare(const Position& a, const Position& b) const {
    const std::size_t la = cap(a), lb = cap(b);
    const std::size_t m = std::min(la, lb);
    for (std::size_t t = 0; t < m; ++t) {
      Letter x = letter(a, static_cast<std::ptrdiff_t>(t));
      Letter y = letter(b, static_cast<std::ptrdiff_t>(t));
      if (x < y) return -1;
      if (y < x) return 1;
    }
    if (la != lb) return la < lb ? -1 : 1;
    if (a.relator != b.relator) return a.relator < b.relator ? -1 : 1;
    if (a.backward != b.backward) return a.backward ? 1 : -1;
    if (a.start != b.start) return a.start < b.start ? -1 : 1;
    return 0;
  }

  std::size_t common_prefix(const Position& a, const Position& b) const {
    const std::size_t m = std::min(cap(a), cap(b));
    std::size_t t = 0;
    while (t < m && letter(a, static_cast<std::ptrdiff_t>(t)) == letter(b, static_cast<std::ptrdiff_t>(t)))
      ++t;
    return t;
  }

  const Presentation& p_;
  std::vector<Position> positions_;
};

}  // namespace

Word read_occurrence(const Presentation& p, const Occurrence& occ) {
  const CyclicWord& r = p.relators().at(occ.relator);
  Word w;
  const auto off = static_cast<std::ptrdiff_t>(occ.offset);
  const auto len = static_cast<std::ptrdiff_t>(occ.length);
  for (std::ptrdiff_t t = 0; t < len; ++t)
    w.push_back(occ.inverted ? r.at(off + len - 1 - t).inverse() : r.at(off + t));
  return w;
}

std::vector<Piece> enumerate_pieces(const Presentation& p) {
  PositionTable table(p);
  std::vector<std::size_t> order, lcp;
  table.sort_with_lcp(order, lcp);

  // Maximal pairs keyed by the reported (canonical) word.
  std::map<Word, std::set<std::pair<Occurrence, Occurrence>>> pairs;
  std::map<Word, std::size_t> first_rank;  // a sorted rank whose reading starts with the word

  for (std::size_t i = 0; i < order.size(); ++i) {
    const Position& a = table[order[i]];
    std::size_t run = table.cap(a);
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      run = std::min(run, lcp[j]);
      if (run == 0) break;
      const Position& b = table[order[j]];
      const std::size_t len = run;  // already bounded by both caps
      const bool extends_left = len + 1 <= std::min(table.cap(a), table.cap(b)) &&
                                table.before(a) == table.before(b);
      if (extends_left) continue;
      // A pair extending neither way at `len` must also stop on the right.
      Word w = table.prefix(a, len);
      if (!(w < inverse(w))) continue;  // reported through the mirrored reading
      auto oa = table.occurrence(a, len);
      auto ob = table.occurrence(b, len);
      if (ob < oa) std::swap(oa, ob);
      pairs[w].insert({oa, ob});
      first_rank.emplace(w, i);
    }
  }

  std::vector<Piece> out;
  for (auto& [w, pair_set] : pairs) {
    Piece piece;
    piece.word = w;
    // Every reading with this prefix sits in one contiguous block of the order.
    const std::size_t len = w.size();
    std::size_t lo = first_rank[w];
    while (lo > 0 && lcp[lo] >= len) --lo;
    std::size_t hi = first_rank[w];
    while (hi + 1 < order.size() && lcp[hi + 1] >= len) ++hi;
    for (std::size_t k = lo; k <= hi; ++k) piece.occurrences.push_back(table.occurrence(table[order[k]], len));
    std::sort(piece.occurrences.begin(), piece.occurrences.end());
    auto index_of = [&](const Occurrence& o) {
      return static_cast<std::size_t>(
          std::lower_bound(piece.occurrences.begin(), piece.occurrences.end(), o) -
          piece.occurrences.begin());
    };
    for (const auto& [oa, ob] : pair_set) piece.maximal_pairs.emplace_back(index_of(oa), index_of(ob));
    out.push_back(std::move(piece));
  }
  return out;
}

SmallCancellationReport check_conditions(const Presentation& p) {
  SmallCancellationReport rep;
  const std::size_t nrel = p.relators().size();
  rep.g = p.min_relator_length();
  rep.per_relator_max_piece.assign(nrel, 0);
  rep.proper_power_flags.assign(nrel, false);

  PositionTable table(p);
  std::vector<std::size_t> order, lcp;
  table.sort_with_lcp(order, lcp);
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t best = lcp[i];
    if (i + 1 < order.size()) best = std::max(best, lcp[i + 1]);
    auto& slot = rep.per_relator_max_piece[table[order[i]].relator];
    slot = std::max(slot, best);
  }

  rep.passes_c16 = true;
  bool any_power = false;
  for (std::size_t i = 0; i < nrel; ++i) {
    const std::size_t len = p.relators()[i].size();
    const std::size_t piece = rep.per_relator_max_piece[i];
    rep.max_piece_length = std::max(rep.max_piece_length, piece);
    rep.per_relator_max_ratio.push_back({piece, len});
    if (6 * piece >= len) rep.passes_c16 = false;
    rep.proper_power_flags[i] = proper_power_root(p.relators()[i]).exponent > 1;
    any_power = any_power || rep.proper_power_flags[i];
  }
  rep.short_relators = rep.g < 7;
  rep.passes_uniform = nrel > 0 && 6 * rep.max_piece_length < rep.g && !any_power;
  return rep;
}

std::string refusal_reason(const SmallCancellationReport& r) {
  if (r.passes_uniform) return {};
  for (std::size_t i = 0; i < r.proper_power_flags.size(); ++i)
    if (r.proper_power_flags[i]) return "proper power (relator " + std::to_string(i + 1) + ")";
  if (r.g == 0) return "no relators";
  return "piece of length " + std::to_string(r.max_piece_length) + " is not shorter than g/6 = " +
         std::to_string(r.g) + "/6";
}

}  // namespace sccat
