#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace sccat {

struct LinkEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0;  // radians, > 0
  std::string label;
};

/// Finite metric multigraph; self-loops and parallel edges allowed.
class LinkGraph {
 public:
  std::size_t add_vertex(std::string label);
  std::size_t add_edge(std::size_t u, std::size_t v, double weight, std::string label = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<LinkEdge>& edges() const { return edges_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }

  std::vector<std::size_t> degrees() const;
  double total_weight() const;

  /// Splices out every vertex of degree 2 that is not the base of a
  /// self-loop, concatenating the two incident edges. Isolated vertices and
  /// lone circles are kept as they are.
  LinkGraph smoothed() const;

 private:
  std::vector<std::string> labels_;
  std::vector<LinkEdge> edges_;
};

struct Cycle {
  double length = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> vertices;  // closed walk, first vertex not repeated
  std::vector<std::size_t> edges;

  bool empty() const { return edges.empty(); }
};

/// Shortest essential loop: for every edge (u, v, w) the shortest u–v path
/// avoiding it, plus w. Infinite length for forests.
Cycle girth(const LinkGraph& g);

}  // namespace sccat
