#include "sccat/metric_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sccat {

std::size_t LinkGraph::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return labels_.size() - 1;
}

std::size_t LinkGraph::add_edge(std::size_t u, std::size_t v, double weight, std::string label) {
  if (u >= labels_.size() || v >= labels_.size()) throw std::out_of_range("LinkGraph::add_edge: bad vertex");
  if (!(weight > 0)) throw std::invalid_argument("LinkGraph::add_edge: weight must be positive");
  edges_.push_back({u, v, weight, std::move(label)});
  return edges_.size() - 1;
}

std::vector<std::size_t> LinkGraph::degrees() const {
  std::vector<std::size_t> deg(labels_.size(), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

double LinkGraph::total_weight() const {
  double w = 0;
  for (const auto& e : edges_) w += e.weight;
  return w;
}

LinkGraph LinkGraph::smoothed() const {
  std::vector<LinkEdge> edges = edges_;
  std::vector<bool> alive(edges.size(), true);
  std::vector<bool> removed(labels_.size(), false);

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<std::size_t>> incident(labels_.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i]) continue;
      incident[edges[i].u].push_back(i);
      if (edges[i].v != edges[i].u) incident[edges[i].v].push_back(i);
    }
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      if (removed[v] || incident[v].size() != 2) continue;
      const std::size_t a = incident[v][0], b = incident[v][1];
      if (edges[a].u == edges[a].v || edges[b].u == edges[b].v) continue;
      const std::size_t x = edges[a].u == v ? edges[a].v : edges[a].u;
      const std::size_t y = edges[b].u == v ? edges[b].v : edges[b].u;
      // x == y is allowed: a bigon through v becomes a self-loop at x.
      LinkEdge merged{x, y, edges[a].weight + edges[b].weight,
                      edges[a].label.empty() || edges[b].label.empty() ? edges[a].label + edges[b].label
                                                                       : edges[a].label + "+" + edges[b].label};
      alive[a] = alive[b] = false;
      edges.push_back(std::move(merged));
      alive.push_back(true);
      removed[v] = true;
      changed = true;
      break;
    }
  }

  LinkGraph out;
  std::vector<std::size_t> remap(labels_.size(), 0);
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (!removed[v]) remap[v] = out.add_vertex(labels_[v]);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) out.add_edge(remap[edges[i].u], remap[edges[i].v], edges[i].weight, edges[i].label);
  return out;
}

Cycle girth(const LinkGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    incident[e.u].push_back(i);
    if (e.v != e.u) incident[e.v].push_back(i);
  }

  Cycle best;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    if (e.u == e.v) {
      if (e.weight < best.length) best = Cycle{e.weight, {e.u}, {i}};
      continue;
    }
    if (e.weight >= best.length) continue;
    // Dijkstra from e.u to e.v without edge i, pruned at the current best.
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> via(n, static_cast<std::size_t>(-1));
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[e.u] = 0;
    pq.push({0, e.u});
    const double budget = best.length - e.weight;
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d > dist[x] || d >= budget) continue;
      if (x == e.v) break;
      for (std::size_t j : incident[x]) {
        if (j == i) continue;
        const auto& f = g.edges()[j];
        const std::size_t y = f.u == x ? f.v : f.u;
        if (y == x) continue;
        const double nd = d + f.weight;
        if (nd < dist[y]) {
          dist[y] = nd;
          via[y] = j;
          pq.push({nd, y});
        }
      }
    }
    if (dist[e.v] + e.weight < best.length) {
      Cycle c;
      c.length = dist[e.v] + e.weight;
      std::size_t x = e.v;
      std::vector<std::size_t> verts{x}, edges;
      while (x != e.u) {
        const std::size_t j = via[x];
        edges.push_back(j);
        const auto& f = g.edges()[j];
        x = f.u == x ? f.v : f.u;
        verts.push_back(x);
      }
      std::reverse(verts.begin(), verts.end());
      std::reverse(edges.begin(), edges.end());
      edges.push_back(i);
      c.vertices = std::move(verts);
      c.edges = std::move(edges);
      best = std::move(c);
    }
  }
  return best;
}

}  // namespace sccat
