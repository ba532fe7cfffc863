#include "rdr/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "rdr/canonical.hpp"
#include "rdr/errors.hpp"

namespace rdr {

Graph::Graph(int order, std::span<const Edge> edges) {
  if (order < 0) throw InvalidGraphError("negative vertex count");
  adjacency_.resize(order);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw InvalidGraphError("edge endpoint out of range: " + std::to_string(u) + "-" +
                              std::to_string(v));
    }
    if (u == v) throw InvalidGraphError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw InvalidGraphError("parallel edge");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

std::size_t Graph::check(Vertex v) const {
  if (v < 0 || v >= order()) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
  return static_cast<std::size_t>(v);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nbrs = neighbors(u);
  check(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw std::invalid_argument("permutation size mismatch");
  auto es = edges();
  for (auto& [u, v] : es) {
    u = perm[u];
    v = perm[v];
  }
  return Graph(order(), es);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> queue;
  dist.at(source) = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (Vertex u = 0; u < n; ++u) {
    const auto row = bfs_distances(g, u);
    if (std::any_of(row.begin(), row.end(), [](int d) { return d < 0; })) throw NotConnectedError();
    std::copy(row.begin(), row.end(), table.begin() + static_cast<std::ptrdiff_t>(u) * n);
  }
  return table;
}

int shortest_path_distance(const Graph& g, Vertex u, Vertex v) {
  g.degree(v);  // range check
  const int d = bfs_distances(g, u)[v];
  if (d < 0) throw NotConnectedError();
  return d;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

bool is_unicyclic(const Graph& g) { return g.order() >= 3 && g.size() == g.order() && is_connected(g); }

int component_size_without_edge(const Graph& g, Vertex start, Edge removed) {
  const auto [a, b] = removed;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{start};
  seen.at(start) = true;
  int count = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex w : g.neighbors(u)) {
      if ((u == a && w == b) || (u == b && w == a)) continue;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count;
}

bool is_cut_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("not an edge");
  return component_size_without_edge(g, e.first, e) + component_size_without_edge(g, e.second, e) ==
         g.order();
}

std::vector<int> components_without_vertex(const Graph& g, Vertex x) {
  std::vector<int> comp(g.order(), -2);
  comp.at(x) = -1;
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -2) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == -2) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

const std::vector<Vertex>& UnicyclicDecomposition::tree_of(Vertex c) const {
  const int pos = cycle_position(c);
  if (pos < 0) throw std::invalid_argument("vertex " + std::to_string(c) + " is not on the cycle");
  return trees_[pos];
}

int UnicyclicDecomposition::tree_distance(Vertex u, Vertex v) const {
  if (anchor(u) != anchor(v)) throw std::invalid_argument("vertices hang from different cycle vertices");
  int du = depth_[u];
  int dv = depth_[v];
  int steps = 0;
  while (du > dv) {
    u = parent_[u];
    --du;
    ++steps;
  }
  while (dv > du) {
    v = parent_[v];
    --dv;
    ++steps;
  }
  while (u != v) {
    u = parent_[u];
    v = parent_[v];
    steps += 2;
  }
  return steps;
}

UnicyclicDecomposition classify_unicyclic(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw NotConnectedError();
  if (g.size() != n) {
    throw NotUnicyclicError("edge count " + std::to_string(g.size()) + " differs from order " +
                            std::to_string(n));
  }

  // Peel leaves until only the 2-core (the cycle) is left.
  std::vector<int> residual(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    residual[v] = g.degree(v);
    if (residual[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --residual[w] == 1) leaves.push_back(w);
    }
  }

  // Walk the core in vertex order from its smallest vertex.
  std::vector<Vertex> walk;
  const auto first = static_cast<Vertex>(std::find(removed.begin(), removed.end(), false) - removed.begin());
  for (Vertex prev = -1, cur = first;;) {
    walk.push_back(cur);
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
    if (cur == first) break;
  }
  const int length = static_cast<int>(walk.size());

  std::vector<bool> on_cycle(n, false);
  for (Vertex v : walk) on_cycle[v] = true;

  std::vector<RootedTreeCode> codes;
  codes.reserve(length);
  for (Vertex v : walk) {
    std::vector<bool> blocked = on_cycle;
    blocked[v] = false;
    codes.push_back(rooted_tree_code(g, v, blocked));
  }

  // Canonical orientation: minimal code sequence, then smallest vertex ids.
  const std::span<const RootedTreeCode> code_view(codes);
  const std::span<const Vertex> walk_view(walk);
  auto views = dihedral_views(length);
  const auto best = *std::min_element(views.begin(), views.end(), [&](DihedralView a, DihedralView b) {
    const auto c = compare_views(code_view, a, b);
    if (c != 0) return c < 0;
    return compare_views(walk_view, a, b) < 0;
  });

  UnicyclicDecomposition d;
  d.cycle_.resize(length);
  for (int k = 0; k < length; ++k) d.cycle_[k] = walk[best.at(k, length)];
  d.anchor_.assign(n, -1);
  d.depth_.assign(n, 0);
  d.parent_.assign(n, -1);
  d.position_.assign(n, -1);
  d.trees_.resize(length);
  for (int k = 0; k < length; ++k) {
    const Vertex c = d.cycle_[k];
    d.position_[c] = k;
    d.anchor_[c] = c;
    std::queue<Vertex> queue;
    queue.push(c);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      d.trees_[k].push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (on_cycle[w] || w == d.parent_[u]) continue;
        d.anchor_[w] = c;
        d.parent_[w] = u;
        d.depth_[w] = d.depth_[u] + 1;
        queue.push(w);
      }
    }
  }
  return d;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " {";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : " ") << u << '-' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace rdr
