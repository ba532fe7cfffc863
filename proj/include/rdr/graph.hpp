#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rdr {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// neighbor lists are sorted and symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws InvalidGraphError on a
  /// self-loop, an out-of-range endpoint or a repeated edge.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[check(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[check(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Copy of this graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t check(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

bool is_connected(const Graph& g);

/// Breadth-first distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Row-major n*n table of shortest-path lengths. Throws NotConnectedError.
std::vector<int> distance_matrix(const Graph& g);

/// Throws NotConnectedError when v is unreachable from u.
int shortest_path_distance(const Graph& g, Vertex u, Vertex v);

bool is_tree(const Graph& g);

/// Vertex count of the component containing `start` after deleting edge {a, b}.
int component_size_without_edge(const Graph& g, Vertex start, Edge removed);

/// True when deleting {u, v} disconnects the graph. The edge must exist.
bool is_cut_edge(const Graph& g, Edge e);

/// Connected components of g - x; the component containing each vertex is
/// reported by index, with x itself mapped to -1.
std::vector<int> components_without_vertex(const Graph& g, Vertex x);

/// A connected graph with exactly one cycle, split into the cycle and the
/// rooted trees hanging off its vertices.
class UnicyclicDecomposition {
 public:
  /// Cycle vertices v_1..v_g in traversal order (0-based positions here).
  const std::vector<Vertex>& cycle() const { return cycle_; }
  int cycle_length() const { return static_cast<int>(cycle_.size()); }
  int order() const { return static_cast<int>(anchor_.size()); }

  /// Nearest cycle vertex.
  Vertex anchor(Vertex v) const { return anchor_.at(v); }
  /// Tree-path length from v to its anchor.
  int tree_depth(Vertex v) const { return depth_.at(v); }
  /// Parent towards the anchor; -1 for cycle vertices.
  Vertex parent(Vertex v) const { return parent_.at(v); }
  /// Position of a cycle vertex in cycle(), or -1 for tree vertices.
  int cycle_position(Vertex v) const { return position_.at(v); }
  bool on_cycle(Vertex v) const { return position_.at(v) >= 0; }

  /// Vertices hanging from cycle vertex c, c included, in BFS order.
  const std::vector<Vertex>& tree_of(Vertex c) const;

  /// Length of the tree path between two vertices that share an anchor.
  int tree_distance(Vertex u, Vertex v) const;

 private:
  friend UnicyclicDecomposition classify_unicyclic(const Graph& g);

  std::vector<Vertex> cycle_;
  std::vector<Vertex> anchor_;
  std::vector<int> depth_;
  std::vector<Vertex> parent_;
  std::vector<int> position_;
  std::vector<std::vector<Vertex>> trees_;  // indexed by cycle position
};

/// Decomposes a unicyclic graph. The cycle is oriented canonically: it starts
/// at the rotation/reflection whose sequence of hanging-tree codes is
/// lexicographically smallest, ties going to the smallest vertex ids.
/// Throws NotConnectedError or NotUnicyclicError.
UnicyclicDecomposition classify_unicyclic(const Graph& g);

bool is_unicyclic(const Graph& g);

/// Human-readable "u-v u-v ..." listing, mainly for diagnostics.
std::string describe(const Graph& g);

}  // namespace rdr
