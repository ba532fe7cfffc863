#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rdr/canonical.hpp"
#include "rdr/graph.hpp"
#include "rdr/indices.hpp"
#include "rdr/rational.hpp"

namespace rdr {

/// One representative per isomorphism class of rooted trees on k vertices,
/// as canonical level sequences in decreasing lexicographic order
/// (Beyer-Hedetniemi successor rule). Throws std::invalid_argument for k < 1.
std::vector<RootedTreeCode> enumerate_rooted_trees(int k);

/// Graph on code.size() vertices; vertex i is the i-th node in preorder and
/// vertex 0 the root.
Graph tree_from_levels(const RootedTreeCode& code);

/// Streams one representative of every isomorphism class of unicyclic graphs
/// on n vertices: for each cycle length g = 3..n, every assignment of rooted
/// trees to cycle positions whose id sequence is minimal under rotation and
/// reflection. Cycle vertices are 0..g-1 in cycle order. Throws
/// std::invalid_argument for n < 3.
void for_each_unicyclic(int n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_unicyclic(int n);

/// C_p with n - p pendants on vertex 0. Throws std::invalid_argument unless
/// 3 <= p <= n.
Graph make_S(int n, int p);

struct SweepResult {
  int n = 0;
  std::int64_t graph_count = 0;
  IndexKind index = IndexKind::kRdr;
  Rational max_value;
  std::vector<CanonicalCode> argmax;  // sorted
  bool is_unique = false;
  bool matches_theorem = false;  // unique argmax isomorphic to S_n^3

  std::string to_json() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

/// Evaluates `index` exactly on every unicyclic graph of order n, keeping
/// only the running maximum. `jobs` bounds the worker count.
SweepResult sweep(int n, IndexKind index = IndexKind::kRdr, int jobs = 1);

}  // namespace rdr
