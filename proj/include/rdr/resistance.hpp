#pragma once

#include <string>
#include <vector>

#include "rdr/graph.hpp"
#include "rdr/rational.hpp"

namespace rdr {

/// Effective resistance between positions i and j (1-based) of the cycle C_g
/// with unit resistors: |j-i| (g - |j-i|) / g. Throws std::out_of_range.
Rational cycle_resistance(int g, int i, int j);

/// Exact effective resistance in a unicyclic graph. Same-anchor pairs use the
/// tree path length; otherwise the tree legs and the cycle arc add at the
/// two anchors, which are cut vertices.
Rational resistance_unicyclic(const UnicyclicDecomposition& d, Vertex u, Vertex v);

/// Symmetric all-pairs resistance table, either exact or floating point.
class ResistanceMatrix {
 public:
  enum class Mode { kExact, kNumeric };

  static ResistanceMatrix exact(int n, std::vector<Rational> entries);
  static ResistanceMatrix numeric(int n, std::vector<double> entries);

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::kExact; }
  int order() const { return n_; }

  /// Exact entry; throws std::logic_error in numeric mode.
  const Rational& exact_at(Vertex u, Vertex v) const;
  /// Entry as a double in either mode.
  double at(Vertex u, Vertex v) const;

 private:
  ResistanceMatrix() = default;
  std::size_t index(Vertex u, Vertex v) const;

  Mode mode_ = Mode::kExact;
  int n_ = 0;
  std::vector<Rational> exact_;
  std::vector<double> numeric_;
};

/// Exact matrix for trees (resistance = distance) and unicyclic graphs.
/// Throws NotConnectedError, or UnsupportedGraphError when m > n.
ResistanceMatrix resistance_all_pairs_exact(const Graph& g);

inline constexpr int kNumericMaxOrder = 2000;

/// For every vertex v: ground v, factor the reduced Laplacian and read
/// r(u, v) off the diagonal of its inverse. Both r(u, v) and r(v, u) are
/// computed independently and must agree. Requires a connected graph with
/// 2 <= n <= kNumericMaxOrder.
ResistanceMatrix resistance_all_pairs_numeric(const Graph& g);

/// Exact when the graph is a tree or unicyclic, numeric otherwise.
ResistanceMatrix resistance_all_pairs(const Graph& g);

/// "p/q" for exact values, 12 significant digits for floating point.
std::string format_numeric(double value);

}  // namespace rdr
