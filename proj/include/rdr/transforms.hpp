#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdr/graph.hpp"
#include "rdr/rational.hpp"

namespace rdr {

enum class TransformKind { kEdgeLift, kCycleLift, kCycleShrink };

std::string_view transform_name(TransformKind kind);

/// One applied rewrite together with the exact RDR on both sides.
struct TransformOutcome {
  Graph before;
  Graph after;
  TransformKind kind = TransformKind::kEdgeLift;
  /// "edge u-v", "vertex c" or "cycle p", in the labels of `before`.
  std::string site;
  Rational rdr_before;
  Rational rdr_after;

  bool increased() const { return rdr_after > rdr_before; }

  /// {kind, site, rdr_before, rdr_after, before_code, after_code, delta_positive}
  std::string to_json() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

/// Edge-lifting at the cut edge {u0, v0}: the endpoints are merged into u0
/// and v0 is reused as a fresh pendant on the merged vertex. Order and size
/// are preserved.
///
/// Throws RewritePreconditionError when {u0, v0} is not an edge or not a cut
/// edge, IdentityRewriteError when one side of the cut has a single vertex,
/// and UnsupportedGraphError unless g is a tree or unicyclic (exact RDR).
TransformOutcome edge_lift(const Graph& g, Edge e);

/// Cycle-lifting: every pendant hanging on the cycle is moved onto `target`.
/// Requires a unicyclic graph whose hanging trees are all stars centred on
/// their cycle vertex, with pendants on at least two cycle vertices.
TransformOutcome cycle_lift(const Graph& g, Vertex target);

/// Cycle-lifting onto the cycle vertex carrying the most pendants, ties going
/// to the earliest decomposition position.
TransformOutcome cycle_lift(const Graph& g);

/// Cycle-shrinking S_n^p -> S_n^3 for p >= 4. The result is built directly
/// as the triangle {v1, v2, v_p} with every other vertex pendant on v1, and
/// cross-checked against the edge surgery that deletes v2v3..v_{p-1}v_p and
/// adds v2v_p, v3v1..v_{p-1}v1.
TransformOutcome cycle_shrink(const Graph& g);

/// The edge surgery form of cycle-shrinking, exposed for cross-checks.
Graph cycle_shrink_by_surgery(const Graph& g);

/// Edge-lifts (deepest non-leaf tree vertex first, lowest id on ties) until
/// every hanging tree is a star on the cycle, then one cycle-lift, then one
/// cycle-shrink. Throws NotUnicyclicError / NotConnectedError.
std::vector<TransformOutcome> reduce_to_extremal(const Graph& g);

/// Pendant vertices attached to each cycle position; `all_stars` is false
/// when some tree vertex sits deeper than one edge from the cycle.
struct StarShape {
  bool all_stars = false;
  std::vector<std::vector<Vertex>> pendants;  // by cycle position
};
StarShape star_shape(const UnicyclicDecomposition& d, const Graph& g);

}  // namespace rdr
