#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rdr/graph.hpp"
#include "rdr/rational.hpp"
#include "rdr/resistance.hpp"

namespace rdr {

/// A resistance-based index value: exact for trees and unicyclic graphs,
/// floating point otherwise.
class IndexValue {
 public:
  IndexValue(Rational exact) : exact_(std::move(exact)), approx_(exact_->to_double()) {}  // NOLINT
  explicit IndexValue(double approx) : approx_(approx) {}

  bool is_exact() const { return exact_.has_value(); }
  /// Throws std::logic_error when the value is numeric.
  const Rational& exact() const;
  double to_double() const { return approx_; }
  /// "p/q" when exact, 12 significant digits otherwise.
  std::string to_string() const;

 private:
  std::optional<Rational> exact_;
  double approx_ = 0.0;
};

// Every pair index below sums over unordered pairs {u, v}, u != v, with no
// extra factor 1/2; graphs with one vertex give 0. Distance-based indices
// throw NotConnectedError on disconnected input.

std::int64_t wiener(const Graph& g);
Rational harary(const Graph& g);
IndexValue kirchhoff(const Graph& g);
IndexValue resistance_harary(const Graph& g);
std::int64_t zagreb_m1(const Graph& g);
std::int64_t zagreb_m2(const Graph& g);
std::int64_t degree_distance(const Graph& g);
Rational reciprocal_degree_distance(const Graph& g);
IndexValue rdr(const Graph& g);

/// RDR from a precomputed resistance matrix.
IndexValue rdr(const Graph& g, const ResistanceMatrix& r);

/// Exact RDR; throws UnsupportedGraphError outside trees and unicyclic graphs.
Rational rdr_exact(const Graph& g);

/// M1 written as the edge sum of (d(u) + d(v)); equal to zagreb_m1.
std::int64_t zagreb_m1_edge_sum(const Graph& g);

struct IndexReport {
  std::int64_t wiener = 0;
  Rational harary;
  IndexValue kirchhoff{Rational(0)};
  IndexValue resistance_harary{Rational(0)};
  std::int64_t zagreb_m1 = 0;
  std::int64_t zagreb_m2 = 0;
  std::int64_t degree_distance = 0;
  Rational reciprocal_degree_distance;
  IndexValue rdr{Rational(0)};

  /// JSON object; exact values as "p/q" strings, resistance-based entries as
  /// {"value": ..., "exact": bool}.
  std::string to_json() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

/// All nine indices from one distance table and one resistance table.
/// Throws NotConnectedError.
IndexReport index_report(const Graph& g);

enum class IndexKind { kRdr, kWiener, kHarary, kKirchhoff, kResistanceHarary, kM1, kM2, kDegreeDistance, kRdd };

/// Parses the selector names rdr|wiener|harary|kirchhoff|rh|m1|m2|dd|rdd.
std::optional<IndexKind> parse_index_kind(std::string_view name);
std::string_view index_name(IndexKind kind);

/// Exact value of one index; throws UnsupportedGraphError when a
/// resistance-based index cannot be computed exactly.
Rational exact_index(const Graph& g, IndexKind kind);

}  // namespace rdr
