#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdr/transforms.hpp"

namespace rdr {

struct Counterexample {
  std::string graph6;
  TransformKind kind = TransformKind::kEdgeLift;
  std::string site;
  std::string reason;
  Rational rdr_before;
  Rational rdr_after;
};

struct VerificationReport {
  int max_n = 0;
  std::int64_t graphs = 0;
  std::int64_t edge_lifts = 0;
  std::int64_t cycle_lifts = 0;
  std::int64_t cycle_shrinks = 0;
  std::vector<Counterexample> counterexamples;

  std::int64_t checks() const { return edge_lifts + cycle_lifts + cycle_shrinks; }
  bool passed() const { return counterexamples.empty(); }
  std::string to_json() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

/// Every non-identity rewrite applicable to one graph: edge-lifts at every
/// cut edge with two non-trivial sides, cycle-lifts onto every cycle vertex,
/// and the cycle-shrink when the graph is S_n^p with p >= 4.
std::vector<TransformOutcome> applicable_rewrites(const Graph& g);

/// Applies every rewrite to every unicyclic graph of order 3..max_n and
/// records each one that fails to raise RDR strictly or breaks the
/// order/size/unicyclic invariants.
VerificationReport verify_transforms(int max_n, int jobs = 1);

}  // namespace rdr
