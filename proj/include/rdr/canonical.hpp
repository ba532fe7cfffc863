#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdr/graph.hpp"

namespace rdr {

/// Canonical level sequence of a rooted tree: preorder depths with the
/// children of every node ordered so the sequence is lexicographically
/// largest. Two rooted trees share a code iff they are isomorphic.
struct RootedTreeCode {
  std::vector<int> levels;

  int size() const { return static_cast<int>(levels.size()); }
  friend bool operator==(const RootedTreeCode&, const RootedTreeCode&) = default;
  friend auto operator<=>(const RootedTreeCode&, const RootedTreeCode&) = default;
};

/// Code of the tree reachable from `root` without entering any vertex for
/// which `blocked[v]` is true. The reachable region must be acyclic.
/// An empty `blocked` vector blocks nothing.
RootedTreeCode rooted_tree_code(const Graph& g, Vertex root, const std::vector<bool>& blocked = {});

/// Isomorphism key. Equal keys iff isomorphic graphs.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Trees use the centre-rooted level sequence, unicyclic graphs the
/// dihedral-minimal sequence of hanging-tree codes prefixed by the cycle
/// length, anything else falls back to brute_force_canonical_code.
CanonicalCode canonical_code(const Graph& g);

/// Certified canonical labeling by exhaustive search over degree-respecting
/// permutations. Throws UnsupportedGraphError above kBruteForceMaxOrder.
CanonicalCode brute_force_canonical_code(const Graph& g);
inline constexpr int kBruteForceMaxOrder = 10;

bool isomorphic(const Graph& a, const Graph& b);

/// A way of reading a cyclic sequence: starting index and direction.
struct DihedralView {
  int start = 0;
  bool reversed = false;

  /// Index into the original sequence of the k-th element of the view.
  int at(int k, int length) const {
    const int step = reversed ? -k : k;
    return ((start + step) % length + length) % length;
  }
};

/// All 2g views of a cyclic sequence of length g (g ≥ 1), identity first.
std::vector<DihedralView> dihedral_views(int length);

/// Compares two views of the same sequence lexicographically.
template <typename T>
std::weak_ordering compare_views(std::span<const T> seq, DihedralView a, DihedralView b) {
  const int g = static_cast<int>(seq.size());
  for (int k = 0; k < g; ++k) {
    const auto& x = seq[a.at(k, g)];
    const auto& y = seq[b.at(k, g)];
    if (x < y) return std::weak_ordering::less;
    if (y < x) return std::weak_ordering::greater;
  }
  return std::weak_ordering::equivalent;
}

/// True iff the identity view is lexicographically no larger than every
/// rotation and reflection.
template <typename T>
bool is_dihedral_minimal(std::span<const T> seq) {
  const DihedralView identity;
  for (const auto& view : dihedral_views(static_cast<int>(seq.size()))) {
    if (compare_views(seq, view, identity) < 0) return false;
  }
  return true;
}

}  // namespace rdr
