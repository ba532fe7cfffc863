#include "rdr/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "rdr/errors.hpp"

namespace rdr {

namespace {

constexpr std::uint8_t kTreeTag = 'T';
constexpr std::uint8_t kUnicyclicTag = 'U';
constexpr std::uint8_t kGeneralTag = 'G';

std::vector<int> subtree_levels(const Graph& g, Vertex v, Vertex parent, int depth,
                                const std::vector<bool>& blocked) {
  std::vector<std::vector<int>> children;
  for (Vertex w : g.neighbors(v)) {
    if (w == parent || (!blocked.empty() && blocked[w])) continue;
    children.push_back(subtree_levels(g, w, v, depth + 1, blocked));
  }
  std::sort(children.begin(), children.end(), std::greater<>());
  std::vector<int> out{depth};
  for (const auto& c : children) out.insert(out.end(), c.begin(), c.end());
  return out;
}

void append_levels(std::vector<std::uint8_t>& bytes, const RootedTreeCode& code) {
  for (int level : code.levels) {
    if (level > 255) throw UnsupportedGraphError("tree too deep for canonical code");
    bytes.push_back(static_cast<std::uint8_t>(level));
  }
}

std::vector<Vertex> tree_centers(const Graph& g) {
  const int n = g.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> residual(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    residual[v] = g.degree(v);
    if (residual[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : g.neighbors(v)) {
        if (--residual[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonicalCode tree_code(const Graph& g) {
  RootedTreeCode best;
  for (Vertex c : tree_centers(g)) best = std::max(best, rooted_tree_code(g, c));
  CanonicalCode code;
  code.bytes.push_back(kTreeTag);
  append_levels(code.bytes, best);
  return code;
}

CanonicalCode unicyclic_code(const Graph& g) {
  const auto d = classify_unicyclic(g);
  if (d.cycle_length() > 255) throw UnsupportedGraphError("cycle too long for canonical code");
  std::vector<bool> on_cycle(g.order(), false);
  for (Vertex v : d.cycle()) on_cycle[v] = true;
  CanonicalCode code;
  code.bytes.push_back(kUnicyclicTag);
  code.bytes.push_back(static_cast<std::uint8_t>(d.cycle_length()));
  // classify_unicyclic already orients the cycle at its dihedral minimum.
  for (Vertex v : d.cycle()) {
    std::vector<bool> blocked = on_cycle;
    blocked[v] = false;
    append_levels(code.bytes, rooted_tree_code(g, v, blocked));
  }
  return code;
}

}  // namespace

RootedTreeCode rooted_tree_code(const Graph& g, Vertex root, const std::vector<bool>& blocked) {
  g.degree(root);  // range check
  return RootedTreeCode{subtree_levels(g, root, -1, 0, blocked)};
}

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

std::vector<DihedralView> dihedral_views(int length) {
  std::vector<DihedralView> views;
  views.reserve(2 * static_cast<std::size_t>(length));
  for (int s = 0; s < length; ++s) views.push_back({s, false});
  for (int s = 0; s < length; ++s) views.push_back({s, true});
  return views;
}

CanonicalCode brute_force_canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw UnsupportedGraphError("brute-force canonical labeling is capped at " +
                                std::to_string(kBruteForceMaxOrder) + " vertices");
  }
  // New labels are handed out in order of increasing degree, so label k must
  // go to a vertex whose degree matches the k-th smallest. Adjacency bits are
  // read column by column (all i < j for j = 1, 2, ...), which fixes a prefix
  // of the bitstring as soon as labels 0..j are placed; branches whose prefix
  // falls below the best complete string are cut.
  std::vector<int> degree_at(n);
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    degree_at[v] = g.degree(v);
    for (Vertex w : g.neighbors(v)) adj[v] |= 1U << w;
  }
  std::sort(degree_at.begin(), degree_at.end());

  std::vector<Vertex> order(n);  // order[k] is the old vertex with new label k
  std::uint64_t best = 0;
  bool have_best = false;
  std::uint32_t used = 0;
  // `bits` holds columns 1..k-1; `ahead` is set once it beats best's prefix.
  std::function<void(int, std::uint64_t, bool)> place = [&](int k, std::uint64_t bits, bool ahead) {
    if (k == n) {
      if (!have_best || bits > best) {
        best = bits;
        have_best = true;
      }
      return;
    }
    const int before = k * (k - 1) / 2;
    const int total = n * (n - 1) / 2;
    for (Vertex v = 0; v < n; ++v) {
      if ((used >> v) & 1U || g.degree(v) != degree_at[k]) continue;
      std::uint64_t next = bits;
      for (int i = 0; i < k; ++i) next = (next << 1) | ((adj[v] >> order[i]) & 1U);
      bool next_ahead = ahead;
      if (have_best && !ahead && k > 0) {
        const int width = before + k;
        const std::uint64_t best_prefix = best >> (total - width);
        if (next < best_prefix) continue;
        next_ahead = next > best_prefix;
      }
      order[k] = v;
      used |= 1U << v;
      place(k + 1, next, next_ahead);
      used &= ~(1U << v);
    }
  };
  place(0, 0, false);

  CanonicalCode code;
  code.bytes.push_back(kGeneralTag);
  code.bytes.push_back(static_cast<std::uint8_t>(n));
  std::vector<int> degrees;
  for (Vertex v = 0; v < n; ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  for (int d : degrees) code.bytes.push_back(static_cast<std::uint8_t>(d));
  for (int shift = 56; shift >= 0; shift -= 8) code.bytes.push_back(static_cast<std::uint8_t>(best >> shift));
  return code;
}

CanonicalCode canonical_code(const Graph& g) {
  if (is_tree(g)) return tree_code(g);
  if (is_unicyclic(g)) return unicyclic_code(g);
  return brute_force_canonical_code(g);
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

}  // namespace rdr
