#include "rdr/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "rdr/canonical.hpp"
#include "rdr/errors.hpp"
#include "rdr/indices.hpp"

namespace rdr {

namespace {

TransformOutcome make_outcome(const Graph& before, Graph after, TransformKind kind, std::string site) {
  TransformOutcome out;
  out.rdr_before = rdr_exact(before);
  out.rdr_after = rdr_exact(after);
  out.before = before;
  out.after = std::move(after);
  out.kind = kind;
  out.site = std::move(site);
  return out;
}

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

std::string_view transform_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::kEdgeLift:
      return "edge_lift";
    case TransformKind::kCycleLift:
      return "cycle_lift";
    case TransformKind::kCycleShrink:
      return "cycle_shrink";
  }
  return "?";
}

std::string TransformOutcome::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = transform_name(kind);
  j["site"] = site;
  j["rdr_before"] = rdr_before.to_string();
  j["rdr_after"] = rdr_after.to_string();
  j["before_code"] = canonical_code(before).hex();
  j["after_code"] = canonical_code(after).hex();
  j["delta_positive"] = increased();
  return j.dump();
}

std::string TransformOutcome::csv_header() {
  return "kind,site,rdr_before,rdr_after,before_code,after_code,delta_positive";
}

std::string TransformOutcome::to_csv_row() const {
  return std::string(transform_name(kind)) + ',' + site + ',' + rdr_before.to_string() + ',' +
         rdr_after.to_string() + ',' + canonical_code(before).hex() + ',' + canonical_code(after).hex() + ',' +
         (increased() ? '1' : '0');
}

StarShape star_shape(const UnicyclicDecomposition& d, const Graph& g) {
  StarShape shape;
  shape.all_stars = true;
  shape.pendants.resize(d.cycle_length());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (d.on_cycle(v)) continue;
    if (d.tree_depth(v) != 1 || g.degree(v) != 1) {
      shape.all_stars = false;
      continue;
    }
    shape.pendants[d.cycle_position(d.anchor(v))].push_back(v);
  }
  return shape;
}

TransformOutcome edge_lift(const Graph& g, Edge e) {
  const auto [u0, v0] = e;
  if (!is_connected(g)) throw NotConnectedError();
  if (g.size() > g.order()) throw UnsupportedGraphError("edge-lifting needs a tree or unicyclic graph");
  if (u0 < 0 || v0 < 0 || u0 >= g.order() || v0 >= g.order() || u0 == v0 || !g.has_edge(u0, v0)) {
    throw RewritePreconditionError("{" + std::to_string(u0) + "," + std::to_string(v0) + "} is not an edge");
  }
  const int side_u = component_size_without_edge(g, u0, e);
  const int side_v = component_size_without_edge(g, v0, e);
  if (side_u + side_v != g.order()) {
    throw RewritePreconditionError("{" + std::to_string(u0) + "," + std::to_string(v0) + "} is not a cut edge");
  }
  if (side_u < 2 || side_v < 2) {
    throw IdentityRewriteError("edge-lifting a pendant edge reproduces the same graph");
  }

  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (ordered(a, b) == ordered(u0, v0)) continue;
    if (a == v0) a = u0;
    if (b == v0) b = u0;
    edges.push_back(ordered(a, b));
  }
  edges.emplace_back(ordered(u0, v0));  // v0 now plays the new pendant
  return make_outcome(g, Graph(g.order(), edges), TransformKind::kEdgeLift,
                      "edge " + std::to_string(u0) + "-" + std::to_string(v0));
}

TransformOutcome cycle_lift(const Graph& g, Vertex target) {
  const auto d = classify_unicyclic(g);
  if (target < 0 || target >= g.order() || !d.on_cycle(target)) {
    throw RewritePreconditionError("cycle-lift target " + std::to_string(target) + " is not a cycle vertex");
  }
  const auto shape = star_shape(d, g);
  if (!shape.all_stars) {
    throw RewritePreconditionError("a hanging tree is not a star on its cycle vertex; edge-lift first");
  }
  const auto bearing = std::count_if(shape.pendants.begin(), shape.pendants.end(),
                                     [](const auto& p) { return !p.empty(); });
  if (bearing < 2) throw IdentityRewriteError("pendants already sit on at most one cycle vertex");

  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (!d.on_cycle(a) && d.on_cycle(b)) std::swap(a, b);
    if (d.on_cycle(a) && !d.on_cycle(b)) a = target;
    edges.push_back(ordered(a, b));
  }
  return make_outcome(g, Graph(g.order(), edges), TransformKind::kCycleLift, "vertex " + std::to_string(target));
}

TransformOutcome cycle_lift(const Graph& g) {
  const auto d = classify_unicyclic(g);
  const auto shape = star_shape(d, g);
  int best = 0;
  for (int pos = 1; pos < d.cycle_length(); ++pos) {
    if (shape.pendants[pos].size() > shape.pendants[best].size()) best = pos;
  }
  return cycle_lift(g, d.cycle()[best]);
}

namespace {

struct ShrinkSite {
  std::vector<Vertex> cycle;  // v1..v_p with v1 the hub
};

ShrinkSite shrink_site(const Graph& g) {
  const auto d = classify_unicyclic(g);
  const int p = d.cycle_length();
  if (p == 3) throw IdentityRewriteError("cycle-shrinking needs a cycle of length at least 4");
  const auto shape = star_shape(d, g);
  int hub = 0;
  int bearing = 0;
  for (int pos = 0; pos < p; ++pos) {
    if (!shape.pendants[pos].empty()) {
      hub = pos;
      ++bearing;
    }
  }
  if (!shape.all_stars || bearing > 1) throw RewritePreconditionError("graph is not of the form S_n^p");
  ShrinkSite site;
  for (int k = 0; k < p; ++k) site.cycle.push_back(d.cycle()[(hub + k) % p]);
  return site;
}

}  // namespace

Graph cycle_shrink_by_surgery(const Graph& g) {
  const auto site = shrink_site(g);
  const auto& v = site.cycle;  // v[0] is v_1
  const int p = static_cast<int>(v.size());
  std::vector<Edge> removed;
  for (int i = 1; i + 1 < p; ++i) removed.push_back(ordered(v[i], v[i + 1]));
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
  }
  edges.push_back(ordered(v[1], v[p - 1]));
  for (int i = 2; i + 1 < p; ++i) edges.push_back(ordered(v[i], v[0]));
  return Graph(g.order(), edges);
}

TransformOutcome cycle_shrink(const Graph& g) {
  const auto site = shrink_site(g);
  const auto& v = site.cycle;
  const Vertex hub = v.front();
  const Vertex second = v[1];
  const Vertex last = v.back();
  std::vector<Edge> edges{ordered(hub, second), ordered(hub, last), ordered(second, last)};
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x != hub && x != second && x != last) edges.push_back(ordered(hub, x));
  }
  Graph rebuilt(g.order(), edges);
  if (!isomorphic(rebuilt, cycle_shrink_by_surgery(g))) {
    throw std::logic_error("cycle-shrinking surgery and reconstruction disagree");
  }
  return make_outcome(g, std::move(rebuilt), TransformKind::kCycleShrink,
                      "cycle " + std::to_string(v.size()));
}

std::vector<TransformOutcome> reduce_to_extremal(const Graph& g) {
  std::vector<TransformOutcome> steps;
  Graph current = g;
  for (;;) {
    const auto d = classify_unicyclic(current);
    Vertex pick = -1;
    for (Vertex v = 0; v < current.order(); ++v) {
      if (d.on_cycle(v) || current.degree(v) < 2) continue;
      if (pick < 0 || d.tree_depth(v) > d.tree_depth(pick)) pick = v;
    }
    if (pick < 0) break;
    steps.push_back(edge_lift(current, {d.parent(pick), pick}));
    current = steps.back().after;
  }

  const auto d = classify_unicyclic(current);
  const auto shape = star_shape(d, current);
  const auto bearing = std::count_if(shape.pendants.begin(), shape.pendants.end(),
                                     [](const auto& p) { return !p.empty(); });
  if (bearing >= 2) {
    steps.push_back(cycle_lift(current));
    current = steps.back().after;
  }
  if (d.cycle_length() >= 4) steps.push_back(cycle_shrink(current));
  return steps;
}

}  // namespace rdr
