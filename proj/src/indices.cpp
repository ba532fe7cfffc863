#include "rdr/indices.hpp"

#include <array>
#include <stdexcept>

#include "json.hpp"

#include "rdr/errors.hpp"

namespace rdr {

namespace {

struct DistanceSums {
  std::int64_t wiener = 0;
  Rational harary;
  std::int64_t degree_distance = 0;
  Rational rdd;
};

DistanceSums distance_sums(const Graph& g) {
  const int n = g.order();
  DistanceSums s;
  if (n <= 1) return s;
  const auto dist = distance_matrix(g);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = dist[static_cast<std::size_t>(u) * n + v];
      const int deg = g.degree(u) + g.degree(v);
      s.wiener += d;
      s.harary += Rational(1, d);
      s.degree_distance += static_cast<std::int64_t>(deg) * d;
      s.rdd += Rational(deg, d);
    }
  }
  return s;
}

template <typename Term>
IndexValue resistance_sum(const Graph& g, const ResistanceMatrix& r, Term term) {
  const int n = g.order();
  if (r.is_exact()) {
    Rational total;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) total += term(g.degree(u) + g.degree(v), r.exact_at(u, v));
    }
    return total;
  }
  double total = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) total += term(g.degree(u) + g.degree(v), r.at(u, v));
  }
  return IndexValue(total);
}

const auto kKirchhoffTerm = [](int, const auto& r) { return r; };
const auto kResistanceHararyTerm = [](int, const auto& r) {
  if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Rational>) {
    return r.reciprocal();
  } else {
    return 1.0 / r;
  }
};
const auto kRdrTerm = [](int degree_sum, const auto& r) {
  if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Rational>) {
    return Rational(degree_sum) / r;
  } else {
    return degree_sum / r;
  }
};

ResistanceMatrix checked_resistances(const Graph& g) {
  if (!is_connected(g)) throw NotConnectedError();
  return resistance_all_pairs(g);
}

nlohmann::ordered_json resistance_entry(const IndexValue& v) {
  nlohmann::ordered_json j;
  if (v.is_exact()) {
    j["value"] = v.exact().to_string();
  } else {
    j["value"] = v.to_double();
  }
  j["exact"] = v.is_exact();
  return j;
}

}  // namespace

const Rational& IndexValue::exact() const {
  if (!exact_) throw std::logic_error("index value is not exact");
  return *exact_;
}

std::string IndexValue::to_string() const { return exact_ ? exact_->to_string() : format_numeric(approx_); }

std::int64_t wiener(const Graph& g) { return distance_sums(g).wiener; }

Rational harary(const Graph& g) { return distance_sums(g).harary; }

std::int64_t degree_distance(const Graph& g) { return distance_sums(g).degree_distance; }

Rational reciprocal_degree_distance(const Graph& g) { return distance_sums(g).rdd; }

IndexValue kirchhoff(const Graph& g) {
  if (g.order() <= 1) return Rational(0);
  return resistance_sum(g, checked_resistances(g), kKirchhoffTerm);
}

IndexValue resistance_harary(const Graph& g) {
  if (g.order() <= 1) return Rational(0);
  return resistance_sum(g, checked_resistances(g), kResistanceHararyTerm);
}

IndexValue rdr(const Graph& g) {
  if (g.order() <= 1) return Rational(0);
  return rdr(g, checked_resistances(g));
}

IndexValue rdr(const Graph& g, const ResistanceMatrix& r) {
  if (r.order() != g.order()) throw std::invalid_argument("resistance matrix does not match graph");
  return resistance_sum(g, r, kRdrTerm);
}

Rational rdr_exact(const Graph& g) {
  if (g.order() <= 1) return Rational(0);
  return rdr(g, resistance_all_pairs_exact(g)).exact();
}

std::int64_t zagreb_m1(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += static_cast<std::int64_t>(g.degree(v)) * g.degree(v);
  return total;
}

std::int64_t zagreb_m1_edge_sum(const Graph& g) {
  std::int64_t total = 0;
  for (const auto& [u, v] : g.edges()) total += g.degree(u) + g.degree(v);
  return total;
}

std::int64_t zagreb_m2(const Graph& g) {
  std::int64_t total = 0;
  for (const auto& [u, v] : g.edges()) total += static_cast<std::int64_t>(g.degree(u)) * g.degree(v);
  return total;
}

IndexReport index_report(const Graph& g) {
  IndexReport report;
  const auto sums = distance_sums(g);
  report.wiener = sums.wiener;
  report.harary = sums.harary;
  report.degree_distance = sums.degree_distance;
  report.reciprocal_degree_distance = sums.rdd;
  report.zagreb_m1 = zagreb_m1(g);
  report.zagreb_m2 = zagreb_m2(g);
  if (report.zagreb_m1 != zagreb_m1_edge_sum(g)) throw std::logic_error("Zagreb M1 identity violated");
  if (g.order() > 1) {
    const auto r = checked_resistances(g);
    report.kirchhoff = resistance_sum(g, r, kKirchhoffTerm);
    report.resistance_harary = resistance_sum(g, r, kResistanceHararyTerm);
    report.rdr = resistance_sum(g, r, kRdrTerm);
  }
  return report;
}

std::string IndexReport::to_json() const {
  nlohmann::ordered_json j;
  j["wiener"] = wiener;
  j["harary"] = harary.to_string();
  j["kirchhoff"] = resistance_entry(kirchhoff);
  j["resistance_harary"] = resistance_entry(resistance_harary);
  j["zagreb_m1"] = zagreb_m1;
  j["zagreb_m2"] = zagreb_m2;
  j["degree_distance"] = degree_distance;
  j["reciprocal_degree_distance"] = reciprocal_degree_distance.to_string();
  j["rdr"] = resistance_entry(rdr);
  return j.dump();
}

std::string IndexReport::csv_header() {
  return "wiener,harary,kirchhoff,resistance_harary,zagreb_m1,zagreb_m2,degree_distance,"
         "reciprocal_degree_distance,rdr,exact";
}

std::string IndexReport::to_csv_row() const {
  const bool exact = kirchhoff.is_exact() && resistance_harary.is_exact() && rdr.is_exact();
  return std::to_string(wiener) + ',' + harary.to_string() + ',' + kirchhoff.to_string() + ',' +
         resistance_harary.to_string() + ',' + std::to_string(zagreb_m1) + ',' + std::to_string(zagreb_m2) + ',' +
         std::to_string(degree_distance) + ',' + reciprocal_degree_distance.to_string() + ',' + rdr.to_string() +
         ',' + (exact ? '1' : '0');
}

namespace {

constexpr std::array<std::pair<std::string_view, IndexKind>, 9> kIndexNames{{
    {"rdr", IndexKind::kRdr},
    {"wiener", IndexKind::kWiener},
    {"harary", IndexKind::kHarary},
    {"kirchhoff", IndexKind::kKirchhoff},
    {"rh", IndexKind::kResistanceHarary},
    {"m1", IndexKind::kM1},
    {"m2", IndexKind::kM2},
    {"dd", IndexKind::kDegreeDistance},
    {"rdd", IndexKind::kRdd},
}};

}  // namespace

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  for (const auto& [key, kind] : kIndexNames) {
    if (key == name) return kind;
  }
  return std::nullopt;
}

std::string_view index_name(IndexKind kind) {
  for (const auto& [key, k] : kIndexNames) {
    if (k == kind) return key;
  }
  return "?";
}

Rational exact_index(const Graph& g, IndexKind kind) {
  const auto exact_or_throw = [](const IndexValue& v) {
    if (!v.is_exact()) throw UnsupportedGraphError("index is not exactly computable on this graph");
    return v.exact();
  };
  switch (kind) {
    case IndexKind::kRdr:
      return rdr_exact(g);
    case IndexKind::kWiener:
      return Rational(wiener(g));
    case IndexKind::kHarary:
      return harary(g);
    case IndexKind::kKirchhoff:
      return exact_or_throw(kirchhoff(g));
    case IndexKind::kResistanceHarary:
      return exact_or_throw(resistance_harary(g));
    case IndexKind::kM1:
      return Rational(zagreb_m1(g));
    case IndexKind::kM2:
      return Rational(zagreb_m2(g));
    case IndexKind::kDegreeDistance:
      return Rational(degree_distance(g));
    case IndexKind::kRdd:
      return reciprocal_degree_distance(g);
  }
  throw std::logic_error("unknown index kind");
}

}  // namespace rdr
