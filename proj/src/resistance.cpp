#include "rdr/resistance.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <Eigen/Dense>

#include "rdr/errors.hpp"

namespace rdr {

Rational cycle_resistance(int g, int i, int j) {
  if (g < 3) throw std::out_of_range("cycle length must be at least 3");
  if (i < 1 || i > g || j < 1 || j > g) throw std::out_of_range("cycle position out of range");
  if (i > j) std::swap(i, j);
  return Rational(static_cast<std::int64_t>(j - i) * (g + i - j), g);
}

Rational resistance_unicyclic(const UnicyclicDecomposition& d, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= d.order() || v >= d.order()) throw std::out_of_range("vertex not in graph");
  if (u == v) return Rational(0);
  const Vertex a = d.anchor(u);
  const Vertex b = d.anchor(v);
  if (a == b) return Rational(d.tree_distance(u, v));
  return Rational(d.tree_depth(u) + d.tree_depth(v)) +
         cycle_resistance(d.cycle_length(), d.cycle_position(a) + 1, d.cycle_position(b) + 1);
}

ResistanceMatrix ResistanceMatrix::exact(int n, std::vector<Rational> entries) {
  if (entries.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("matrix size mismatch");
  ResistanceMatrix m;
  m.mode_ = Mode::kExact;
  m.n_ = n;
  m.exact_ = std::move(entries);
  return m;
}

ResistanceMatrix ResistanceMatrix::numeric(int n, std::vector<double> entries) {
  if (entries.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("matrix size mismatch");
  ResistanceMatrix m;
  m.mode_ = Mode::kNumeric;
  m.n_ = n;
  m.numeric_ = std::move(entries);
  return m;
}

std::size_t ResistanceMatrix::index(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex not in matrix");
  return static_cast<std::size_t>(u) * n_ + v;
}

const Rational& ResistanceMatrix::exact_at(Vertex u, Vertex v) const {
  if (!is_exact()) throw std::logic_error("resistance matrix is numeric");
  return exact_[index(u, v)];
}

double ResistanceMatrix::at(Vertex u, Vertex v) const {
  return is_exact() ? exact_[index(u, v)].to_double() : numeric_[index(u, v)];
}

ResistanceMatrix resistance_all_pairs_exact(const Graph& g) {
  const int n = g.order();
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n);
  if (!is_connected(g)) throw NotConnectedError();
  if (g.size() == n - 1) {
    const auto dist = distance_matrix(g);
    for (std::size_t k = 0; k < dist.size(); ++k) entries[k] = Rational(dist[k]);
    return ResistanceMatrix::exact(n, std::move(entries));
  }
  if (g.size() != n) {
    throw UnsupportedGraphError("exact resistance needs a tree or unicyclic graph (m = " +
                                std::to_string(g.size()) + ", n = " + std::to_string(n) + ")");
  }
  const auto d = classify_unicyclic(g);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      auto r = resistance_unicyclic(d, u, v);
      entries[static_cast<std::size_t>(v) * n + u] = r;
      entries[static_cast<std::size_t>(u) * n + v] = std::move(r);
    }
  }
  return ResistanceMatrix::exact(n, std::move(entries));
}

ResistanceMatrix resistance_all_pairs_numeric(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("numeric resistance needs at least two vertices");
  if (n > kNumericMaxOrder) throw UnsupportedGraphError("numeric resistance is capped at 2000 vertices");
  if (!is_connected(g)) throw NotConnectedError();

  // grounded[v * n + u] = potential at u with v grounded and unit current into u.
  std::vector<double> grounded(static_cast<std::size_t>(n) * n, 0.0);
  for (Vertex ground = 0; ground < n; ++ground) {
    const auto reduced = [ground](Vertex v) { return v < ground ? v : v - 1; };
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n - 1, n - 1);
    for (Vertex u = 0; u < n; ++u) {
      if (u == ground) continue;
      lap(reduced(u), reduced(u)) = g.degree(u);
      for (Vertex w : g.neighbors(u)) {
        if (w != ground) lap(reduced(u), reduced(w)) = -1.0;
      }
    }
    const Eigen::LDLT<Eigen::MatrixXd> factor(lap);
    if (factor.info() != Eigen::Success || !factor.isPositive()) {
      throw std::logic_error("reduced Laplacian is singular");
    }
    const Eigen::MatrixXd inverse = factor.solve(Eigen::MatrixXd::Identity(n - 1, n - 1));
    for (Vertex u = 0; u < n; ++u) {
      if (u != ground) grounded[static_cast<std::size_t>(ground) * n + u] = inverse(reduced(u), reduced(u));
    }
  }

  std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double a = grounded[static_cast<std::size_t>(v) * n + u];
      const double b = grounded[static_cast<std::size_t>(u) * n + v];
      if (std::abs(a - b) > 1e-8 * std::max(1.0, std::abs(a))) {
        throw std::logic_error("grounded solves disagree on r(" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
      const double r = 0.5 * (a + b);
      entries[static_cast<std::size_t>(u) * n + v] = r;
      entries[static_cast<std::size_t>(v) * n + u] = r;
    }
  }
  return ResistanceMatrix::numeric(n, std::move(entries));
}

ResistanceMatrix resistance_all_pairs(const Graph& g) {
  if (g.order() >= 1 && (g.size() == g.order() - 1 || g.size() == g.order()) && is_connected(g)) {
    return resistance_all_pairs_exact(g);
  }
  return resistance_all_pairs_numeric(g);
}

std::string format_numeric(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace rdr
