#include "rdr/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "parallel.hpp"

namespace rdr {

std::vector<RootedTreeCode> enumerate_rooted_trees(int k) {
  if (k < 1) throw std::invalid_argument("rooted trees need at least one vertex");
  std::vector<int> levels(k);
  for (int i = 0; i < k; ++i) levels[i] = i;
  std::vector<RootedTreeCode> out;
  for (;;) {
    out.push_back(RootedTreeCode{levels});
    int p = k - 1;
    while (p > 0 && levels[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (levels[q] != levels[p] - 1) --q;
    const int shift = p - q;
    for (int i = p; i < k; ++i) levels[i] = levels[i - shift];
  }
  return out;
}

Graph tree_from_levels(const RootedTreeCode& code) {
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level;
  for (int i = 0; i < code.size(); ++i) {
    const int level = code.levels[i];
    if (level > 0) edges.emplace_back(last_at_level.at(level - 1), i);
    last_at_level.resize(level + 1);
    last_at_level[level] = i;
  }
  return Graph(code.size(), edges);
}

void for_each_unicyclic(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 3) throw std::invalid_argument("unicyclic graphs need at least 3 vertices");

  // Every rooted tree that can hang from a cycle vertex, ordered by size; the
  // position in this list is the tree's id.
  std::vector<RootedTreeCode> trees;
  std::vector<int> first_of_size(n, 0);
  std::vector<int> end_of_size(n, 0);
  for (int size = 1; size <= n - 2; ++size) {
    first_of_size[size] = static_cast<int>(trees.size());
    for (auto& t : enumerate_rooted_trees(size)) trees.push_back(std::move(t));
    end_of_size[size] = static_cast<int>(trees.size());
  }

  for (int g = 3; g <= n; ++g) {
    std::vector<int> ids(g);
    // Fill position `pos` with `budget` vertices still to place.
    std::function<void(int, int)> fill = [&](int pos, int budget) {
      const int slots_after = g - pos - 1;
      if (pos == g) {
        if (budget != 0 || !is_dihedral_minimal(std::span<const int>(ids))) return;
        std::vector<Edge> edges;
        for (int i = 0; i < g; ++i) edges.emplace_back(i, (i + 1) % g);
        int next = g;
        for (int i = 0; i < g; ++i) {
          const auto& levels = trees[ids[i]].levels;
          std::vector<Vertex> last_at_level{i};
          for (std::size_t j = 1; j < levels.size(); ++j) {
            const int level = levels[j];
            edges.emplace_back(last_at_level.at(level - 1), next);
            last_at_level.resize(level + 1);
            last_at_level[level] = next++;
          }
        }
        visit(Graph(n, edges));
        return;
      }
      for (int size = 1; size <= budget - slots_after; ++size) {
        for (int id = first_of_size[size]; id < end_of_size[size]; ++id) {
          // A dihedral-minimal sequence starts with its smallest id.
          if (pos > 0 && id < ids[0]) continue;
          ids[pos] = id;
          fill(pos + 1, budget - size);
        }
      }
    };
    fill(0, n);
  }
}

std::vector<Graph> enumerate_unicyclic(int n) {
  std::vector<Graph> out;
  for_each_unicyclic(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph make_S(int n, int p) {
  if (p < 3 || p > n) {
    throw std::invalid_argument("S_n^p needs 3 <= p <= n (got n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                                ")");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) edges.emplace_back(std::min(i, (i + 1) % p), std::max(i, (i + 1) % p));
  for (int v = p; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

namespace {

constexpr std::size_t kSweepBatch = 256;

std::string join_hex(const std::vector<CanonicalCode>& codes) {
  std::string out;
  for (const auto& c : codes) {
    if (!out.empty()) out += '|';
    out += c.hex();
  }
  return out;
}

}  // namespace

SweepResult sweep(int n, IndexKind index, int jobs) {
  if (n < 3) throw std::invalid_argument("sweep needs n >= 3");
  SweepResult result;
  result.n = n;
  result.index = index;
  bool have_max = false;

  std::vector<Graph> batch;
  std::vector<Rational> values;
  const auto flush = [&] {
    values.assign(batch.size(), Rational());
    detail::parallel_for(batch.size(), jobs, [&](std::size_t i) { values[i] = exact_index(batch[i], index); });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++result.graph_count;
      if (!have_max || values[i] > result.max_value) {
        have_max = true;
        result.max_value = values[i];
        result.argmax.clear();
      }
      if (values[i] == result.max_value) result.argmax.push_back(canonical_code(batch[i]));
    }
    batch.clear();
  };
  for_each_unicyclic(n, [&](const Graph& g) {
    batch.push_back(g);
    if (batch.size() == kSweepBatch) flush();
  });
  flush();

  std::sort(result.argmax.begin(), result.argmax.end());
  result.is_unique = result.argmax.size() == 1;
  result.matches_theorem = result.is_unique && result.argmax.front() == canonical_code(make_S(n, 3));
  return result;
}

std::string SweepResult::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["index"] = index_name(index);
  j["count"] = graph_count;
  j["max_value"] = max_value.to_string();
  j["unique"] = is_unique;
  j["matches_theorem"] = matches_theorem;
  auto codes = nlohmann::json::array();
  for (const auto& c : argmax) codes.push_back(c.hex());
  j["argmax_code"] = codes;
  return j.dump();
}

std::string SweepResult::csv_header() { return "n,count,max_value,unique,matches_theorem,argmax_code"; }

std::string SweepResult::to_csv_row() const {
  return std::to_string(n) + ',' + std::to_string(graph_count) + ',' + max_value.to_string() + ',' +
         (is_unique ? '1' : '0') + ',' + (matches_theorem ? '1' : '0') + ',' + join_hex(argmax);
}

}  // namespace rdr
