#include "rdr/verify.hpp"

#include "json.hpp"

#include "parallel.hpp"
#include "rdr/enumerate.hpp"
#include "rdr/errors.hpp"
#include "rdr/graph_io.hpp"

namespace rdr {

std::vector<TransformOutcome> applicable_rewrites(const Graph& g) {
  std::vector<TransformOutcome> out;
  for (const auto& e : g.edges()) {
    try {
      out.push_back(edge_lift(g, e));
    } catch (const IdentityRewriteError&) {
    } catch (const RewritePreconditionError&) {
    }
  }
  const auto d = classify_unicyclic(g);
  for (Vertex c : d.cycle()) {
    try {
      out.push_back(cycle_lift(g, c));
    } catch (const IdentityRewriteError&) {
      break;
    } catch (const RewritePreconditionError&) {
      break;
    }
  }
  try {
    out.push_back(cycle_shrink(g));
  } catch (const IdentityRewriteError&) {
  } catch (const RewritePreconditionError&) {
  }
  return out;
}

VerificationReport verify_transforms(int max_n, int jobs) {
  VerificationReport report;
  report.max_n = max_n;
  for (int n = 3; n <= max_n; ++n) {
    const auto graphs = enumerate_unicyclic(n);
    std::vector<std::vector<TransformOutcome>> outcomes(graphs.size());
    detail::parallel_for(graphs.size(), jobs, [&](std::size_t i) { outcomes[i] = applicable_rewrites(graphs[i]); });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      ++report.graphs;
      for (const auto& o : outcomes[i]) {
        switch (o.kind) {
          case TransformKind::kEdgeLift:
            ++report.edge_lifts;
            break;
          case TransformKind::kCycleLift:
            ++report.cycle_lifts;
            break;
          case TransformKind::kCycleShrink:
            ++report.cycle_shrinks;
            break;
        }
        std::string reason;
        if (o.after.order() != o.before.order() || o.after.size() != o.before.size() || !is_unicyclic(o.after)) {
          reason = "order, size or unicyclicity not preserved";
        } else if (!o.increased()) {
          reason = "RDR did not increase";
        }
        if (!reason.empty()) {
          report.counterexamples.push_back({to_graph6(o.before), o.kind, o.site, reason, o.rdr_before, o.rdr_after});
        }
      }
    }
  }
  return report;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["max_n"] = max_n;
  j["graphs"] = graphs;
  j["checks"] = {{"edge_lift", edge_lifts}, {"cycle_lift", cycle_lifts}, {"cycle_shrink", cycle_shrinks}};
  j["total_checks"] = checks();
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : counterexamples) {
    nlohmann::ordered_json item;
    item["graph6"] = c.graph6;
    item["kind"] = transform_name(c.kind);
    item["site"] = c.site;
    item["reason"] = c.reason;
    item["rdr_before"] = c.rdr_before.to_string();
    item["rdr_after"] = c.rdr_after.to_string();
    list.push_back(item);
  }
  j["counterexamples"] = list;
  j["passed"] = passed();
  return j.dump();
}

std::string VerificationReport::csv_header() {
  return "max_n,graphs,edge_lift,cycle_lift,cycle_shrink,counterexamples,passed";
}

std::string VerificationReport::to_csv_row() const {
  return std::to_string(max_n) + ',' + std::to_string(graphs) + ',' + std::to_string(edge_lifts) + ',' +
         std::to_string(cycle_lifts) + ',' + std::to_string(cycle_shrinks) + ',' +
         std::to_string(counterexamples.size()) + ',' + (passed() ? '1' : '0');
}

}  // namespace rdr
