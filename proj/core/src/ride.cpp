#include "netreconf/ride.hpp"

#include <algorithm>

#include <json.hpp>

#include "netreconf/error.hpp"
#include "netreconf/random.hpp"

namespace netreconf {

std::vector<double> ride_probabilities(const LaplacianState& state) {
  const std::size_t n = state.node_count();
  const std::size_t mk = state.active_edge_count();
  if (mk + 1 <= n) throw StructuralError("current graph is already a spanning tree");
  const double normalizer = static_cast<double>(mk - (n - 1));

  std::vector<double> p(state.edge_count(), 0.0);
  double total = 0.0;
  for (EdgeId e = 0; e < state.edge_count(); ++e) {
    if (!state.is_active(e) || state.is_bridge(e)) continue;
    p[e] = std::max(0.0, state.deletion_slack(e)) / normalizer;
    total += p[e];
  }
  if (!(total > 0.0)) throw NumericalError("no deletable edge found");
  for (double& x : p) x /= total;
  return p;
}

namespace {

EdgeId sample(const std::vector<double>& p, Rng& rng) {
  const double u = rng.uniform01();
  double cumulative = 0.0;
  EdgeId last = kNoEdge;
  for (EdgeId e = 0; e < p.size(); ++e) {
    if (p[e] <= 0.0) continue;
    cumulative += p[e];
    last = e;
    if (u < cumulative) return e;
  }
  return last;
}

}  // namespace

RideResult ride(const Network& net, const LaplacianState& initial, std::uint64_t seed,
                const RideObserver& observer) {
  LaplacianState state = initial;
  const std::vector<double> b = net.demand_vector();
  Rng rng(seed);
  DeletionTrace trace;
  trace.seed = seed;
  const std::size_t n = net.node_count();
  if (state.active_edge_count() + 1 > n) trace.records.reserve(state.active_edge_count() + 1 - n);

  while (state.active_edge_count() + 1 > n) {
    const std::vector<double> p = ride_probabilities(state);
    const EdgeId e = sample(p, rng);
    const Eigen::VectorXd phi = potentials(state, b);
    const Edge& edge = state.edge(e);
    const double f = (phi(edge.head) - phi(edge.tail)) / edge.resistance;
    DeletionRecord record;
    record.edge = e;
    record.probability = p[e];
    record.energy_before = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(n)).dot(phi);
    record.energy_after = record.energy_before + edge.resistance * f * f / state.deletion_slack(e);
    state.delete_edge(e);
    trace.records.push_back(record);
    if (observer) observer(state, record);
  }
  const std::vector<EdgeId> kept = state.active_edges();
  return {RootedTree::from_edges(net, kept), std::move(trace)};
}

RideResult ride(const Network& net, std::uint64_t seed, std::size_t refresh_interval,
                const RideObserver& observer) {
  return ride(net, LaplacianState(net, refresh_interval), seed, observer);
}

std::string trace_to_json(const DeletionTrace& trace, int indent) {
  nlohmann::json doc;
  doc["seed"] = trace.seed;
  nlohmann::json records = nlohmann::json::array();
  for (const DeletionRecord& r : trace.records) {
    records.push_back({{"edge", r.edge},
                       {"probability", r.probability},
                       {"energy_before", r.energy_before},
                       {"energy_after", r.energy_after}});
  }
  doc["deletions"] = std::move(records);
  return doc.dump(indent) + "\n";
}

}  // namespace netreconf
