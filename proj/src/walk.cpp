#include "geodesy/walk.hpp"

#include <algorithm>

#include "geodesy/geodesic.hpp"

namespace geodesy {

QuantizedWalk quantize_weights(const WeightedGraph& w, long delta) {
  if (delta < 2) throw DomainError("quantization needs delta >= 2");
  for (const auto& e : w.edges())
    if (e.weight < 0 || e.weight > 1)
      throw DomainError("weights must lie in [0, 1]");

  QuantizedWalk q;
  q.base = w;
  q.delta = delta;

  std::vector<std::tuple<std::string, std::string, mpz_class>> edges;
  mpq_class max_err = 0;
  for (const auto& e : w.edges()) {
    // round half up: mult = floor(weight * delta + 1/2)
    mpq_class scaled = e.weight * delta + mpq_class(1, 2);
    mpz_class mult = scaled.get_num() / scaled.get_den();
    mpq_class err = abs(e.weight - mpq_class(mult, delta));
    max_err = std::max(max_err, err);
    const std::string& u = w.name(e.u);
    const std::string& v = w.name(e.v);
    if (mult == 0) {
      if (e.weight > 0) q.dropped_edges.push_back(u + "~" + v);
      continue;
    }
    edges.emplace_back(u, v, mult);
  }
  q.quantization_error = max_err;

  std::vector<std::string> all_vertices = w.vertex_names();
  q.quantized = MultiGraph::from_edges(edges, all_vertices);

  for (const auto& name : q.quantized.vertex_names()) {
    mpz_class deg = q.quantized.degree(q.quantized.index_of(name));
    if (deg > delta)
      throw DomainError("vertex '" + name + "' has quantized degree " +
                        deg.get_str() + " > delta " + std::to_string(delta) +
                        "; its incident weights exceed one step's budget");
    q.self_loop_pad[name] = delta - deg;
  }
  return q;
}

ArrivalProbability minimal_arrival_probability(const QuantizedWalk& q,
                                               const std::string& x,
                                               const std::string& y) {
  GeodesicDag dag = geodesic_dag(q.quantized, x, y);
  ArrivalProbability out;
  out.t = dag.distance;
  out.n = dag.total_count();
  mpz_class steps;
  mpz_ui_pow_ui(steps.get_mpz_t(), static_cast<unsigned long>(q.delta),
                static_cast<unsigned long>(out.t));
  out.probability = mpq_class(out.n, steps);
  out.probability.canonicalize();
  return out;
}

}  // namespace geodesy
