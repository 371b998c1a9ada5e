#include "geodesy/geodesic.hpp"

#include <algorithm>
#include <deque>

namespace geodesy {

namespace {

std::vector<long> bfs_distances(const MultiGraph& g, int start) {
  std::vector<long> dist(g.num_vertices(), -1);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(v)) {
      if (dist[inc.other] == -1) {
        dist[inc.other] = dist[v] + 1;
        queue.push_back(inc.other);
      }
    }
  }
  return dist;
}

}  // namespace

GeodesicDag geodesic_dag(const MultiGraph& g, const std::string& x,
                         const std::string& y) {
  const int xi = g.index_of(x);
  const int yi = g.index_of(y);

  GeodesicDag dag;
  dag.delta = g.max_degree();

  if (xi == yi) {
    dag.distance = 0;
    dag.vertices.push_back({xi, 0, 1, 1, 0, 0});
    dag.layers = {{0}};
    dag.out_edges.resize(1);
    dag.in_edges.resize(1);
    dag.names = {g.name(xi)};
    dag.source = dag.target = 0;
    return dag;
  }

  const auto dist_x = bfs_distances(g, xi);
  const auto dist_y = bfs_distances(g, yi);
  if (dist_x[yi] == -1)
    throw DomainError("no path between '" + x + "' and '" + y + "'");
  const long t = dist_x[yi];
  dag.distance = t;

  // Retain v iff it lies on some geodesic; dag ids ordered by (layer, index).
  std::vector<int> dag_id(g.num_vertices(), -1);
  dag.layers.assign(t + 1, {});
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (dist_x[v] >= 0 && dist_y[v] >= 0 && dist_x[v] + dist_y[v] == t) {
      dag_id[v] = 0;  // provisional
      dag.layers[dist_x[v]].push_back(v);
    }
  }
  for (auto& layer : dag.layers) {
    for (int& v : layer) {
      int id = static_cast<int>(dag.vertices.size());
      dag.vertices.push_back({v, static_cast<int>(dist_x[v]), 0, 0, 0, 0});
      dag.names.push_back(g.name(v));
      dag_id[v] = id;
      v = id;
    }
  }
  dag.source = dag_id[xi];
  dag.target = dag_id[yi];

  dag.out_edges.resize(dag.vertices.size());
  dag.in_edges.resize(dag.vertices.size());
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    if (dag_id[ed.u] == -1 || dag_id[ed.v] == -1) continue;
    int a = ed.u, b = ed.v;
    if (dist_x[a] > dist_x[b]) std::swap(a, b);
    if (dist_x[a] + 1 + dist_y[b] != t) continue;  // not on any geodesic
    int from = dag_id[a], to = dag_id[b];
    int idx = static_cast<int>(dag.edges.size());
    dag.edges.push_back({from, to, g.edges()[e].mult, static_cast<int>(e)});
    dag.out_edges[from].push_back(idx);
    dag.in_edges[to].push_back(idx);
    dag.vertices[to].deg_toward_source += ed.mult;
    dag.vertices[from].deg_toward_target += ed.mult;
  }

  // Forward and backward path-count DP over the layered structure.
  dag.vertices[dag.source].n_from_source = 1;
  for (long i = 1; i <= t; ++i) {
    for (int id : dag.layers[i]) {
      mpz_class total = 0;
      for (int e : dag.in_edges[id])
        total += dag.edges[e].mult * dag.vertices[dag.edges[e].from].n_from_source;
      dag.vertices[id].n_from_source = total;
    }
  }
  dag.vertices[dag.target].n_to_target = 1;
  for (long i = t - 1; i >= 0; --i) {
    for (int id : dag.layers[i]) {
      mpz_class total = 0;
      for (int e : dag.out_edges[id])
        total += dag.edges[e].mult * dag.vertices[dag.edges[e].to].n_to_target;
      dag.vertices[id].n_to_target = total;
    }
  }
  return dag;
}

mpz_class count_shortest_paths(const MultiGraph& g, const std::string& x,
                               const std::string& y) {
  return geodesic_dag(g, x, y).total_count();
}

std::vector<std::string> path_tokens(const std::string& source, const PathSeq& path) {
  std::vector<std::string> toks{source};
  for (const PathStep& step : path) {
    toks.push_back(step.from + "~" + step.to + "#" + std::to_string(step.copy));
    toks.push_back(step.to);
  }
  return toks;
}

std::vector<PathSeq> enumerate_shortest_paths(const MultiGraph& g,
                                              const std::string& x,
                                              const std::string& y,
                                              unsigned long long cap) {
  const int xi = g.index_of(x);
  const int yi = g.index_of(y);
  if (xi == yi) return {PathSeq{}};

  const auto dist_y = bfs_distances(g, yi);
  if (dist_y[xi] == -1)
    throw DomainError("no path between '" + x + "' and '" + y + "'");
  const long t = dist_y[xi];

  std::vector<PathSeq> paths;
  PathSeq current;
  current.reserve(t);

  // Depth-first over walks whose distance to y drops by one per step; every
  // such walk is a geodesic and vice versa.
  auto dfs = [&](auto&& self, int v, long remaining) -> void {
    if (remaining == 0) {
      if (paths.size() >= cap) throw CapExceeded(cap, cap);
      paths.push_back(current);
      return;
    }
    for (const auto& inc : g.incident(v)) {
      if (dist_y[inc.other] != remaining - 1) continue;
      const mpz_class& mult = g.edges()[inc.edge].mult;
      for (mpz_class copy = 0; copy < mult; ++copy) {
        current.push_back(PathStep{g.name(v), g.name(inc.other), inc.edge,
                                   copy.fits_ulong_p() ? copy.get_ui() : 0});
        self(self, inc.other, remaining - 1);
        current.pop_back();
      }
    }
  };
  dfs(dfs, xi, t);
  return paths;
}

PathSeq sample_shortest_path(const GeodesicDag& dag, unsigned long seed) {
  if (dag.total_count() < 1) throw DomainError("no path to sample");
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);

  PathSeq path;
  int v = dag.source;
  while (dag.vertices[v].layer < dag.distance) {
    const mpz_class& total = dag.vertices[v].n_to_target;
    mpz_class r = rng.get_z_range(total);
    for (int e : dag.out_edges[v]) {
      const auto& edge = dag.edges[e];
      const mpz_class& per_copy = dag.vertices[edge.to].n_to_target;
      mpz_class block = edge.mult * per_copy;
      if (r < block) {
        mpz_class copy = r / per_copy;
        path.push_back(PathStep{dag.names[v], dag.names[edge.to], edge.graph_edge,
                                copy.get_ui()});
        v = edge.to;
        break;
      }
      r -= block;
    }
  }
  return path;
}

mpq_class path_probability(const GeodesicDag& dag, const PathSeq& path) {
  if (static_cast<long>(path.size()) != dag.distance)
    throw DomainError("path length does not match geodesic distance");
  mpq_class prob = 1;
  int v = dag.source;
  for (const PathStep& step : path) {
    if (dag.names[v] != step.from) throw DomainError("path does not start at source");
    bool found = false;
    for (int e : dag.out_edges[v]) {
      const auto& edge = dag.edges[e];
      if (edge.graph_edge != step.graph_edge) continue;
      if (mpz_class(step.copy) >= edge.mult)
        throw DomainError("parallel-edge copy out of range");
      prob *= mpq_class(dag.vertices[edge.to].n_to_target,
                        dag.vertices[v].n_to_target);
      v = edge.to;
      found = true;
      break;
    }
    if (!found) throw DomainError("step is not a retained geodesic edge");
  }
  return prob;
}

}  // namespace geodesy
