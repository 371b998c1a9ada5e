#pragma once

#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "geodesy/multigraph.hpp"

namespace testsupport {

// Random multigraph with up to max_vertices vertices, bundle multiplicities
// up to max_mult, and multiplicity-weighted degrees capped at max_degree.
// Vertices may end up isolated, which exercises the unreachable paths.
inline geodesy::MultiGraph random_multigraph(std::mt19937_64& rng,
                                             int max_vertices = 10,
                                             long max_mult = 3,
                                             long max_degree = 6,
                                             bool simple = false) {
  std::uniform_int_distribution<int> nv(2, max_vertices);
  const int n = nv(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));

  std::vector<long> degree(n, 0);
  std::map<std::pair<int, int>, long> mult;
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<long> bundle(1, simple ? 1 : max_mult);
  std::uniform_int_distribution<int> attempts_dist(n, 3 * n);
  const int attempts = attempts_dist(rng);
  for (int a = 0; a < attempts; ++a) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (simple && mult.count({u, v})) continue;
    long add = bundle(rng);
    if (degree[u] + add > max_degree || degree[v] + add > max_degree) continue;
    mult[{u, v}] += add;
    degree[u] += add;
    degree[v] += add;
  }

  std::vector<std::tuple<std::string, std::string, mpz_class>> edges;
  for (const auto& [pair, m] : mult)
    edges.emplace_back(names[pair.first], names[pair.second], m);
  return geodesy::MultiGraph::from_edges(edges, names);
}

// Icosahedron: vertex 0 on top, upper ring 1-5, lower ring 6-10, vertex 11 on
// the bottom; 0 and 11 are antipodal at distance 3.
inline geodesy::MultiGraph icosahedron() {
  std::vector<std::tuple<std::string, std::string, mpz_class>> edges;
  auto name = [](int i) { return "i" + std::string(i < 10 ? "0" : "") + std::to_string(i); };
  for (int i = 1; i <= 5; ++i) edges.emplace_back(name(0), name(i), 1);
  for (int i = 1; i <= 5; ++i) edges.emplace_back(name(i), name(i % 5 + 1), 1);
  for (int i = 6; i <= 10; ++i) edges.emplace_back(name(i), name((i - 5) % 5 + 6), 1);
  for (int i = 6; i <= 10; ++i) edges.emplace_back(name(11), name(i), 1);
  const int cross[10][2] = {{1, 6}, {1, 7}, {2, 7}, {2, 8},  {3, 8},
                            {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6}};
  for (const auto& [u, v] : cross) edges.emplace_back(name(u), name(v), 1);
  return geodesy::MultiGraph::from_edges(edges);
}

}  // namespace testsupport
