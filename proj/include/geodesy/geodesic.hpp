#pragma once

#include <string>
#include <vector>

#include "geodesy/multigraph.hpp"

namespace geodesy {

/// Layered structure of all x-y geodesics: exactly the vertices and edges
/// lying on at least one shortest x-y path, layered by distance from x.
/// Built by geodesic_dag(); immutable afterwards.
struct GeodesicDag {
  struct Vertex {
    int graph_vertex;  // index in the source graph
    int layer;
    mpz_class n_from_source;     // shortest x->v path count
    mpz_class n_to_target;       // shortest v->y path count
    mpz_class deg_toward_source; // mult-weighted retained edges one layer back
    mpz_class deg_toward_target; // mult-weighted retained edges one layer forward
  };
  struct Edge {
    int from;  // dag vertex in layer i
    int to;    // dag vertex in layer i+1
    mpz_class mult;
    int graph_edge;  // index into the source graph's edge list
  };

  long distance = 0;  // t
  int source = 0;     // dag vertex id of x
  int target = 0;     // dag vertex id of y
  mpz_class delta;    // max degree of the source graph
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> layers;  // dag vertex ids per layer 0..t
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out_edges;  // per dag vertex, edge ids forward
  std::vector<std::vector<int>> in_edges;   // per dag vertex, edge ids backward
  std::vector<std::string> names;           // per dag vertex

  const mpz_class& total_count() const { return vertices[target].n_from_source; }
};

/// Builds the geodesic structure for a vertex pair. Prunes to vertices/edges
/// with d(x,u) + 1 + d(v,y) = t via forward and backward BFS, then fills both
/// path-count tables. x == y yields the single-vertex structure with t = 0.
/// Throws DomainError for unknown vertices or when y is unreachable.
GeodesicDag geodesic_dag(const MultiGraph& g, const std::string& x,
                         const std::string& y);

/// Number of shortest x-y paths; 1 when x == y (the empty path).
mpz_class count_shortest_paths(const MultiGraph& g, const std::string& x,
                               const std::string& y);

/// One traversed edge of an explicit path; copy < mult distinguishes parallel
/// edges, in insertion order.
struct PathStep {
  std::string from;
  std::string to;
  int graph_edge;
  unsigned long copy;

  bool operator==(const PathStep&) const = default;
};
using PathSeq = std::vector<PathStep>;

/// Renders a path as the alternating vertex/edge token sequence
/// ["a", "a~b#0", "b", ...]; a lone-vertex path renders as [x].
std::vector<std::string> path_tokens(const std::string& source, const PathSeq& path);

/// Thrown by enumerate_shortest_paths when more than `cap` geodesics exist;
/// carries the number found before giving up.
class CapExceeded : public DomainError {
 public:
  CapExceeded(unsigned long long partial, unsigned long long cap)
      : DomainError("shortest-path enumeration exceeded cap " + std::to_string(cap)),
        partial_count(partial) {}
  unsigned long long partial_count;
};

/// Explicit depth-first enumeration of all x-y geodesics, independent of the
/// counting DP (only BFS distances are shared). Paths are emitted in
/// lexicographic order of the vertex sequences (ties by parallel-edge copy).
std::vector<PathSeq> enumerate_shortest_paths(const MultiGraph& g,
                                              const std::string& x,
                                              const std::string& y,
                                              unsigned long long cap = 1000000);

/// Draws one geodesic uniformly at random: from each vertex the next parallel
/// edge copy toward w is chosen with probability n_y(w)/n_y(v), which
/// telescopes to exactly 1/n_total per path. Deterministic for a given seed.
PathSeq sample_shortest_path(const GeodesicDag& dag, unsigned long seed);

/// Exact probability of drawing `path` from the sampling chain above.
/// Throws DomainError if the steps do not follow retained geodesic edges.
mpq_class path_probability(const GeodesicDag& dag, const PathSeq& path);

}  // namespace geodesy
