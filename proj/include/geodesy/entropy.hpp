#pragma once

#include <map>
#include <string>
#include <vector>

#include "geodesy/geodesic.hpp"

namespace geodesy {

/// Conditional entropies of the uniformly random geodesic, written as the
/// vertex/edge sequence (X_0, E_1, X_1, ..., E_t, X_t). All probabilities are
/// exact rationals; only the final log2 is floating point.
struct EntropyReport {
  double h_total = 0;             // log2 of the path count
  std::vector<double> forward;    // f_i = H(E_i | X_{i-1}), i = 1..t
  std::vector<double> backward;   // b_i = H(E_i | X_i),     i = 1..t
  std::vector<double> paired;     // s_i = f_{i+1} + b_i,    i = 1..t-1
  double log2_delta = 0;          // cap for f_1 and b_t
  double log2_split = 0;          // log2(floor(D/2) * ceil(D/2)); cap for s_i

  double sum_forward() const;
  double sum_backward() const;
  /// f_1 + b_t + sum of paired terms; equals 2 * h_total up to rounding.
  double two_sided_sum() const;
};

/// Pr[X_i = v] = n_x(v) * n_y(v) / n_total for the retained vertices of
/// layer i, keyed by vertex id. The values sum to exactly 1.
std::map<std::string, mpq_class> vertex_marginals(const GeodesicDag& dag, long i);

EntropyReport entropy_decomposition(const GeodesicDag& dag);

/// Split-degree audit for interior geodesic vertices: edge sets toward the
/// source and toward the target must be disjoint and their mult-weighted
/// sizes must sum to at most the graph's max degree. A violation signals a
/// bug, not a property of the input.
struct DegreeSplitReport {
  struct Entry {
    std::string vertex;
    mpz_class deg_toward_source;
    mpz_class deg_toward_target;
    bool disjoint;
    bool within_delta;
  };
  std::vector<Entry> entries;
  bool all_pass = true;
};

DegreeSplitReport check_degree_split(const GeodesicDag& dag);

}  // namespace geodesy
