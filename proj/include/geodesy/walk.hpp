#pragma once

#include <map>
#include <string>
#include <vector>

#include "geodesy/multigraph.hpp"

namespace geodesy {

/// A weighted graph quantized to step denominator delta: each weight becomes
/// the multiplicity round(weight * delta) (half up), and vertices are padded
/// with self-loop counters so every step has exactly delta equally likely
/// outcomes. The pads are counters, not edges: they never shorten distances.
struct QuantizedWalk {
  WeightedGraph base;
  long delta = 0;
  MultiGraph quantized;
  std::map<std::string, mpz_class> self_loop_pad;  // per vertex
  mpq_class quantization_error;                    // max |weight - mult/delta|
  std::vector<std::string> dropped_edges;          // positive weight rounded to 0
};

/// Quantizes weights to multiples of 1/delta. Requires delta >= 2 and all
/// weights in [0, 1]. Positive weights that round to 0 are dropped and
/// recorded. Throws DomainError if a vertex's quantized degree exceeds delta
/// (its incident weights sum to more than 1 after rounding).
QuantizedWalk quantize_weights(const WeightedGraph& w, long delta);

struct ArrivalProbability {
  long t = 0;          // minimal number of steps
  mpz_class n;         // geodesic count in the quantized multigraph
  mpq_class probability;  // n / delta^t, exact
};

/// Probability that the quantized walk started at x first reaches y in the
/// minimal possible number of steps t. Any t-step walk that reaches y must
/// follow a geodesic (self-loops or detours cost extra steps), so the
/// probability is exactly n(x,y) / delta^t <= (1/2)^(t-1).
ArrivalProbability minimal_arrival_probability(const QuantizedWalk& q,
                                               const std::string& x,
                                               const std::string& y);

}  // namespace geodesy
