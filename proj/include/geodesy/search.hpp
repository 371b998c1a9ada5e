#pragma once

#include <functional>
#include <string>
#include <vector>

#include "geodesy/multigraph.hpp"

namespace geodesy {

/// One fully specified layered profile: interior layer sizes plus the
/// multiplicity matrix between each pair of consecutive layers. matrices[i]
/// is sizes[i] x sizes[i+1], flattened row-major. The path count is the 1x1
/// entry of the matrix product.
struct LayeredProfile {
  std::vector<long> sizes;  // s_0 = 1, interior sizes, s_t = 1
  std::vector<std::vector<long>> matrices;

  long rows(size_t i) const { return sizes[i]; }
  long cols(size_t i) const { return sizes[i + 1]; }
  long entry(size_t i, long r, long c) const {
    return matrices[i][static_cast<size_t>(r) * cols(i) + c];
  }
};

/// Realizes a profile as a multigraph: source "x", target "y", interior
/// vertices named by layer and position.
struct RealizedProfile {
  MultiGraph graph;
  std::string x;
  std::string y;
};
RealizedProfile profile_to_graph(const LayeredProfile& profile);

struct SearchOptions {
  long layer_cap = 3;
  bool simple = false;
  int jobs = 1;
  /// Budget on completed multiplicity-matrix states; exceeding it aborts the
  /// whole search with a DomainError.
  unsigned long long node_limit = 100000000ULL;
  /// Testing hook, called on every complete profile with its count. Invoked
  /// from worker threads when jobs > 1; must not throw.
  std::function<void(const LayeredProfile&, const mpz_class&)> on_profile;
};

struct SearchResult {
  mpz_class max_count;
  MultiGraph witness;
  std::string witness_x;
  std::string witness_y;
  unsigned long long profiles_explored = 0;
  long layer_cap = 0;
  bool simple_mode = false;
};

/// Exhaustive maximum of the shortest-path count over layered multigraphs
/// with max degree <= delta, d(x, y) = t, and interior layers of at most
/// layer_cap vertices. Edges beyond consecutive layers either shorten the
/// distance or lie on no geodesic, so some maximizer is layered and the
/// restriction is lossless. Enumeration is canonical up to permuting
/// vertices inside a layer (columns sorted non-increasing; rows sorted
/// within equal-history classes), with branch-and-bound pruning on a
/// degree-geometric upper bound. simple_mode restricts multiplicities to
/// {0,1}. The result is deterministic for any jobs value: ties between
/// maximizers are broken by the lexicographically smallest serialized
/// witness.
SearchResult search_max_count(long delta, long t, const SearchOptions& options = {});

}  // namespace geodesy
