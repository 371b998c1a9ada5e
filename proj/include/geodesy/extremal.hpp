#pragma once

#include <string>

#include "geodesy/multigraph.hpp"

namespace geodesy {

/// A generated family instance together with its designated vertex pair.
struct Generated {
  MultiGraph graph;
  std::string x;
  std::string y;
};

/// Cycle on 2t vertices with bundle multiplicities alternating floor(D/2) and
/// ceil(D/2); x and y antipodal. For t = 1 the two bundles share a vertex
/// pair and merge into a single record of multiplicity D. Every degree is
/// exactly D and d(x, y) = t.
Generated gen_cycle_multigraph(long delta, long t);

enum class BlowupMode { even, odd_alternating, high_girth };

/// Simple blowup families on a ring of vertex groups, joined group-to-group:
///  - even: D even; groups of D/2 on a ring of 2t+1 groups, complete
///    bipartite joins. The ring is odd so only one arc carries geodesics and
///    the designated antipodal count is exactly (D/2)^(t-1).
///  - odd_alternating: D odd, t >= 2; groups of ceil(D/2) on a ring of 2t
///    groups; joins alternate complete bipartite and floor(D/2)-regular
///    bipartite circulants.
///  - high_girth: D even; like `even` but joins are floor(D/2)-regular
///    bipartite circulants over groups of a searched size m, with per-join
///    connection sets chosen by deterministic backtracking until the whole
///    graph has girth > girth_target (budgeted; failure throws
///    DomainError("gadget not found...")).
/// All modes produce a simple graph that is exactly D-regular with
/// d(x, y) = t.
Generated gen_blowup_cycle(long delta, long t, BlowupMode mode,
                           long girth_target = 0,
                           unsigned long long budget = 100000);

enum class Family { cycle_multigraph, blowup_cycle };

/// Known closed forms: cycle_multigraph -> 2(ab)^(t/2) for even t,
/// D(ab)^((t-1)/2) for odd t; blowup_cycle (even D) -> (D/2)^(t-1).
mpz_class closed_form_count(Family family, long delta, long t);

}  // namespace geodesy
