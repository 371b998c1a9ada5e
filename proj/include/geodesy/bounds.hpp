#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geodesy/geodesic.hpp"
#include "geodesy/multigraph.hpp"

namespace geodesy {

/// Closed-form path-count bounds. Half-integer exponents are avoided by
/// carrying the exact square of the bound; n <= B is decided as n^2 <= B^2 in
/// rational arithmetic.
enum class BoundKind {
  naive,          // D * (D-1)^(t-1)
  theorem1,       // B^2 = D^2 * (ab)^(t-1),  a = floor(D/2), b = ceil(D/2)
  abstract2,      // B = 2 * (D/2)^t
  simple,         // 1 (t=1); D (t=2); B^2 = D^2 (D-1)^2 (ab)^(t-3) for t >= 3
  conjectured,    // B = 2 * (ab)^(t/2), odd D and even t only
  triangulation,  // B^2 = D^2 * (a'b')^(t-1) with a', b' from D-2; t > 1
};

const char* bound_kind_name(BoundKind kind);
std::optional<BoundKind> bound_kind_from_name(const std::string& name);
std::vector<BoundKind> all_bound_kinds();

struct ExactBound {
  BoundKind kind;
  mpz_class delta;
  long t;
  mpq_class squared_value;
  /// Present when the bound itself is an integer (squared_value a perfect
  /// integer square).
  std::optional<mpz_class> integer_value;
};

/// Evaluates one bound exactly. Throws DomainError("not applicable: ...")
/// when (kind, delta, t) violates the kind's precondition.
ExactBound evaluate_bound(BoundKind kind, const mpz_class& delta, long t);

struct Verdict {
  bool applicable = false;
  bool pass = false;   // n^2 <= squared bound
  bool tight = false;  // n^2 == squared bound
  mpq_class squared_bound;
};

struct CertReport {
  mpz_class n;
  long t = 0;
  mpz_class delta_used;
  std::map<BoundKind, Verdict> verdicts;
  mpz_class refined_squared;
  /// Set when the triangulation bound was claimed: whether every interior
  /// geodesic vertex satisfies deg_x(v) + deg_y(v) <= delta - 2. The bound
  /// itself is conditional on the caller's assertion about the graph; this
  /// local consequence is checked and reported separately.
  std::optional<bool> triangulation_local_ok;
};

/// Counts shortest x-y paths and compares the count against each claimed
/// bound in exact arithmetic. Inapplicable claims are marked, not errors.
/// delta_override (when given) must be >= max_degree(G); bounds are monotone
/// in delta, so a larger declared delta is sound.
CertReport certify(const MultiGraph& g, const std::string& x, const std::string& y,
                   const std::vector<BoundKind>& claims,
                   const std::optional<mpz_class>& delta_override = std::nullopt);

/// Per-graph squared certificate from the layer structure itself:
/// deg(x) * deg(y) * prod over interior layers of max_v deg_x(v) * deg_y(v).
/// Always >= n^2, and <= the theorem1 squared bound whenever the interior
/// degree splits respect delta.
mpz_class refined_certificate(const GeodesicDag& dag);

}  // namespace geodesy
