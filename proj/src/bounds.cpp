#include "geodesy/bounds.hpp"

#include <algorithm>

namespace geodesy {

namespace {

mpz_class pow_mpz(const mpz_class& base, unsigned long exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

std::optional<mpz_class> exact_sqrt(const mpq_class& squared) {
  if (squared.get_den() != 1) return std::nullopt;
  const mpz_class& num = squared.get_num();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
  return root;
}

}  // namespace

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::naive: return "naive";
    case BoundKind::theorem1: return "theorem1";
    case BoundKind::abstract2: return "abstract2";
    case BoundKind::simple: return "simple";
    case BoundKind::conjectured: return "conjectured";
    case BoundKind::triangulation: return "triangulation";
  }
  return "?";
}

std::optional<BoundKind> bound_kind_from_name(const std::string& name) {
  for (BoundKind k : all_bound_kinds())
    if (name == bound_kind_name(k)) return k;
  return std::nullopt;
}

std::vector<BoundKind> all_bound_kinds() {
  return {BoundKind::naive,  BoundKind::theorem1,    BoundKind::abstract2,
          BoundKind::simple, BoundKind::conjectured, BoundKind::triangulation};
}

ExactBound evaluate_bound(BoundKind kind, const mpz_class& delta, long t) {
  if (delta < 1) throw DomainError("not applicable: delta must be >= 1");
  if (t < 1) throw DomainError("not applicable: t must be >= 1");
  const unsigned long ut = static_cast<unsigned long>(t);
  const mpz_class a = delta / 2;
  const mpz_class b = delta - a;

  ExactBound out{kind, delta, t, 0, std::nullopt};
  switch (kind) {
    case BoundKind::naive: {
      mpz_class v = delta * pow_mpz(delta - 1, ut - 1);
      out.squared_value = mpq_class(v * v);
      break;
    }
    case BoundKind::theorem1:
      out.squared_value = mpq_class(delta * delta * pow_mpz(a * b, ut - 1));
      break;
    case BoundKind::abstract2:
      out.squared_value = mpq_class(pow_mpz(delta, 2 * ut), pow_mpz(4, ut - 1));
      out.squared_value.canonicalize();
      break;
    case BoundKind::simple:
      if (t == 1)
        out.squared_value = 1;
      else if (t == 2)
        out.squared_value = mpq_class(delta * delta);
      else
        out.squared_value = mpq_class(delta * delta * (delta - 1) * (delta - 1) *
                                      pow_mpz(a * b, ut - 3));
      break;
    case BoundKind::conjectured:
      if (delta % 2 == 0 || t % 2 != 0)
        throw DomainError("not applicable: conjectured bound needs odd delta and even t");
      out.squared_value = mpq_class(4 * pow_mpz(a * b, ut));
      break;
    case BoundKind::triangulation: {
      if (delta < 3 || t <= 1)
        throw DomainError("not applicable: triangulation bound needs delta >= 3, t > 1");
      mpz_class a2 = (delta - 2) / 2;
      mpz_class b2 = (delta - 2) - a2;
      out.squared_value = mpq_class(delta * delta * pow_mpz(a2 * b2, ut - 1));
      break;
    }
  }
  out.integer_value = exact_sqrt(out.squared_value);
  return out;
}

CertReport certify(const MultiGraph& g, const std::string& x, const std::string& y,
                   const std::vector<BoundKind>& claims,
                   const std::optional<mpz_class>& delta_override) {
  GeodesicDag dag = geodesic_dag(g, x, y);

  CertReport rep;
  rep.n = dag.total_count();
  rep.t = dag.distance;
  rep.delta_used = g.max_degree();
  if (delta_override) {
    if (*delta_override < rep.delta_used)
      throw DomainError("declared delta " + delta_override->get_str() +
                        " is below the graph max degree " + rep.delta_used.get_str());
    rep.delta_used = *delta_override;
  }
  rep.refined_squared = refined_certificate(dag);

  const mpq_class n_squared(rep.n * rep.n);
  for (BoundKind kind : claims) {
    Verdict v;
    bool applicable = rep.t >= 1;
    if (kind == BoundKind::simple && !g.is_simple()) applicable = false;
    if (kind == BoundKind::conjectured &&
        (rep.delta_used % 2 == 0 || rep.t % 2 != 0))
      applicable = false;
    if (kind == BoundKind::triangulation && (rep.delta_used < 3 || rep.t <= 1))
      applicable = false;
    if (applicable) {
      ExactBound bound = evaluate_bound(kind, rep.delta_used, rep.t);
      v.applicable = true;
      v.squared_bound = bound.squared_value;
      v.pass = n_squared <= bound.squared_value;
      v.tight = n_squared == bound.squared_value;
    }
    rep.verdicts[kind] = std::move(v);

    if (kind == BoundKind::triangulation) {
      bool ok = true;
      const mpz_class cap = rep.delta_used - 2;
      for (size_t id = 0; id < dag.vertices.size(); ++id) {
        if (static_cast<int>(id) == dag.source || static_cast<int>(id) == dag.target)
          continue;
        const auto& dv = dag.vertices[id];
        if (dv.deg_toward_source + dv.deg_toward_target > cap) ok = false;
      }
      rep.triangulation_local_ok = ok;
    }
  }
  return rep;
}

mpz_class refined_certificate(const GeodesicDag& dag) {
  if (dag.distance == 0) return 1;
  mpz_class value = dag.vertices[dag.source].deg_toward_target *
                    dag.vertices[dag.target].deg_toward_source;
  for (long i = 1; i <= dag.distance - 1; ++i) {
    mpz_class layer_max = 0;
    for (int id : dag.layers[i]) {
      const auto& v = dag.vertices[id];
      layer_max = std::max(layer_max,
                           mpz_class(v.deg_toward_source * v.deg_toward_target));
    }
    value *= layer_max;
  }
  return value;
}

}  // namespace geodesy
