#include "geodesy/entropy.hpp"

#include <cmath>
#include <set>

namespace geodesy {

namespace {

// log2 of a positive big integer, good to double precision.
double log2_mpz(const mpz_class& z) {
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(d) + static_cast<double>(exp);
}

// -p log2 p with the 0 log 0 = 0 convention.
double h_term(const mpq_class& p) {
  if (p == 0) return 0.0;
  double pd = p.get_d();
  return -pd * std::log2(pd);
}

}  // namespace

double EntropyReport::sum_forward() const {
  double s = 0;
  for (double f : forward) s += f;
  return s;
}

double EntropyReport::sum_backward() const {
  double s = 0;
  for (double b : backward) s += b;
  return s;
}

double EntropyReport::two_sided_sum() const {
  if (forward.empty()) return 0;
  double s = forward.front() + backward.back();
  for (double p : paired) s += p;
  return s;
}

std::map<std::string, mpq_class> vertex_marginals(const GeodesicDag& dag, long i) {
  if (i < 0 || i > dag.distance)
    throw DomainError("layer index " + std::to_string(i) + " out of range [0, " +
                      std::to_string(dag.distance) + "]");
  std::map<std::string, mpq_class> out;
  const mpz_class& total = dag.total_count();
  for (int id : dag.layers[i]) {
    const auto& v = dag.vertices[id];
    mpq_class p(v.n_from_source * v.n_to_target, total);
    p.canonicalize();
    out.emplace(dag.names[id], std::move(p));
  }
  return out;
}

EntropyReport entropy_decomposition(const GeodesicDag& dag) {
  const long t = dag.distance;
  EntropyReport rep;
  rep.h_total = dag.total_count() == 1 ? 0.0 : log2_mpz(dag.total_count());

  mpz_class a = dag.delta / 2;
  mpz_class b = dag.delta - a;
  rep.log2_delta = dag.delta > 0 ? log2_mpz(dag.delta) : 0.0;
  rep.log2_split = a > 0 ? log2_mpz(mpz_class(a * b)) : 0.0;
  if (t == 0) return rep;

  rep.forward.assign(t, 0.0);
  rep.backward.assign(t, 0.0);

  const mpz_class& total = dag.total_count();
  for (size_t id = 0; id < dag.vertices.size(); ++id) {
    const auto& v = dag.vertices[id];
    mpq_class pr(v.n_from_source * v.n_to_target, total);
    pr.canonicalize();
    double pr_d = pr.get_d();

    // Edge toward the target: each parallel copy to w has probability
    // n_y(w) / n_y(v); contributes to f_{layer+1}.
    if (v.layer < t) {
      double h = 0;
      for (int e : dag.out_edges[id]) {
        const auto& edge = dag.edges[e];
        mpq_class p(dag.vertices[edge.to].n_to_target, v.n_to_target);
        p.canonicalize();
        h += edge.mult.get_d() * h_term(p);
      }
      rep.forward[v.layer] += pr_d * h;
    }
    // Edge toward the source: copies to u with probability n_x(u) / n_x(v);
    // contributes to b_{layer}.
    if (v.layer > 0) {
      double h = 0;
      for (int e : dag.in_edges[id]) {
        const auto& edge = dag.edges[e];
        mpq_class p(dag.vertices[edge.from].n_from_source, v.n_from_source);
        p.canonicalize();
        h += edge.mult.get_d() * h_term(p);
      }
      rep.backward[v.layer - 1] += pr_d * h;
    }
  }

  for (long i = 1; i <= t - 1; ++i)
    rep.paired.push_back(rep.forward[i] + rep.backward[i - 1]);
  return rep;
}

DegreeSplitReport check_degree_split(const GeodesicDag& dag) {
  DegreeSplitReport rep;
  for (size_t id = 0; id < dag.vertices.size(); ++id) {
    if (static_cast<int>(id) == dag.source || static_cast<int>(id) == dag.target)
      continue;
    const auto& v = dag.vertices[id];
    std::set<int> back;
    for (int e : dag.in_edges[id]) back.insert(dag.edges[e].graph_edge);
    bool disjoint = true;
    for (int e : dag.out_edges[id])
      if (back.count(dag.edges[e].graph_edge)) disjoint = false;
    bool within = v.deg_toward_source + v.deg_toward_target <= dag.delta;
    rep.all_pass = rep.all_pass && disjoint && within;
    rep.entries.push_back({dag.names[id], v.deg_toward_source,
                           v.deg_toward_target, disjoint, within});
  }
  return rep;
}

}  // namespace geodesy
