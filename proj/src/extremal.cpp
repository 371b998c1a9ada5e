#include "geodesy/extremal.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace geodesy {

namespace {

std::string padded(long value, int width) {
  std::ostringstream out;
  std::string digits = std::to_string(value);
  for (int i = static_cast<int>(digits.size()); i < width; ++i) out << '0';
  out << digits;
  return out.str();
}

int width_for(long max_value) {
  return static_cast<int>(std::to_string(std::max(1L, max_value)).size());
}

std::string group_vertex(long group, long index, int gw, int vw) {
  return "g" + padded(group, gw) + "v" + padded(index, vw);
}

using EdgeTriple = std::tuple<std::string, std::string, mpz_class>;

mpz_class pow_long(long base, long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

Generated gen_cycle_multigraph(long delta, long t) {
  if (delta < 2) throw DomainError("cycle multigraph needs delta >= 2");
  if (t < 1) throw DomainError("cycle multigraph needs t >= 1");
  const long a = delta / 2;
  const long b = delta - a;

  const long n = 2 * t;
  const int w = width_for(n - 1);
  std::vector<EdgeTriple> edges;
  for (long i = 0; i < n; ++i) {
    long j = (i + 1) % n;
    edges.emplace_back("v" + padded(i, w), "v" + padded(j, w),
                       i % 2 == 0 ? a : b);
  }
  return Generated{MultiGraph::from_edges(edges), "v" + padded(0, w),
                   "v" + padded(t, w)};
}

namespace {

void add_biclique(std::vector<EdgeTriple>& edges, long g1, long g2, long m,
                  int gw, int vw) {
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      edges.emplace_back(group_vertex(g1, i, gw, vw), group_vertex(g2, j, gw, vw), 1);
}

void add_circulant(std::vector<EdgeTriple>& edges, long g1, long g2, long m,
                   const std::vector<long>& offsets, int gw, int vw) {
  for (long i = 0; i < m; ++i)
    for (long s : offsets)
      edges.emplace_back(group_vertex(g1, i, gw, vw),
                         group_vertex(g2, (i + s) % m, gw, vw), 1);
}

// Searches per-join circulant connection sets (each containing offset 0) so
// the assembled ring has girth > target. Joins are filled in ring order with
// candidate sets tried lexicographically, backtracking on failure; every
// girth evaluation counts against the budget.
Generated high_girth_blowup(long delta, long t, long target,
                            unsigned long long budget) {
  const long k = delta / 2;
  const long ring = 2 * t + 1;
  // An all-zero-offset walk around the ring is always a cycle of length ring.
  if (ring <= target)
    throw DomainError(
        "gadget not found: a ring of " + std::to_string(ring) +
        " groups always contains a cycle of that length, so girth > " +
        std::to_string(target) + " needs t > " + std::to_string((target - 1) / 2));

  unsigned long long spent = 0;
  for (long m = std::max(k, 2L);; ++m) {
    // All k-subsets of {0..m-1} containing 0, lexicographic.
    std::vector<std::vector<long>> candidates;
    std::vector<long> cur{0};
    auto gen = [&](auto&& self, long next) -> void {
      if (static_cast<long>(cur.size()) == k) {
        candidates.push_back(cur);
        return;
      }
      for (long s = next; s < m; ++s) {
        cur.push_back(s);
        self(self, s + 1);
        cur.pop_back();
      }
    };
    gen(gen, 1);

    const int gw = width_for(ring - 1);
    const int vw = width_for(m - 1);
    std::vector<EdgeTriple> edges;
    auto dfs = [&](auto&& self, long join) -> bool {
      if (join == ring) return true;
      for (const auto& cand : candidates) {
        if (spent >= budget)
          throw DomainError("gadget not found within budget " +
                            std::to_string(budget) + " (girth target " +
                            std::to_string(target) + ")");
        ++spent;
        size_t mark = edges.size();
        add_circulant(edges, join, (join + 1) % ring, m, cand, gw, vw);
        auto girth = MultiGraph::from_edges(edges).girth();
        if ((!girth || *girth > target) && self(self, join + 1)) return true;
        edges.resize(mark);
      }
      return false;
    };
    if (dfs(dfs, 0))
      return Generated{MultiGraph::from_edges(edges), group_vertex(0, 0, gw, vw),
                       group_vertex(t, 0, gw, vw)};
  }
}

}  // namespace

Generated gen_blowup_cycle(long delta, long t, BlowupMode mode, long girth_target,
                           unsigned long long budget) {
  if (t < 1) throw DomainError("blowup cycle needs t >= 1");
  switch (mode) {
    case BlowupMode::even: {
      if (delta < 2 || delta % 2 != 0)
        throw DomainError("even blowup mode needs even delta >= 2");
      const long m = delta / 2;
      const long ring = 2 * t + 1;
      const int gw = width_for(ring - 1);
      const int vw = width_for(m - 1);
      std::vector<EdgeTriple> edges;
      for (long g = 0; g < ring; ++g)
        add_biclique(edges, g, (g + 1) % ring, m, gw, vw);
      return Generated{MultiGraph::from_edges(edges), group_vertex(0, 0, gw, vw),
                       group_vertex(t, 0, gw, vw)};
    }
    case BlowupMode::odd_alternating: {
      if (delta < 3 || delta % 2 == 0)
        throw DomainError("odd-alternating blowup mode needs odd delta >= 3");
      if (t < 2)
        throw DomainError("odd-alternating blowup mode needs t >= 2");
      const long a = delta / 2;
      const long m = delta - a;  // ceil(delta/2)
      const long ring = 2 * t;
      const int gw = width_for(ring - 1);
      const int vw = width_for(m - 1);
      std::vector<long> offsets(a);
      for (long s = 0; s < a; ++s) offsets[s] = s;
      std::vector<EdgeTriple> edges;
      for (long g = 0; g < ring; ++g) {
        if (g % 2 == 0)
          add_biclique(edges, g, (g + 1) % ring, m, gw, vw);
        else
          add_circulant(edges, g, (g + 1) % ring, m, offsets, gw, vw);
      }
      return Generated{MultiGraph::from_edges(edges), group_vertex(0, 0, gw, vw),
                       group_vertex(t, 0, gw, vw)};
    }
    case BlowupMode::high_girth:
      if (delta < 2 || delta % 2 != 0)
        throw DomainError("high-girth blowup mode needs even delta >= 2");
      return high_girth_blowup(delta, t, girth_target, budget);
  }
  throw DomainError("unknown blowup mode");
}

mpz_class closed_form_count(Family family, long delta, long t) {
  switch (family) {
    case Family::cycle_multigraph: {
      if (delta < 2 || t < 1)
        throw DomainError("no closed form: cycle multigraph needs delta >= 2, t >= 1");
      const mpz_class a = delta / 2;
      const mpz_class b = delta - a;
      mpz_class ab;
      mpz_class prod = a * b;
      if (t % 2 == 0) {
        mpz_pow_ui(ab.get_mpz_t(), prod.get_mpz_t(),
                   static_cast<unsigned long>(t / 2));
        return 2 * ab;
      }
      mpz_pow_ui(ab.get_mpz_t(), prod.get_mpz_t(),
                 static_cast<unsigned long>((t - 1) / 2));
      return mpz_class(delta) * ab;
    }
    case Family::blowup_cycle:
      if (delta < 2 || delta % 2 != 0 || t < 1)
        throw DomainError("no closed form: blowup cycle needs even delta >= 2, t >= 1");
      return pow_long(delta / 2, t - 1);
  }
  throw DomainError("no closed form for this family");
}

}  // namespace geodesy
