#include "geodesy/filling.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "json.hpp"

namespace geodesy {
namespace f2 {

size_t BitVec::popcount() const {
  size_t total = 0;
  for (uint64_t w : words_) total += static_cast<size_t>(std::popcount(w));
  return total;
}

bool BitVec::dot(const BitVec& other) const {
  uint64_t acc = 0;
  for (size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::vector<size_t> BitVec::ones() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < bits_; ++i)
    if (get(i)) out.push_back(i);
  return out;
}

ChainComplexF2::ChainComplexF2(
    std::vector<std::vector<std::string>> face_ids,
    std::vector<std::vector<std::vector<size_t>>> boundaries)
    : face_ids_(std::move(face_ids)) {
  const int d = dimension();
  face_index_.resize(d + 1);
  for (int k = 0; k <= d; ++k)
    for (size_t j = 0; j < face_ids_[k].size(); ++j)
      face_index_[k].emplace(face_ids_[k][j], j);

  rows_.resize(d + 1);
  for (int k = 1; k <= d; ++k) {
    rows_[k].assign(face_ids_[k - 1].size(), BitVec(face_ids_[k].size()));
    for (size_t j = 0; j < face_ids_[k].size(); ++j)
      for (size_t i : boundaries[k][j]) rows_[k][i].flip(j);
  }

  // Fundamental identity: the boundary of every face's boundary vanishes.
  for (int k = 2; k <= d; ++k) {
    for (size_t j = 0; j < face_ids_[k].size(); ++j) {
      BitVec acc(face_ids_[k - 2].size());
      for (size_t f : boundaries[k][j])
        for (size_t i : boundaries[k - 1][f]) acc.flip(i);
      if (!acc.is_zero())
        throw DomainError("boundary of boundary is nonzero at face '" +
                          face_ids_[k][j] + "'");
    }
  }
}

size_t ChainComplexF2::face_index(int k, const std::string& id) const {
  if (k < 0 || k > dimension()) throw DomainError("no faces of dimension " +
                                                  std::to_string(k));
  auto it = face_index_[k].find(id);
  if (it == face_index_[k].end())
    throw DomainError("unknown " + std::to_string(k) + "-face '" + id + "'");
  return it->second;
}

size_t ChainComplexF2::top_codegree() const {
  size_t best = 0;
  const int d = dimension();
  if (d < 1) return 0;
  for (const BitVec& row : rows_[d]) best = std::max(best, row.popcount());
  return best;
}

namespace {

std::string coord_id(const char* prefix, std::initializer_list<long> coords) {
  std::string out = prefix;
  out += ':';
  bool first = true;
  for (long c : coords) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out;
}

// Shared cubical builder; grid2d and the cube surface are special cases.
ChainComplexF2 build_cubical3(long p, long q, long r, bool include_cubes) {
  std::vector<std::vector<std::string>> ids(include_cubes ? 4 : 3);
  std::vector<std::vector<std::vector<size_t>>> bnd(include_cubes ? 4 : 3);

  std::map<std::string, size_t> vid, eid, fid;
  auto add_vertex = [&](long x, long y, long z) {
    std::string id = coord_id("v", {x, y, z});
    if (!vid.count(id)) {
      vid[id] = ids[0].size();
      ids[0].push_back(id);
    }
  };
  for (long z = 0; z <= r; ++z)
    for (long y = 0; y <= q; ++y)
      for (long x = 0; x <= p; ++x) add_vertex(x, y, z);

  bnd[1] = {};
  auto add_edge = [&](const std::string& id, const std::string& a,
                      const std::string& b) {
    eid[id] = ids[1].size();
    ids[1].push_back(id);
    bnd[1].push_back({vid.at(a), vid.at(b)});
  };
  for (long z = 0; z <= r; ++z)
    for (long y = 0; y <= q; ++y)
      for (long x = 0; x <= p; ++x) {
        if (x < p)
          add_edge(coord_id("ex", {x, y, z}), coord_id("v", {x, y, z}),
                   coord_id("v", {x + 1, y, z}));
        if (y < q)
          add_edge(coord_id("ey", {x, y, z}), coord_id("v", {x, y, z}),
                   coord_id("v", {x, y + 1, z}));
        if (z < r)
          add_edge(coord_id("ez", {x, y, z}), coord_id("v", {x, y, z}),
                   coord_id("v", {x, y, z + 1}));
      }

  auto add_square = [&](const std::string& id, std::initializer_list<std::string> edges) {
    fid[id] = ids[2].size();
    ids[2].push_back(id);
    std::vector<size_t> b;
    for (const auto& e : edges) b.push_back(eid.at(e));
    bnd[2].push_back(std::move(b));
  };
  for (long z = 0; z <= r; ++z)
    for (long y = 0; y <= q; ++y)
      for (long x = 0; x <= p; ++x) {
        if (x < p && y < q)
          add_square(coord_id("fxy", {x, y, z}),
                     {coord_id("ex", {x, y, z}), coord_id("ex", {x, y + 1, z}),
                      coord_id("ey", {x, y, z}), coord_id("ey", {x + 1, y, z})});
        if (y < q && z < r)
          add_square(coord_id("fyz", {x, y, z}),
                     {coord_id("ey", {x, y, z}), coord_id("ey", {x, y, z + 1}),
                      coord_id("ez", {x, y, z}), coord_id("ez", {x, y + 1, z})});
        if (z < r && x < p)
          add_square(coord_id("fzx", {x, y, z}),
                     {coord_id("ez", {x, y, z}), coord_id("ez", {x + 1, y, z}),
                      coord_id("ex", {x, y, z}), coord_id("ex", {x, y, z + 1})});
      }

  if (include_cubes) {
    for (long z = 0; z < r; ++z)
      for (long y = 0; y < q; ++y)
        for (long x = 0; x < p; ++x) {
          ids[3].push_back(coord_id("c", {x, y, z}));
          bnd[3].push_back({fid.at(coord_id("fxy", {x, y, z})),
                            fid.at(coord_id("fxy", {x, y, z + 1})),
                            fid.at(coord_id("fyz", {x, y, z})),
                            fid.at(coord_id("fyz", {x + 1, y, z})),
                            fid.at(coord_id("fzx", {x, y, z})),
                            fid.at(coord_id("fzx", {x, y + 1, z}))});
        }
  }
  return ChainComplexF2(std::move(ids), std::move(bnd));
}

}  // namespace

ChainComplexF2 build_grid2d(long p, long q) {
  if (p < 1 || q < 1) throw DomainError("grid2d needs p, q >= 1");
  std::vector<std::vector<std::string>> ids(3);
  std::vector<std::vector<std::vector<size_t>>> bnd(3);
  std::map<std::string, size_t> vid, eid;

  for (long y = 0; y <= q; ++y)
    for (long x = 0; x <= p; ++x) {
      std::string id = coord_id("v", {x, y});
      vid[id] = ids[0].size();
      ids[0].push_back(id);
    }
  auto add_edge = [&](const std::string& id, const std::string& a,
                      const std::string& b) {
    eid[id] = ids[1].size();
    ids[1].push_back(id);
    bnd[1].push_back({vid.at(a), vid.at(b)});
  };
  for (long y = 0; y <= q; ++y)
    for (long x = 0; x <= p; ++x) {
      if (x < p)
        add_edge(coord_id("ex", {x, y}), coord_id("v", {x, y}),
                 coord_id("v", {x + 1, y}));
      if (y < q)
        add_edge(coord_id("ey", {x, y}), coord_id("v", {x, y}),
                 coord_id("v", {x, y + 1}));
    }
  for (long y = 0; y < q; ++y)
    for (long x = 0; x < p; ++x) {
      ids[2].push_back(coord_id("f", {x, y}));
      bnd[2].push_back({eid.at(coord_id("ex", {x, y})),
                        eid.at(coord_id("ex", {x, y + 1})),
                        eid.at(coord_id("ey", {x, y})),
                        eid.at(coord_id("ey", {x + 1, y}))});
    }
  return ChainComplexF2(std::move(ids), std::move(bnd));
}

ChainComplexF2 build_grid3d(long p, long q, long r) {
  if (p < 1 || q < 1 || r < 1) throw DomainError("grid3d needs p, q, r >= 1");
  return build_cubical3(p, q, r, true);
}

ChainComplexF2 build_cube_surface() { return build_cubical3(1, 1, 1, false); }

ChainComplexF2 build_simplicial(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad complex JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("faces"))
    throw ParseError("complex JSON needs 'dimension' and 'faces'");
  if (!doc["dimension"].is_number_integer())
    throw ParseError("'dimension' must be an integer");
  const long d = doc["dimension"].get<long>();
  if (d < 1) throw ParseError("dimension must be >= 1");
  if (!doc["faces"].is_array()) throw ParseError("'faces' must be an array");

  auto label = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError("face vertices must be strings or integers");
  };

  // Collect every sub-simplex of every top face, keyed by sorted vertex tuple.
  std::vector<std::set<std::vector<std::string>>> simplices(d + 1);
  for (const auto& face : doc["faces"]) {
    if (!face.is_array() || static_cast<long>(face.size()) != d + 1)
      throw ParseError("each top face needs exactly " + std::to_string(d + 1) +
                       " vertices");
    std::vector<std::string> verts;
    for (const auto& v : face) verts.push_back(label(v));
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
      throw DomainError("degenerate face with repeated vertex");
    // All nonempty subsets, by bitmask over d+1 vertices.
    for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
      std::vector<std::string> sub;
      for (long i = 0; i <= d; ++i)
        if (mask & (1u << i)) sub.push_back(verts[i]);
      simplices[sub.size() - 1].insert(std::move(sub));
    }
  }

  auto face_id = [](const std::vector<std::string>& verts) {
    std::string id;
    for (size_t i = 0; i < verts.size(); ++i) {
      if (i) id += ',';
      id += verts[i];
    }
    return id;
  };

  std::vector<std::vector<std::string>> ids(d + 1);
  std::vector<std::map<std::string, size_t>> index(d + 1);
  for (long k = 0; k <= d; ++k)
    for (const auto& verts : simplices[k]) {
      index[k][face_id(verts)] = ids[k].size();
      ids[k].push_back(face_id(verts));
    }

  std::vector<std::vector<std::vector<size_t>>> bnd(d + 1);
  for (long k = 1; k <= d; ++k) {
    for (const auto& verts : simplices[k]) {
      std::vector<size_t> b;
      for (size_t omit = 0; omit < verts.size(); ++omit) {
        std::vector<std::string> sub;
        for (size_t i = 0; i < verts.size(); ++i)
          if (i != omit) sub.push_back(verts[i]);
        b.push_back(index[k - 1].at(face_id(sub)));
      }
      bnd[k].push_back(std::move(b));
    }
  }
  return ChainComplexF2(std::move(ids), std::move(bnd));
}

ChainF2 make_chain(const ChainComplexF2& x, int k,
                   const std::vector<std::string>& ids) {
  ChainF2 c{k, BitVec(x.face_count(k))};
  for (const auto& id : ids) c.support.flip(x.face_index(k, id));
  return c;
}

ChainF2 boundary(const ChainComplexF2& x, const ChainF2& f) {
  if (f.dim < 1) throw DomainError("0-chains have no boundary");
  if (f.dim > x.dimension()) throw DomainError("chain dimension exceeds complex");
  ChainF2 out{f.dim - 1, BitVec(x.face_count(f.dim - 1))};
  const auto& rows = x.boundary_rows(f.dim);
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].dot(f.support)) out.support.set(i, true);
  return out;
}

bool is_cycle(const ChainComplexF2& x, const ChainF2& c) {
  if (c.dim == 0) return true;
  return boundary(x, c).support.is_zero();
}

namespace {

struct Eliminated {
  bool consistent = true;
  BitVec particular;
  std::vector<BitVec> kernel;
};

// Dense row-reduction of [A | b] where row i of A is rows[i].
Eliminated solve_f2(const std::vector<BitVec>& rows, const BitVec& b, size_t ncols) {
  std::vector<BitVec> work = rows;
  std::vector<uint8_t> aug(rows.size(), 0);
  for (size_t i = 0; i < rows.size(); ++i) aug[i] = b.get(i);

  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < work.size(); ++col) {
    size_t pivot = rank;
    while (pivot < work.size() && !work[pivot].get(col)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rank], work[pivot]);
    std::swap(aug[rank], aug[pivot]);
    for (size_t i = 0; i < work.size(); ++i) {
      if (i != rank && work[i].get(col)) {
        work[i] ^= work[rank];
        aug[i] ^= aug[rank];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }

  Eliminated out;
  for (size_t i = rank; i < work.size(); ++i)
    if (aug[i]) {
      out.consistent = false;
      return out;
    }

  std::vector<uint8_t> is_pivot(ncols, 0);
  for (size_t col : pivot_col) is_pivot[col] = 1;

  out.particular = BitVec(ncols);
  for (size_t rnk = 0; rnk < pivot_col.size(); ++rnk)
    if (aug[rnk]) out.particular.set(pivot_col[rnk], true);

  for (size_t col = 0; col < ncols; ++col) {
    if (is_pivot[col]) continue;
    BitVec v(ncols);
    v.set(col, true);
    for (size_t rnk = 0; rnk < pivot_col.size(); ++rnk)
      if (work[rnk].get(col)) v.set(pivot_col[rnk], true);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

struct BlockAccum {
  size_t min_weight = SIZE_MAX;
  uint64_t count = 0;
  std::vector<uint64_t> masks;  // smallest coefficient masks at min weight
};

void record(BlockAccum& acc, size_t weight, uint64_t mask, size_t list_cap) {
  if (weight < acc.min_weight) {
    acc.min_weight = weight;
    acc.count = 1;
    acc.masks.assign(1, mask);
    return;
  }
  if (weight != acc.min_weight) return;
  ++acc.count;
  if (acc.masks.size() < list_cap || mask < acc.masks.back()) {
    auto pos = std::lower_bound(acc.masks.begin(), acc.masks.end(), mask);
    acc.masks.insert(pos, mask);
    if (acc.masks.size() > list_cap) acc.masks.pop_back();
  }
}

// Walks one block of the coset in Gray-code order. `high` selects the fixed
// top kernel coefficients; `low_bits` coefficients are swept incrementally.
BlockAccum sweep_block(const BitVec& particular, const std::vector<BitVec>& kernel,
                       uint64_t high, int low_bits, size_t list_cap) {
  BlockAccum acc;
  BitVec cur = particular;
  for (int bit = 0; high >> bit; ++bit)
    if ((high >> bit) & 1) cur ^= kernel[low_bits + bit];
  uint64_t high_mask = high << low_bits;
  record(acc, cur.popcount(), high_mask, list_cap);
  for (uint64_t s = 1; s < (uint64_t(1) << low_bits); ++s) {
    cur ^= kernel[std::countr_zero(s)];
    uint64_t mask = high_mask | (s ^ (s >> 1));
    record(acc, cur.popcount(), mask, list_cap);
  }
  return acc;
}

}  // namespace

FillingResult minimal_fillings(const ChainComplexF2& x, const ChainF2& c,
                               int kernel_cap, size_t list_cap, int jobs) {
  if (c.dim + 1 > x.dimension())
    throw DomainError("no faces one dimension above the chain");
  if (!is_cycle(x, c)) throw DomainError("chain is not a cycle");

  const size_t ncols = x.face_count(c.dim + 1);
  Eliminated sol = solve_f2(x.boundary_rows(c.dim + 1), c.support, ncols);
  if (!sol.consistent) throw DomainError("no filling exists");

  const int k = static_cast<int>(sol.kernel.size());
  if (k > kernel_cap) throw KernelCapExceeded(k, kernel_cap);

  const int high_bits = (jobs > 1 && k > 4) ? std::min(k, 10) : 0;
  const int low_bits = k - high_bits;
  const uint64_t blocks = uint64_t(1) << high_bits;

  std::vector<BlockAccum> accs(blocks);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs)) \
    if(jobs > 1)
  for (long long b = 0; b < static_cast<long long>(blocks); ++b)
    accs[b] = sweep_block(sol.particular, sol.kernel, static_cast<uint64_t>(b),
                          low_bits, list_cap);

  FillingResult out;
  out.kernel_dim = k;
  size_t best = SIZE_MAX;
  for (const auto& acc : accs) best = std::min(best, acc.min_weight);
  out.m = best;
  std::vector<uint64_t> masks;
  for (const auto& acc : accs) {
    if (acc.min_weight != best) continue;
    out.count += acc.count;
    masks.insert(masks.end(), acc.masks.begin(), acc.masks.end());
  }
  std::sort(masks.begin(), masks.end());
  if (masks.size() > list_cap) masks.resize(list_cap);

  for (uint64_t mask : masks) {
    ChainF2 w{c.dim + 1, sol.particular};
    for (int bit = 0; bit < k; ++bit)
      if ((mask >> bit) & 1) w.support ^= sol.kernel[bit];
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

bool is_irreducible(const ChainComplexF2& x, const ChainF2& c) {
  if (!is_cycle(x, c)) throw DomainError("chain is not a cycle");
  if (c.support.is_zero()) return true;
  const auto supp = c.support.ones();
  if (c.dim == 0) return supp.size() == 1;

  // Restrict the boundary matrix to the support columns and count its
  // nullity; the restricted nullspace is {0, c} exactly when it is 1.
  const auto& rows = x.boundary_rows(c.dim);
  std::vector<BitVec> restricted(rows.size(), BitVec(supp.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < supp.size(); ++j)
      if (rows[i].get(supp[j])) restricted[i].set(j, true);
  Eliminated sol = solve_f2(restricted, BitVec(rows.size()), supp.size());
  return sol.kernel.size() == 1;
}

}  // namespace f2
}  // namespace geodesy
