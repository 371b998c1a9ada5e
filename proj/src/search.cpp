#include "geodesy/search.hpp"

#include <algorithm>
#include <atomic>
#include <tuple>

namespace geodesy {

namespace {

std::string zero_pad(long value, int width) {
  std::string digits = std::to_string(value);
  return std::string(std::max(0, width - static_cast<int>(digits.size())), '0') +
         digits;
}

struct ItemBest {
  bool any = false;
  mpz_class count;
  std::string serialized;
  LayeredProfile profile;
};

// Depth-first enumeration for one interior-size vector. Matrices are chosen
// layer by layer; inside a matrix, entries row by row. Canonicity: columns
// non-increasing lexicographically, and rows non-increasing within classes
// of vertices whose incoming columns agree. Every orbit under per-layer
// vertex permutations has a representative satisfying both (take the
// row-major lexicographic maximum), so the pruning is lossless.
class ProfileSearch {
 public:
  ProfileSearch(long delta, long t, const SearchOptions& opt,
                std::atomic<unsigned long long>& nodes, std::atomic<bool>& abort)
      : delta_(delta), t_(t), opt_(opt), nodes_(nodes), abort_(abort) {
    geom_.resize(t + 1);
    geom_[0] = 1;
    for (long i = 1; i <= t; ++i) geom_[i] = geom_[i - 1] * (delta_ - 1);
  }

  void run(const std::vector<long>& interior_sizes) {
    profile_.sizes.assign(1, 1);
    for (long s : interior_sizes) profile_.sizes.push_back(s);
    profile_.sizes.push_back(1);
    profile_.matrices.assign(t_, {});
    col_sum_.assign(t_, {});
    col_tied_.assign(t_, {});
    row_sum_.assign(t_, {});
    layer_in_ = {0};
    layer_group_ = {0};
    layer_count_ = {mpz_class(1)};
    descend(0);
  }

  unsigned long long leaves = 0;
  ItemBest best;

 private:
  void descend(size_t i) {
    if (abort_.load(std::memory_order_relaxed)) return;
    const long rows = profile_.rows(i);
    const long cols = profile_.cols(i);
    profile_.matrices[i].assign(static_cast<size_t>(rows) * cols, 0);
    row_sum_[i].assign(rows, 0);
    col_sum_[i].assign(cols, 0);
    col_tied_[i].assign(cols, 1);  // col_tied[j]: columns j-1, j equal so far
    place(i, 0, 0, false);
  }

  void place(size_t i, long r, long c, bool row_tied) {
    if (abort_.load(std::memory_order_relaxed)) return;
    const long rows = profile_.rows(i);
    const long cols = profile_.cols(i);
    auto& mat = profile_.matrices[i];
    auto& row_sum = row_sum_[i];
    auto& col_sum = col_sum_[i];
    auto& col_tied = col_tied_[i];

    if (c == cols) {  // row complete; row sum >= 1 was enforced at the last column
      std::vector<uint8_t> saved = col_tied;
      for (long j = 1; j < cols; ++j)
        col_tied[j] = col_tied[j] && mat[idx(i, r, j - 1)] == mat[idx(i, r, j)];
      if (r + 1 == rows)
        complete_matrix(i);
      else
        place(i, r + 1, 0, layer_group_[r + 1] == layer_group_[r]);
      col_tied = saved;
      return;
    }

    const long colmax = (i + 1 < static_cast<size_t>(t_)) ? delta_ - 1 : delta_;
    long hi = std::min(delta_ - layer_in_[r] - row_sum[r], colmax - col_sum[c]);
    if (opt_.simple) hi = std::min(hi, 1L);
    if (row_tied) hi = std::min(hi, mat[idx(i, r - 1, c)]);
    if (c > 0 && col_tied[c]) hi = std::min(hi, mat[idx(i, r, c - 1)]);

    long lo = 0;
    if (c == cols - 1 && row_sum[r] == 0) lo = 1;                 // row needs an edge
    if (r == rows - 1 && col_sum[c] == 0) lo = std::max(lo, 1L);  // column too

    for (long e = hi; e >= lo; --e) {
      mat[idx(i, r, c)] = e;
      row_sum[r] += e;
      col_sum[c] += e;
      place(i, r, c + 1, row_tied && e == mat[idx(i, r - 1, c)]);
      row_sum[r] -= e;
      col_sum[c] -= e;
    }
    mat[idx(i, r, c)] = 0;
  }

  void complete_matrix(size_t i) {
    unsigned long long seen = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > opt_.node_limit) {
      abort_.store(true, std::memory_order_relaxed);
      return;
    }

    const long rows = profile_.rows(i);
    const long cols = profile_.cols(i);
    const auto& col_sum = col_sum_[i];
    const auto& col_tied = col_tied_[i];

    std::vector<mpz_class> next_count(cols, 0);
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c)
        if (long e = profile_.matrices[i][idx(i, r, c)]; e > 0)
          next_count[c] += layer_count_[r] * e;

    if (i + 1 == static_cast<size_t>(t_)) {
      leaf(next_count[0]);
      return;
    }

    // Branch and bound: a completion multiplies each vertex's count by at
    // most its remaining out-capacity, then by delta-1 per later layer.
    if (best.any) {
      mpz_class ub = 0;
      for (long c = 0; c < cols; ++c) ub += next_count[c] * (delta_ - col_sum[c]);
      ub *= geom_[t_ - i - 2];
      if (ub < best.count) return;
    }

    std::vector<long> saved_in = std::move(layer_in_);
    std::vector<int> saved_group = std::move(layer_group_);
    std::vector<mpz_class> saved_count = std::move(layer_count_);

    layer_in_.assign(col_sum.begin(), col_sum.end());
    layer_group_.assign(cols, 0);
    for (long c = 1; c < cols; ++c)
      layer_group_[c] = col_tied[c] ? layer_group_[c - 1] : layer_group_[c - 1] + 1;
    layer_count_ = std::move(next_count);

    descend(i + 1);

    layer_in_ = std::move(saved_in);
    layer_group_ = std::move(saved_group);
    layer_count_ = std::move(saved_count);
  }

  void leaf(const mpz_class& count) {
    ++leaves;
    if (opt_.on_profile) opt_.on_profile(profile_, count);
    if (best.any && count < best.count) return;
    std::string serialized = profile_to_graph(profile_).graph.to_edge_list();
    if (!best.any || count > best.count ||
        (count == best.count && serialized < best.serialized)) {
      best.any = true;
      best.count = count;
      best.serialized = std::move(serialized);
      best.profile = profile_;
    }
  }

  size_t idx(size_t i, long r, long c) const {
    return static_cast<size_t>(r) * profile_.cols(i) + c;
  }

  long delta_;
  long t_;
  const SearchOptions& opt_;
  std::atomic<unsigned long long>& nodes_;
  std::atomic<bool>& abort_;

  LayeredProfile profile_;
  std::vector<long> layer_in_;    // in-multiplicity of the current layer
  std::vector<int> layer_group_;  // equal-history classes of the current layer
  std::vector<mpz_class> layer_count_;
  std::vector<std::vector<long>> row_sum_;
  std::vector<std::vector<long>> col_sum_;
  std::vector<std::vector<uint8_t>> col_tied_;
  std::vector<mpz_class> geom_;  // (delta-1)^k
};

}  // namespace

RealizedProfile profile_to_graph(const LayeredProfile& profile) {
  const size_t t = profile.matrices.size();
  long max_size = 1;
  for (long s : profile.sizes) max_size = std::max(max_size, s);
  const int lw = static_cast<int>(std::to_string(std::max<size_t>(1, t)).size());
  const int vw = static_cast<int>(std::to_string(max_size - 1).size());

  auto vertex_name = [&](size_t layer, long index) -> std::string {
    if (layer == 0) return "x";
    if (layer == t) return "y";
    return "l" + zero_pad(static_cast<long>(layer), lw) + "v" + zero_pad(index, vw);
  };

  std::vector<std::tuple<std::string, std::string, mpz_class>> edges;
  for (size_t i = 0; i < t; ++i)
    for (long r = 0; r < profile.rows(i); ++r)
      for (long c = 0; c < profile.cols(i); ++c)
        if (long e = profile.entry(i, r, c); e > 0)
          edges.emplace_back(vertex_name(i, r), vertex_name(i + 1, c), e);
  return RealizedProfile{MultiGraph::from_edges(edges), "x", "y"};
}

SearchResult search_max_count(long delta, long t, const SearchOptions& options) {
  if (delta < 2) throw DomainError("search needs delta >= 2");
  if (t < 1) throw DomainError("search needs t >= 1");
  if (options.layer_cap < 1) throw DomainError("search needs layer_cap >= 1");

  // Interior size vectors, filtered by degree feasibility in both directions.
  auto feasible = [&](const std::vector<long>& s) {
    for (size_t i = 0; i < s.size(); ++i) {
      long prev = i == 0 ? 1 : s[i - 1];
      long next = i + 1 == s.size() ? 1 : s[i + 1];
      long in_capacity = prev * (i == 0 ? delta : delta - 1);
      long out_capacity = next * (i + 1 == s.size() ? delta : delta - 1);
      if (s[i] > in_capacity || s[i] > out_capacity) return false;
    }
    return true;
  };
  std::vector<std::vector<long>> items;
  if (t == 1) {
    items.push_back({});
  } else {
    std::vector<long> sizes(t - 1, 1);
    while (true) {
      if (feasible(sizes)) items.push_back(sizes);
      size_t pos = 0;
      while (pos < sizes.size() && sizes[pos] == options.layer_cap) {
        sizes[pos] = 1;
        ++pos;
      }
      if (pos == sizes.size()) break;
      ++sizes[pos];
    }
  }

  std::atomic<unsigned long long> nodes{0};
  std::atomic<bool> abort{false};
  std::vector<ItemBest> bests(items.size());
  std::vector<unsigned long long> leaves(items.size(), 0);

#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, options.jobs)) \
    if(options.jobs > 1)
  for (long idx = 0; idx < static_cast<long>(items.size()); ++idx) {
    if (abort.load(std::memory_order_relaxed)) continue;
    ProfileSearch search(delta, t, options, nodes, abort);
    search.run(items[idx]);
    bests[idx] = std::move(search.best);
    leaves[idx] = search.leaves;
  }

  if (abort.load())
    throw DomainError("search budget exceeded (node limit " +
                      std::to_string(options.node_limit) + ")");

  SearchResult result;
  result.layer_cap = options.layer_cap;
  result.simple_mode = options.simple;
  for (unsigned long long l : leaves) result.profiles_explored += l;

  const ItemBest* chosen = nullptr;
  for (const auto& b : bests) {
    if (!b.any) continue;
    if (!chosen || b.count > chosen->count ||
        (b.count == chosen->count && b.serialized < chosen->serialized))
      chosen = &b;
  }
  if (!chosen) throw DomainError("search space empty");
  result.max_count = chosen->count;
  RealizedProfile realized = profile_to_graph(chosen->profile);
  result.witness = std::move(realized.graph);
  result.witness_x = realized.x;
  result.witness_y = realized.y;
  return result;
}

}  // namespace geodesy
