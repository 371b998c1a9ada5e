#include "geodesy/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace geodesy {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

mpz_class parse_mpz(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty integer");
  size_t start = tok[0] == '-' ? 1 : 0;
  if (start == tok.size()) throw std::invalid_argument("bad integer");
  for (size_t i = start; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw std::invalid_argument("bad integer");
  return mpz_class(tok, 10);  // explicit base: leading zeros are not octal
}

}  // namespace

MultiGraph MultiGraph::from_edges(
    const std::vector<std::tuple<std::string, std::string, mpz_class>>& edges,
    const std::vector<std::string>& extra_vertices) {
  MultiGraph g;
  for (const auto& [u, v, m] : edges) {
    if (u == v) throw DomainError("self-loop at vertex '" + u + "'");
    if (m <= 0)
      throw DomainError("non-positive multiplicity on edge {" + u + "," + v + "}");
    g.index_.emplace(u, 0);
    g.index_.emplace(v, 0);
  }
  for (const auto& v : extra_vertices) g.index_.emplace(v, 0);

  g.names_.reserve(g.index_.size());
  for (auto& [name, idx] : g.index_) {
    idx = static_cast<int>(g.names_.size());
    g.names_.push_back(name);
  }

  std::map<std::pair<int, int>, mpz_class> merged;
  for (const auto& [u, v, m] : edges) {
    int ui = g.index_.at(u), vi = g.index_.at(v);
    if (ui > vi) std::swap(ui, vi);
    merged[{ui, vi}] += m;
  }
  g.edges_.reserve(merged.size());
  for (auto& [key, m] : merged)
    g.edges_.push_back(Edge{key.first, key.second, std::move(m)});

  g.adj_.assign(g.names_.size(), {});
  g.degrees_.assign(g.names_.size(), 0);
  for (size_t e = 0; e < g.edges_.size(); ++e) {
    const Edge& ed = g.edges_[e];
    g.adj_[ed.u].push_back(Incidence{ed.v, static_cast<int>(e)});
    g.adj_[ed.v].push_back(Incidence{ed.u, static_cast<int>(e)});
    g.degrees_[ed.u] += ed.mult;
    g.degrees_[ed.v] += ed.mult;
  }
  for (auto& inc : g.adj_)
    std::sort(inc.begin(), inc.end(), [](const Incidence& a, const Incidence& b) {
      return a.other < b.other;
    });
  return g;
}

MultiGraph MultiGraph::parse(const std::string& text, GraphFormat format) {
  return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_json(text);
}

MultiGraph MultiGraph::parse_edge_list(const std::string& text) {
  std::vector<std::tuple<std::string, std::string, mpz_class>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2 && toks.size() != 3)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'u v [mult]', got " + std::to_string(toks.size()) +
                       " fields");
    mpz_class mult = 1;
    if (toks.size() == 3) {
      try {
        mult = parse_mpz(toks[2]);
      } catch (const std::invalid_argument&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad multiplicity '" +
                         toks[2] + "'");
      }
    }
    if (mult <= 0)
      throw ParseError("line " + std::to_string(lineno) +
                       ": multiplicity must be positive");
    if (toks[0] == toks[1])
      throw ParseError("line " + std::to_string(lineno) + ": self-loop at '" +
                       toks[0] + "'");
    edges.emplace_back(toks[0], toks[1], mult);
  }
  return from_edges(edges);
}

MultiGraph MultiGraph::parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph JSON must be an object");
  std::vector<std::string> vertices;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw ParseError("'vertices' must be an array");
    for (const auto& v : doc["vertices"]) {
      if (!v.is_string()) throw ParseError("vertex ids must be strings");
      vertices.push_back(v.get<std::string>());
    }
  }
  std::vector<std::tuple<std::string, std::string, mpz_class>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v"))
        throw ParseError("each edge needs 'u' and 'v'");
      std::string u = e["u"].get<std::string>();
      std::string v = e["v"].get<std::string>();
      mpz_class mult = 1;
      if (e.contains("mult")) {
        const auto& m = e["mult"];
        try {
          if (m.is_string())
            mult = parse_mpz(m.get<std::string>());
          else if (m.is_number_integer())
            mult = mpz_class(std::to_string(m.get<long long>()));
          else
            throw std::invalid_argument("type");
        } catch (const std::invalid_argument&) {
          throw ParseError("bad mult on edge {" + u + "," + v + "}");
        }
      }
      if (mult <= 0) throw ParseError("multiplicity must be positive");
      if (u == v) throw ParseError("self-loop at '" + u + "'");
      edges.emplace_back(u, v, mult);
    }
  }
  return from_edges(edges, vertices);
}

std::string MultiGraph::to_edge_list() const {
  for (int v = 0; v < num_vertices(); ++v)
    if (adj_[v].empty())
      throw DomainError("edge-list format cannot represent isolated vertex '" +
                        names_[v] + "'; use JSON");
  std::ostringstream out;
  for (const Edge& e : edges_)
    out << names_[e.u] << ' ' << names_[e.v] << ' ' << e.mult.get_str() << '\n';
  return out.str();
}

std::string MultiGraph::to_json(
    const std::vector<std::pair<std::string, std::string>>& metadata) const {
  nlohmann::ordered_json doc;
  doc["vertices"] = names_;
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : edges_) {
    nlohmann::ordered_json rec;
    rec["u"] = names_[e.u];
    rec["v"] = names_[e.v];
    if (e.mult.fits_slong_p())
      rec["mult"] = e.mult.get_si();
    else
      rec["mult"] = e.mult.get_str();
    edges.push_back(std::move(rec));
  }
  doc["edges"] = std::move(edges);
  for (const auto& [key, value] : metadata) doc[key] = value;
  return doc.dump(2) + "\n";
}

std::optional<int> MultiGraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int MultiGraph::index_of(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw DomainError("unknown vertex '" + name + "'");
  return *idx;
}

mpz_class MultiGraph::max_degree() const {
  mpz_class best = 0;
  for (const auto& d : degrees_) best = std::max(best, d);
  return best;
}

bool MultiGraph::is_simple() const {
  for (const Edge& e : edges_)
    if (e.mult != 1) return false;
  return true;
}

std::optional<long> MultiGraph::girth() const {
  for (const Edge& e : edges_)
    if (e.mult >= 2) return 2;  // a parallel pair is a 2-cycle

  // Simple skeleton from here on. BFS from every root; a non-tree edge (u,w)
  // seen from root r closes a walk of length d(u)+d(w)+1 that contains a
  // cycle no longer than that, and the minimum over all roots is exact.
  const int n = num_vertices();
  long best = std::numeric_limits<long>::max();
  std::vector<int> dist(n), parent_edge(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : adj_[v]) {
        if (dist[inc.other] == -1) {
          dist[inc.other] = dist[v] + 1;
          parent_edge[inc.other] = inc.edge;
          queue.push_back(inc.other);
        }
      }
    }
    for (size_t e = 0; e < edges_.size(); ++e) {
      const Edge& ed = edges_[e];
      if (dist[ed.u] == -1 || dist[ed.v] == -1) continue;
      if (parent_edge[ed.u] == static_cast<int>(e) ||
          parent_edge[ed.v] == static_cast<int>(e))
        continue;
      best = std::min(best, static_cast<long>(dist[ed.u]) + dist[ed.v] + 1);
    }
  }
  if (best == std::numeric_limits<long>::max()) return std::nullopt;
  return best;
}

WeightedGraph WeightedGraph::from_edges(
    const std::vector<std::tuple<std::string, std::string, mpq_class>>& edges) {
  WeightedGraph g;
  for (const auto& [u, v, w] : edges) {
    if (u == v) throw DomainError("self-loop at vertex '" + u + "'");
    if (w < 0) throw DomainError("negative weight on edge {" + u + "," + v + "}");
    g.index_.emplace(u, 0);
    g.index_.emplace(v, 0);
  }
  for (auto& [name, idx] : g.index_) {
    idx = static_cast<int>(g.names_.size());
    g.names_.push_back(name);
  }
  std::map<std::pair<int, int>, mpq_class> merged;
  for (const auto& [u, v, w] : edges) {
    int ui = g.index_.at(u), vi = g.index_.at(v);
    if (ui > vi) std::swap(ui, vi);
    merged[{ui, vi}] += w;
  }
  for (auto& [key, w] : merged)
    g.edges_.push_back(Edge{key.first, key.second, std::move(w)});
  return g;
}

WeightedGraph WeightedGraph::parse_edge_list(const std::string& text) {
  std::vector<std::tuple<std::string, std::string, mpq_class>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v w'");
    if (toks[0] == toks[1])
      throw ParseError("line " + std::to_string(lineno) + ": self-loop at '" +
                       toks[0] + "'");
    mpq_class w;
    try {
      w = parse_rational(toks[2]);
    } catch (const std::invalid_argument&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad weight '" +
                       toks[2] + "'");
    }
    edges.emplace_back(toks[0], toks[1], w);
  }
  return from_edges(edges);
}

int WeightedGraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw DomainError("unknown vertex '" + name + "'");
  return it->second;
}

mpq_class parse_rational(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty rational");
  auto slash = token.find('/');
  if (slash != std::string::npos) {
    mpz_class num = parse_mpz(token.substr(0, slash));
    mpz_class den = parse_mpz(token.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  auto dot = token.find('.');
  if (dot != std::string::npos) {
    std::string digits = token.substr(0, dot) + token.substr(dot + 1);
    if (digits.empty()) throw std::invalid_argument("bad decimal");
    mpz_class num = parse_mpz(digits);
    mpz_class den = 1;
    for (size_t i = dot + 1; i < token.size(); ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  return mpq_class(parse_mpz(token));
}

}  // namespace geodesy
