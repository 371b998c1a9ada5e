#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace geodesy {

/// Input text could not be parsed; the message carries the offending line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its domain (no path, bound not applicable,
/// budget exceeded, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

enum class GraphFormat { edge_list, json };

/// Undirected multigraph. Parallel edges between a vertex pair are stored as
/// a single record with an integer multiplicity; self-loops are rejected.
/// Vertex ids are opaque strings ordered lexicographically, so indices and
/// every derived quantity are deterministic for a given vertex/edge set.
/// Immutable after construction; safe for shared concurrent reads.
class MultiGraph {
 public:
  struct Edge {
    int u = 0;  // u < v
    int v = 0;
    mpz_class mult;
  };
  struct Incidence {
    int other;
    int edge;  // index into edges()
  };

  MultiGraph() = default;

  /// Build from (u, v, mult) triples. Records for the same unordered pair are
  /// merged by summing multiplicities. extra_vertices may add isolated
  /// vertices. Throws DomainError on self-loops or non-positive mults.
  static MultiGraph from_edges(
      const std::vector<std::tuple<std::string, std::string, mpz_class>>& edges,
      const std::vector<std::string>& extra_vertices = {});

  static MultiGraph parse(const std::string& text, GraphFormat format);
  /// Lines "u v m" (m optional, default 1); '#' starts a comment; blank lines
  /// are skipped. Repeated lines for a pair sum their multiplicities.
  static MultiGraph parse_edge_list(const std::string& text);
  /// {"vertices": [...], "edges": [{"u":.., "v":.., "mult":..}]}; mult may be
  /// a number or a decimal string and defaults to 1. Unknown keys are ignored.
  static MultiGraph parse_json(const std::string& text);

  std::string to_edge_list() const;
  /// Serializes to the JSON format; metadata entries (e.g. a designated
  /// vertex pair) are emitted as extra top-level string fields.
  std::string to_json(
      const std::vector<std::pair<std::string, std::string>>& metadata = {}) const;

  int num_vertices() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  std::optional<int> find(const std::string& name) const;
  /// Index of a vertex id; throws DomainError for unknown ids.
  int index_of(const std::string& name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Incidence>& incident(int v) const { return adj_[v]; }

  /// Multiplicity-weighted degree.
  const mpz_class& degree(int v) const { return degrees_[v]; }
  mpz_class max_degree() const;
  bool is_simple() const;

  /// Length of the shortest cycle; 2 if any edge has mult >= 2; nullopt for
  /// forests.
  std::optional<long> girth() const;

  bool operator==(const MultiGraph& other) const {
    if (names_ != other.names_ || edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
      const Edge& a = edges_[i];
      const Edge& b = other.edges_[i];
      if (a.u != b.u || a.v != b.v || a.mult != b.mult) return false;
    }
    return true;
  }

 private:
  std::vector<std::string> names_;  // sorted lexicographically
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;  // sorted by (u, v)
  std::vector<std::vector<Incidence>> adj_;
  std::vector<mpz_class> degrees_;
};

/// Undirected graph with rational edge weights (used by the random-walk
/// quantizer). No self-loops; weights nonnegative.
class WeightedGraph {
 public:
  struct Edge {
    int u = 0;
    int v = 0;
    mpq_class weight;
  };

  WeightedGraph() = default;

  static WeightedGraph from_edges(
      const std::vector<std::tuple<std::string, std::string, mpq_class>>& edges);

  /// Lines "u v w" with w a decimal ("0.375") or a fraction ("3/8").
  /// Repeated lines for a pair sum their weights.
  static WeightedGraph parse_edge_list(const std::string& text);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int index_of(const std::string& name) const;
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;
};

/// Parses a nonnegative rational from "p/q", "3", or "0.25".
mpq_class parse_rational(const std::string& token);

}  // namespace geodesy
