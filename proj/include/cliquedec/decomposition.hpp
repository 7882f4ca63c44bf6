#pragma once

/**
 * Clique decompositions of K_n (equivalently, linear spaces on n labelled
 * points): a list of vertex sets such that every pair of vertices lies in
 * exactly one of them.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquedec/graph.hpp"

namespace cliquedec {

// A part of a decomposition. Vertices are kept sorted; callers may build
// invalid cliques (size < 2, repeats) and validate() reports them.
class Clique {
 public:
  Clique() = default;
  explicit Clique(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
  }
  Clique(std::initializer_list<Vertex> vertices) : Clique(std::vector<Vertex>(vertices)) {}

  auto vertices() const -> const std::vector<Vertex>& { return vertices_; }
  auto size() const -> int { return static_cast<int>(vertices_.size()); }
  auto edge_count() const -> std::int64_t { return pairs(size()); }

  friend auto operator<=>(const Clique&, const Clique&) = default;
  friend auto operator==(const Clique&, const Clique&) -> bool = default;

 private:
  std::vector<Vertex> vertices_;
};

struct CliqueDecomposition {
  int n = 0;
  std::vector<Clique> cliques;

  // Cliques sorted lexicographically; vertex lists are sorted already.
  auto canonical() const -> CliqueDecomposition {
    CliqueDecomposition out = *this;
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
  }

  friend auto operator==(const CliqueDecomposition&, const CliqueDecomposition&) -> bool = default;
};

struct Violation {
  enum class Kind { uncovered_edge, repeated_edge, undersized_clique, vertex_out_of_range, repeated_vertex };

  Kind kind;
  Edge edge{-1, -1};     // edge kinds
  int clique_index = -1; // clique kinds
  int multiplicity = 0;  // repeated_edge: how many cliques cover it
};

inline auto to_string(Violation::Kind kind) -> std::string {
  switch (kind) {
    case Violation::Kind::uncovered_edge: return "uncovered_edge";
    case Violation::Kind::repeated_edge: return "repeated_edge";
    case Violation::Kind::undersized_clique: return "undersized_clique";
    case Violation::Kind::vertex_out_of_range: return "vertex_out_of_range";
    case Violation::Kind::repeated_vertex: return "repeated_vertex";
  }
  return "unknown";
}

struct ValidationResult {
  std::vector<Violation> violations;

  auto ok() const -> bool { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

inline auto validate(const CliqueDecomposition& d) -> ValidationResult {
  ValidationResult result;
  const int n = d.n;
  if (n < 0) {
    result.violations.push_back({Violation::Kind::vertex_out_of_range});
    return result;
  }
  std::vector<int> coverage(static_cast<std::size_t>(pairs(n)), 0);
  auto slot = [n](Vertex u, Vertex v) {
    return static_cast<std::size_t>(static_cast<std::int64_t>(u) * n - pairs(u + 1) + (v - u - 1));
  };

  for (int i = 0; i < static_cast<int>(d.cliques.size()); ++i) {
    const auto& vs = d.cliques[i].vertices();
    if (vs.size() < 2) result.violations.push_back({Violation::Kind::undersized_clique, {-1, -1}, i});
    if (std::any_of(vs.begin(), vs.end(), [n](Vertex v) { return v < 0 || v >= n; })) {
      result.violations.push_back({Violation::Kind::vertex_out_of_range, {-1, -1}, i});
      continue;
    }
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
      result.violations.push_back({Violation::Kind::repeated_vertex, {-1, -1}, i});
      continue;
    }
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) ++coverage[slot(vs[a], vs[b])];
  }

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const int c = coverage[slot(u, v)];
      if (c == 0) result.violations.push_back({Violation::Kind::uncovered_edge, {u, v}});
      if (c > 1) result.violations.push_back({Violation::Kind::repeated_edge, {u, v}, -1, c});
    }
  return result;
}

// Clique counts by size at cutoff L. Cliques with more than L vertices only
// contribute their edges to oversized_edges (E).
struct Profile {
  int n = 0;
  int cutoff = 0;
  std::vector<std::int64_t> counts;  // counts[k - 2] = s_k for 2 <= k <= cutoff
  std::int64_t oversized_edges = 0;

  auto s(int k) const -> std::int64_t {
    return k >= 2 && k <= cutoff ? counts[static_cast<std::size_t>(k - 2)] : 0;
  }

  // sum_k binom(k,2) s_k + E; equals binom(n,2) for a valid decomposition.
  auto covered_edges() const -> std::int64_t {
    std::int64_t total = oversized_edges;
    for (int k = 2; k <= cutoff; ++k) total += pairs(k) * s(k);
    return total;
  }

  auto clique_total() const -> std::int64_t {
    std::int64_t total = 0;
    for (auto c : counts) total += c;
    return total;
  }

  friend auto operator<=>(const Profile&, const Profile&) = default;
  friend auto operator==(const Profile&, const Profile&) -> bool = default;
};

// Profile from a size histogram: histogram[k] = number of k-cliques.
inline auto profile_from_histogram(int n, int cutoff, const std::vector<std::int64_t>& histogram) -> Profile {
  if (cutoff < 2) throw std::invalid_argument("profile: cutoff must be >= 2");
  Profile p;
  p.n = n;
  p.cutoff = cutoff;
  p.counts.assign(static_cast<std::size_t>(cutoff - 1), 0);
  for (int k = 2; k < static_cast<int>(histogram.size()); ++k) {
    if (k <= cutoff)
      p.counts[static_cast<std::size_t>(k - 2)] += histogram[k];
    else
      p.oversized_edges += pairs(k) * histogram[k];
  }
  return p;
}

inline auto size_histogram(const CliqueDecomposition& d) -> std::vector<std::int64_t> {
  std::vector<std::int64_t> histogram(static_cast<std::size_t>(std::max(d.n, 2)) + 1, 0);
  for (const auto& c : d.cliques) ++histogram.at(static_cast<std::size_t>(c.size()));
  return histogram;
}

inline auto profile(const CliqueDecomposition& d, int cutoff) -> Profile {
  if (cutoff < 2) throw std::invalid_argument("profile: cutoff must be >= 2");
  if (!validate(d)) throw std::invalid_argument("profile: decomposition is not valid");
  return profile_from_histogram(d.n, cutoff, size_histogram(d));
}

// The graph left after deleting the edges of the first `prefix` cliques
// from K_n, i.e. G_m for the given order.
inline auto uncovered_graph(const CliqueDecomposition& d, std::size_t prefix) -> DenseGraph {
  if (prefix > d.cliques.size()) throw std::invalid_argument("uncovered_graph: prefix exceeds clique count");
  auto g = DenseGraph::complete(d.n);
  for (std::size_t i = 0; i < prefix; ++i) remove_clique_edges(g, d.cliques[i].vertices());
  return g;
}

}  // namespace cliquedec
