#pragma once

/**
 * Dense simple graphs on vertex set {0, ..., n-1}, stored as one adjacency
 * bitset per vertex. Every graph handled by the library is a subgraph of
 * K_n, so density queries, common neighbourhoods and clique extension all
 * reduce to word-wise row intersections.
 */

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliquedec/bigint.hpp"
#include "cliquedec/bitset.hpp"
#include "cliquedec/errors.hpp"

#ifndef CLIQUEDEC_MAX_VERTICES
#define CLIQUEDEC_MAX_VERTICES 4096
#endif

namespace cliquedec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = CLIQUEDEC_MAX_VERTICES;

constexpr auto pairs(std::int64_t n) -> std::int64_t { return n * (n - 1) / 2; }

class DenseGraph {
 public:
  DenseGraph() = default;

  explicit DenseGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, " +
                                  std::to_string(kMaxVertices) + "]");
    rows_.assign(n, Bitset(n));
  }

  static auto complete(int n) -> DenseGraph {
    DenseGraph g(n);
    for (Vertex v = 0; v < n; ++v) {
      g.rows_[v].set_all();
      g.rows_[v].reset(v);
    }
    g.m_ = pairs(n);
    return g;
  }

  static auto from_edges(int n, std::span<const Edge> edges) -> DenseGraph {
    DenseGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  auto order() const -> int { return n_; }
  auto edge_count() const -> std::int64_t { return m_; }

  // m / binom(n, 2); zero for n < 2.
  auto density() const -> double {
    return n_ < 2 ? 0.0 : static_cast<double>(m_) / static_cast<double>(pairs(n_));
  }

  auto adjacent(Vertex u, Vertex v) const -> bool { return rows_[u].test(v); }
  auto neighbors(Vertex v) const -> const Bitset& { return rows_[v]; }
  auto degree(Vertex v) const -> int { return rows_[v].count(); }

  // Adds {u,v}; a no-op when already present.
  auto add_edge(Vertex u, Vertex v) -> void {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (rows_[u].test(v)) return;
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
  }

  auto remove_edge(Vertex u, Vertex v) -> void {
    if (u == v || !rows_[u].test(v))
      throw PreconditionViolation("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} is not present");
    rows_[u].reset(v);
    rows_[v].reset(u);
    --m_;
  }

  // Edge count recomputed from the rows, independent of the cached m.
  auto recount_edges() const -> std::int64_t {
    std::int64_t total = 0;
    for (const auto& row : rows_) total += row.count();
    return total / 2;
  }

  auto edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
      rows_[u].for_each([&](int v) {
        if (v > u) out.emplace_back(u, v);
      });
    return out;
  }

  auto check_vertex(Vertex v) const -> void {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                  std::to_string(n_));
  }

  friend auto operator==(const DenseGraph&, const DenseGraph&) -> bool = default;

 private:
  int n_ = 0;
  std::vector<Bitset> rows_;
  std::int64_t m_ = 0;
};

// The intersection of the neighbourhoods of every vertex in `a`. Members of
// `a` are not excluded by fiat; they drop out only because the graph has no
// self-loops.
inline auto common_neighborhood_bits(const DenseGraph& g, std::span<const Vertex> a) -> Bitset {
  if (a.empty()) throw std::invalid_argument("common_neighborhood: vertex set is empty");
  for (auto v : a) g.check_vertex(v);
  Bitset result = g.neighbors(a.front());
  for (auto v : a.subspan(1)) result &= g.neighbors(v);
  return result;
}

inline auto common_neighborhood(const DenseGraph& g, std::span<const Vertex> a) -> std::vector<Vertex> {
  return common_neighborhood_bits(g, a).to_vector();
}

inline auto is_clique(const DenseGraph& g, std::span<const Vertex> c) -> bool {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] == c[j] || !g.adjacent(c[i], c[j])) return false;
  return true;
}

namespace detail {

template <typename F>
auto extend_cliques(const DenseGraph& g, std::vector<Vertex>& current, const Bitset& candidates,
                    int remaining, F& visit) -> bool {
  if (remaining == 0) return visit(std::span<const Vertex>(current));
  bool keep_going = true;
  candidates.for_each([&](int v) {
    if (!keep_going) return;
    Bitset next = candidates & g.neighbors(v);
    next.clear_through(v);
    current.push_back(v);
    keep_going = extend_cliques(g, current, next, remaining - 1, visit);
    current.pop_back();
  });
  return keep_going;
}

}  // namespace detail

// Visits every k-clique once, as an increasing vertex list, in
// lexicographic order. The visitor returns false to stop early.
template <typename F>
auto for_each_clique(const DenseGraph& g, int k, F&& visit) -> void {
  if (k < 1 || k > g.order()) return;
  Bitset all(g.order());
  all.set_all();
  std::vector<Vertex> current;
  current.reserve(k);
  detail::extend_cliques(g, current, all, k, visit);
}

// Exact number of k-vertex cliques. The last extension level is counted by
// popcount instead of being visited.
inline auto count_cliques(const DenseGraph& g, int k) -> BigInt {
  if (k < 1) throw std::invalid_argument("count_cliques: k must be >= 1");
  const int n = g.order();
  if (k > n) return 0;
  if (k == 1) return n;
  if (k == 2) return g.edge_count();

  BigInt total = 0;
  std::uint64_t pending = 0;
  auto flush = [&] {
    total += pending;
    pending = 0;
  };
  auto recurse = [&](auto&& self, const Bitset& candidates, int remaining) -> void {
    if (remaining == 1) {
      pending += static_cast<std::uint64_t>(candidates.count());
      if (pending > (std::uint64_t{1} << 62)) flush();
      return;
    }
    candidates.for_each([&](int v) {
      Bitset next = candidates & g.neighbors(v);
      next.clear_through(v);
      if (next.count() >= remaining - 1) self(self, next, remaining - 1);
    });
  };
  Bitset all(n);
  all.set_all();
  recurse(recurse, all, k);
  flush();
  return total;
}

// Deletes the binom(|c|,2) edges inside c. Every pair must be present;
// otherwise nothing is modified and PreconditionViolation is thrown.
inline auto remove_clique_edges(DenseGraph& g, std::span<const Vertex> c) -> void {
  for (auto v : c) g.check_vertex(v);
  if (!is_clique(g, c)) throw PreconditionViolation("remove_clique_edges: vertex set is not a clique");
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) g.remove_edge(c[i], c[j]);
}

inline auto without_clique_edges(DenseGraph g, std::span<const Vertex> c) -> DenseGraph {
  remove_clique_edges(g, c);
  return g;
}

}  // namespace cliquedec
