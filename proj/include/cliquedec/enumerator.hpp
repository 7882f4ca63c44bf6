#pragma once

/**
 * Exact enumeration of clique decompositions of K_n.
 *
 * Canonical method: the state is the graph of still-uncovered pairs. Take
 * its lexicographically smallest edge {u,v}; the part containing it must be
 * {u,v} plus a clique T of the uncovered graph inside N(u) cap N(v). Branch
 * over every such T, remove the part's pairs, recurse. The part holding the
 * smallest uncovered edge is forced, so each decomposition appears once.
 *
 * Exact-cover method: columns are the pairs of K_n, rows are all vertex
 * subsets of size >= 2. Shares nothing with the canonical recursion.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "cliquedec/bigint.hpp"
#include "cliquedec/decomposition.hpp"
#include "cliquedec/errors.hpp"
#include "cliquedec/exact_cover.hpp"
#include "cliquedec/parallel.hpp"

namespace cliquedec {

inline constexpr int kDefaultEnumerationCap = 7;
inline constexpr int kEnumerationHardLimit = 11;  // binom(11,2) = 55 pair slots
inline constexpr int kExactCoverLimit = 7;
inline constexpr int kDefaultCutoff = 11;

enum class EnumerationMethod { canonical, exact_cover };

inline auto to_string(EnumerationMethod m) -> std::string {
  return m == EnumerationMethod::canonical ? "canonical" : "exact-cover";
}

struct EnumerationOptions {
  bool force = false;  // allow n above kDefaultEnumerationCap
  int threads = 0;
};

struct EnumerationResult {
  int n = 0;
  int cutoff = 0;
  BigInt total = 0;
  std::map<Profile, BigInt> by_profile;
  std::chrono::duration<double> elapsed{};
  EnumerationMethod method = EnumerationMethod::canonical;
};

namespace detail {

using VertexMask = std::uint16_t;
using SizeHistogram = std::array<std::uint8_t, kEnumerationHardLimit + 1>;

// Per-vertex masks of uncovered partners, plus the clique-size histogram of
// the parts placed so far.
struct UncoveredState {
  std::array<VertexMask, kEnumerationHardLimit> partners{};
  SizeHistogram histogram{};
  int n = 0;

  static auto complete(int n) -> UncoveredState {
    UncoveredState s;
    s.n = n;
    const auto all = static_cast<VertexMask>((1U << n) - 1U);
    for (int v = 0; v < n; ++v) s.partners[v] = static_cast<VertexMask>(all & ~(1U << v));
    return s;
  }

  // Lexicographically smallest uncovered edge; u = -1 when none remain.
  auto smallest_edge() const -> std::pair<int, int> {
    for (int u = 0; u < n; ++u)
      if (partners[u] != 0) return {u, std::countr_zero(static_cast<unsigned>(partners[u]))};
    return {-1, -1};
  }

  auto place(VertexMask part) const -> UncoveredState {
    UncoveredState next = *this;
    for (unsigned rest = part; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      next.partners[x] = static_cast<VertexMask>(next.partners[x] & ~part);
    }
    ++next.histogram[std::popcount(static_cast<unsigned>(part))];
    return next;
  }
};

inline auto check_enumeration_size(int n, bool force) -> void {
  if (n < 1) throw std::invalid_argument("enumeration: n must be >= 1");
  if (n > kEnumerationHardLimit)
    throw InfeasibleRequest("enumeration: n=" + std::to_string(n) + " exceeds the hard limit of " +
                            std::to_string(kEnumerationHardLimit));
  if (n > kDefaultEnumerationCap && !force)
    throw InfeasibleRequest("enumeration: n=" + std::to_string(n) + " exceeds the default cap of " +
                            std::to_string(kDefaultEnumerationCap) +
                            "; counts grow superexponentially (pass force to override)");
}

// Every part containing the state's smallest uncovered edge, as masks.
// sorted: increasing size, then lexicographic on the sorted vertex list.
inline auto candidate_parts(const UncoveredState& s, int u, int v, bool sorted) -> std::vector<VertexMask> {
  std::vector<VertexMask> parts;
  const auto base = static_cast<VertexMask>((1U << u) | (1U << v));
  auto grow = [&](auto&& self, VertexMask part, unsigned extend) -> void {
    parts.push_back(part);
    for (unsigned rest = extend; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      const unsigned higher = ~((2U << w) - 1U);
      self(self, static_cast<VertexMask>(part | (1U << w)), extend & s.partners[w] & higher);
    }
  };
  grow(grow, base, static_cast<unsigned>(s.partners[u] & s.partners[v]));
  if (sorted)
    std::sort(parts.begin(), parts.end(), [](VertexMask a, VertexMask b) {
      const int pa = std::popcount(static_cast<unsigned>(a));
      const int pb = std::popcount(static_cast<unsigned>(b));
      if (pa != pb) return pa < pb;
      const unsigned diff = static_cast<unsigned>(a ^ b);
      return diff != 0 && (a & (diff & (0U - diff))) != 0;
    });
  return parts;
}

using HistogramCounts = std::map<SizeHistogram, BigInt>;

inline auto count_below(const UncoveredState& s, HistogramCounts& out) -> void {
  const auto [u, v] = s.smallest_edge();
  if (u < 0) {
    ++out[s.histogram];
    return;
  }
  for (auto part : candidate_parts(s, u, v, false)) count_below(s.place(part), out);
}

// States after placing up to `depth` parts; terminal states stay terminal.
inline auto frontier(const UncoveredState& root, int depth) -> std::vector<UncoveredState> {
  std::vector<UncoveredState> level{root};
  for (int d = 0; d < depth; ++d) {
    std::vector<UncoveredState> next;
    for (const auto& s : level) {
      const auto [u, v] = s.smallest_edge();
      if (u < 0) {
        next.push_back(s);
        continue;
      }
      for (auto part : candidate_parts(s, u, v, false)) next.push_back(s.place(part));
    }
    level = std::move(next);
  }
  return level;
}

inline auto to_histogram_vector(const SizeHistogram& h) -> std::vector<std::int64_t> {
  return {h.begin(), h.end()};
}

inline auto mask_to_clique(VertexMask mask) -> Clique {
  std::vector<Vertex> vs;
  for (unsigned rest = mask; rest != 0; rest &= rest - 1) vs.push_back(std::countr_zero(rest));
  return Clique(std::move(vs));
}

inline auto finish(int n, int cutoff, const HistogramCounts& counts) -> std::map<Profile, BigInt> {
  std::map<Profile, BigInt> by_profile;
  for (const auto& [hist, count] : counts) by_profile[profile_from_histogram(n, cutoff, to_histogram_vector(hist))] += count;
  return by_profile;
}

}  // namespace detail

// Number of clique decompositions of K_n, total and by profile at `cutoff`.
inline auto count_all(int n, int cutoff = kDefaultCutoff, EnumerationOptions options = {}) -> EnumerationResult {
  detail::check_enumeration_size(n, options.force);
  if (cutoff < 2) throw std::invalid_argument("enumeration: cutoff must be >= 2");
  const auto start = std::chrono::steady_clock::now();

  // The top two recursion levels become independent subtasks.
  const auto tasks = detail::frontier(detail::UncoveredState::complete(n), 2);
  std::vector<detail::HistogramCounts> partial(tasks.size());
  parallel_for(tasks.size(), options.threads, [&](std::size_t i) { detail::count_below(tasks[i], partial[i]); });

  detail::HistogramCounts merged;
  for (const auto& p : partial)
    for (const auto& [hist, count] : p) merged[hist] += count;

  EnumerationResult result;
  result.n = n;
  result.cutoff = cutoff;
  result.method = EnumerationMethod::canonical;
  result.by_profile = detail::finish(n, cutoff, merged);
  for (const auto& [_, count] : result.by_profile) result.total += count;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

// Calls visit(const CliqueDecomposition&) once per decomposition, in
// canonical order: parts are listed in the order placed, and at each step
// candidate parts go by size, then lexicographically. If visit returns bool,
// false stops the stream. Exceptions from visit propagate unchanged.
template <typename Visit>
auto enumerate_stream(int n, Visit&& visit, EnumerationOptions options = {}) -> std::uint64_t {
  detail::check_enumeration_size(n, options.force);
  std::uint64_t calls = 0;
  bool stop = false;
  CliqueDecomposition current{n, {}};
  auto recurse = [&](auto&& self, const detail::UncoveredState& s) -> void {
    const auto [u, v] = s.smallest_edge();
    if (u < 0) {
      ++calls;
      if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const CliqueDecomposition&>, bool>) {
        if (!visit(static_cast<const CliqueDecomposition&>(current))) stop = true;
      } else {
        visit(static_cast<const CliqueDecomposition&>(current));
      }
      return;
    }
    for (auto part : detail::candidate_parts(s, u, v, true)) {
      if (stop) return;
      current.cliques.push_back(detail::mask_to_clique(part));
      self(self, s.place(part));
      current.cliques.pop_back();
    }
  };
  recurse(recurse, detail::UncoveredState::complete(n));
  return calls;
}

namespace detail {

struct ExactCoverInstance {
  ExactCover solver;
  std::vector<int> row_sizes;
};

inline auto build_exact_cover(int n) -> ExactCoverInstance {
  if (n < 1) throw std::invalid_argument("exact cover: n must be >= 1");
  if (n > kExactCoverLimit)
    throw InfeasibleRequest("exact cover: n=" + std::to_string(n) + " exceeds limit " +
                            std::to_string(kExactCoverLimit) + " (2^n candidate rows)");
  std::vector<std::vector<int>> column_of(n, std::vector<int>(n, -1));
  int next = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) column_of[u][v] = next++;

  ExactCoverInstance inst{ExactCover(next), {}};
  for (unsigned set = 0; set < (1U << n); ++set) {
    const int size = std::popcount(set);
    if (size < 2) continue;
    std::vector<int> cols;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((set >> u & 1U) && (set >> v & 1U)) cols.push_back(column_of[u][v]);
    inst.solver.add_row(cols);
    inst.row_sizes.push_back(size);
  }
  return inst;
}

}  // namespace detail

// Independent oracle: solution count of the exact-cover formulation.
inline auto count_exact_cover(int n) -> BigInt { return detail::build_exact_cover(n).solver.count_solutions(); }

inline auto count_exact_cover_by_profile(int n, int cutoff = kDefaultCutoff) -> EnumerationResult {
  if (cutoff < 2) throw std::invalid_argument("enumeration: cutoff must be >= 2");
  const auto start = std::chrono::steady_clock::now();
  auto inst = detail::build_exact_cover(n);
  std::map<std::vector<std::int64_t>, BigInt> counts;
  inst.solver.for_each_solution([&](std::span<const int> rows) {
    std::vector<std::int64_t> histogram(static_cast<std::size_t>(n) + 1, 0);
    for (int r : rows) ++histogram[static_cast<std::size_t>(inst.row_sizes[r])];
    ++counts[histogram];
    return true;
  });
  EnumerationResult result;
  result.n = n;
  result.cutoff = cutoff;
  result.method = EnumerationMethod::exact_cover;
  for (const auto& [hist, count] : counts) result.by_profile[profile_from_histogram(n, cutoff, hist)] += count;
  for (const auto& [_, count] : result.by_profile) result.total += count;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace cliquedec
