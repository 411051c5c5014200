#pragma once

// Rooted edge-labelled graphs representing finitely generated subgroups of
// F_n: the wedge of generator loops, Stallings folding, trimming to the core
// (plus the stem reaching the base), and the queries the rest of the library
// is built on.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stallings/word.hpp"

namespace stallings {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// A directed edge labelled x_label. The reverse traversal reads x_label^{-1}
// and is not stored separately.
struct Edge {
  Vertex origin;
  Generator label;
  Vertex target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Byte encoding of a folded graph in its canonical breadth-first numbering.
// Two folded graphs have equal codes iff they are isomorphic as rooted
// labelled graphs.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes)
      : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::string hex() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

class StallingsGraph;

namespace detail {
StallingsGraph make_canonical(Alphabet alphabet, std::size_t num_vertices,
                              Vertex base, std::span<const Vertex> out,
                              std::span<const Vertex> in, bool trimmed);
}  // namespace detail

class StallingsGraph {
 public:
  // An arbitrary (possibly unfolded, possibly disconnected) labelled graph.
  // Vertex ids must be < num_vertices and labels inside the alphabet.
  // Folding keeps only the component of the base.
  StallingsGraph(Alphabet alphabet, std::size_t num_vertices, Vertex base,
                 std::vector<Edge> edges);

  // The graph of the trivial subgroup: one base vertex, no edges.
  static StallingsGraph trivial(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  Vertex base() const noexcept { return base_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Folded graphs are deterministic and numbered canonically (base = 0).
  bool folded() const noexcept { return folded_; }
  bool trimmed() const noexcept { return trimmed_; }

  // Number of edge ends at v; a loop contributes 2.
  std::size_t degree(Vertex v) const { return degree_.at(v); }

  // Folded graphs only: the end of the edge leaving v reading `l`, or
  // kNoVertex.
  Vertex follow(Vertex v, Letter l) const;
  Vertex out(Vertex v, Generator label) const {
    return out_[v * alphabet_.rank() + label - 1];
  }
  Vertex in(Vertex v, Generator label) const {
    return in_[v * alphabet_.rank() + label - 1];
  }

 private:
  friend StallingsGraph detail::make_canonical(Alphabet, std::size_t, Vertex,
                                               std::span<const Vertex>,
                                               std::span<const Vertex>, bool);

  StallingsGraph(Alphabet alphabet) : alphabet_(alphabet) {}

  Alphabet alphabet_;
  std::size_t num_vertices_ = 0;
  Vertex base_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
  bool folded_ = false;
  bool trimmed_ = false;
  std::vector<Vertex> out_;
  std::vector<Vertex> in_;
};

// Throws std::invalid_argument unless g is folded.
void require_folded_graph(const StallingsGraph& g, const char* what);

// Wedge of one loop per generator at the base, each spelling its generator.
// Identity generators contribute nothing.
StallingsGraph bouquet(std::span<const Word> gens, Alphabet alphabet);

// The bouquet of the first k standard generators, i.e. the graph of F_k.
StallingsGraph standard_bouquet(Alphabet alphabet, std::size_t k);

// Stallings folding through a disjoint-set worklist of clashing vertices.
// The result is deterministic, connected and canonically numbered.
StallingsGraph fold(const StallingsGraph& g);

// Repeatedly deletes non-base vertices of degree <= 1.
StallingsGraph trim(const StallingsGraph& g);

// trim(fold(bouquet(gens)))
StallingsGraph subgroup_graph(std::span<const Word> gens, Alphabet alphabet);

// First Betti number |E| - |V| + 1. When every vertex has degree >= 2 the
// value is checked against 1 + sum_v (deg(v) - 2) / 2 and a mismatch throws
// std::logic_error.
std::size_t rank(const StallingsGraph& g);

// The degree-sum form of the Betti number, defined only when every vertex has
// degree >= 2.
std::optional<long> betti_by_degree_sum(const StallingsGraph& g);

// Counters for the degree-sum cross-check performed inside rank().
struct RankAudit {
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
};

RankAudit rank_audit() noexcept;
void reset_rank_audit() noexcept;

// End of the path from `from` reading w, or kNoVertex if it leaves the graph.
Vertex trace(const StallingsGraph& g, Vertex from, const Word& w);

bool contains(const StallingsGraph& g, const Word& w);

// Breadth-first spanning tree rooted at the base.
struct SpanningTree {
  // parent_edge[v] indexes g.edges(); kNoVertex for the base.
  std::vector<std::uint32_t> parent_edge;
  std::vector<bool> in_tree;  // indexed like g.edges()
  std::vector<Word> path;     // label of the tree path base -> v
};

SpanningTree spanning_tree(const StallingsGraph& g);

// Free basis read off the non-tree edges: path(origin) * x * path(target)^-1.
std::vector<Word> basis(const StallingsGraph& g);

// Index of the subgroup when the graph is a complete covering (every vertex has
// one outgoing and one incoming edge per label), otherwise nullopt.
std::optional<std::size_t> is_finite_index(const StallingsGraph& g);

CanonicalCode canonical_code(const StallingsGraph& g);

// Graphviz description; the base is drawn as a double circle.
std::string to_dot(const StallingsGraph& g);

}  // namespace stallings
