#pragma once

// Desk-scale experiments: enumerate small core graphs, test inertia and
// compression of a fixed subgroup against them, scan the Hanna Neumann bound,
// and a brute-force membership oracle that never looks at a graph.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "stallings/core_graph.hpp"
#include "stallings/word.hpp"

namespace stallings {

enum class EnumMode { exhaustive, sampled };

struct EnumBudget {
  std::size_t max_vertices = 3;
  std::optional<std::size_t> max_graphs;
  std::uint64_t seed = 0;
  EnumMode mode = EnumMode::exhaustive;
  // Exhaustive mode refuses n * max_vertices above this.
  std::size_t slot_limit = 14;
};

// Calls `visit` on every folded trimmed core graph with at most
// budget.max_vertices vertices, once per isomorphism class; stops early when
// `visit` returns false. Exhaustive mode grows transition tables in canonical
// breadth-first order so each class appears exactly once; sampled mode folds
// random partial permutations (deterministic in the seed). Both modes dedup by
// canonical code. Throws BudgetExceeded when the exhaustive guard trips.
void for_each_core(Alphabet alphabet, const EnumBudget& budget,
                   const std::function<bool(const StallingsGraph&)>& visit);

std::vector<StallingsGraph> enumerate_cores(Alphabet alphabet,
                                            const EnumBudget& budget);

// All reduced words of length <= max_len that are products of at most
// ceil(2 max_len / min|g|) + 2 factors from gens and their inverses, keeping
// only partial products of length <= max_len + max|g|. For a Nielsen-reduced
// set such as a spanning-tree basis, that cap loses nothing. Throws
// BudgetExceeded once more than element_cap products are stored.
std::set<Word> brute_force_members(std::span<const Word> gens, Alphabet alphabet,
                                   std::size_t max_len,
                                   std::size_t element_cap = 2'000'000);

struct InertiaViolation {
  CanonicalCode g;
  std::size_t rk_cap;  // rk(H ∩ G)
  std::size_t rk_g;
};

struct InertiaReport {
  std::size_t tested = 0;
  std::vector<InertiaViolation> violations;  // sorted by code
  std::chrono::duration<double> elapsed{};
};

// rk(H ∩ G) <= rk(G) for every G in the family.
InertiaReport test_inert(const StallingsGraph& h,
                         std::span<const StallingsGraph> family,
                         unsigned jobs = 1);
InertiaReport test_inert(const StallingsGraph& h, const EnumBudget& budget,
                         unsigned jobs = 1);

struct CompressionReport {
  std::size_t rank = 0;
  std::size_t quotients_tested = 0;  // distinct folded quotients completed
  bool exhaustive = true;            // every quotient was completed
  std::size_t min_overgroup_rank = 0;
  bool compressed = true;
  std::optional<CanonicalCode> witness;  // a quotient of smaller rank
};

enum class QuotientMethod {
  partitions,  // every set partition, in restricted growth string order
  morphisms,   // label-preserving maps onto folded graphs, grown edge by edge
};

// Calls visit(trimmed quotient) for every folded quotient of h's graph. The
// partition method may repeat a quotient; the morphism method never does.
void for_each_quotient(const StallingsGraph& h, QuotientMethod method,
                       const std::function<void(const StallingsGraph&)>& visit,
                       std::size_t max_nodes = 50'000'000);

// Every overgroup of H factors through a folded quotient of H's graph, so the
// least rank of an overgroup is the least rank over all folded quotients.
// Graphs with at most max_partition_vertices vertices have every partition
// tested. Larger graphs use the morphism search pruned to quotients of rank
// below the best found so far; it completes only those candidates, and the
// report says so. The witness is the smallest code of least rank. Throws
// BudgetExceeded after max_nodes partial maps.
CompressionReport test_compressed(const StallingsGraph& h,
                                  std::size_t max_partition_vertices = 9,
                                  std::size_t max_nodes = 50'000'000);

struct HnViolation {
  CanonicalCode g1;
  CanonicalCode g2;
  std::size_t rk_cap;
  std::size_t bound;
};

struct HnReport {
  std::size_t tested = 0;  // unordered pairs, including G1 = G2
  std::vector<HnViolation> violations;
  std::chrono::duration<double> elapsed{};
};

// rk(G1 ∩ G2) <= 1 + (r1 - 1)(r2 - 1) over pairs of positive rank.
HnReport hn_bound_scan(Alphabet alphabet, const EnumBudget& budget,
                       unsigned jobs = 1);

// For H <= G, checks rk(G ∩ F_i) >= rk(H ∩ F_i) for every i. The inequality is
// guaranteed when H is echelon for the standard basis. Throws NotASubgroup
// when H is not contained in G.
bool rank_chain_check(const StallingsGraph& h, const StallingsGraph& g);

}  // namespace stallings
