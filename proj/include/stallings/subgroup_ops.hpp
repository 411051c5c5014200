#pragma once

// Operations on subgroups given by their folded core graphs.

#include <cstddef>
#include <span>
#include <vector>

#include "stallings/core_graph.hpp"
#include "stallings/word.hpp"

namespace stallings {

// r_i = rk(H ∩ F_i) for i = 0..n. Always starts at 0 and never decreases.
class RankProfile {
 public:
  explicit RankProfile(std::vector<std::size_t> values);

  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t operator[](std::size_t i) const { return values_.at(i); }
  std::size_t size() const noexcept { return values_.size(); }

  // Largest r_i - r_{i-1}.
  std::size_t max_jump() const noexcept;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;

 private:
  std::vector<std::size_t> values_;
};

// Pullback of two folded graphs restricted to the component of the pair of
// bases; represents H_a ∩ H_b. The result is trimmed.
StallingsGraph intersect(const StallingsGraph& a, const StallingsGraph& b);

// Graph of H ∩ F_i: drops edges labelled above i, keeps the base component
// and trims.
StallingsGraph restrict_to_prefix(const StallingsGraph& h, std::size_t i);

RankProfile rank_profile(const StallingsGraph& h);

// Graph of w^-1 H w.
StallingsGraph conjugate(const StallingsGraph& h, const Word& w);

// Graph of <A ∪ B>.
StallingsGraph join(const StallingsGraph& a, const StallingsGraph& b);

// True iff the list has exactly n words and they generate F_n.
bool is_basis(std::span<const Word> words, Alphabet alphabet);

// True iff the folded graph is the one-vertex bouquet of all n loops.
bool is_whole_group(const StallingsGraph& g);

}  // namespace stallings
