#pragma once

// Folding that remembers, for every edge, a word in the abstract generators
// y_1, ..., y_m of the input list. After folding, the label of any closed
// base path equals the evaluation of the product of those words, so
// membership answers come with an explicit factorization.

#include <optional>
#include <span>
#include <vector>

#include "stallings/core_graph.hpp"
#include "stallings/word.hpp"

namespace stallings {

class GeneratorWitness {
 public:
  GeneratorWitness(std::span<const Word> gens, Alphabet alphabet);

  // Alphabet of the abstract generators (rank max(1, gens.size())).
  const Alphabet& generator_alphabet() const noexcept { return gen_alphabet_; }

  // A word over generator_alphabet() evaluating to w, or nullopt if w is not
  // in the subgroup.
  std::optional<Word> express(const Word& w) const;

  // The folded (untrimmed) graph the witnesses live on.
  StallingsGraph graph() const;

 private:
  struct WitnessEdge {
    Vertex origin;
    Generator label;
    Vertex target;
    Word witness;
  };

  Alphabet alphabet_;
  Alphabet gen_alphabet_;
  Vertex base_ = 0;
  std::size_t num_vertices_ = 0;
  std::vector<WitnessEdge> edges_;
};

// Substitutes gens[j-1] for y_j in `expression`.
Word evaluate(const Word& expression, std::span<const Word> gens,
              Alphabet alphabet);

// Given a basis (z_1, ..., z_n) of F_n, returns words W_1, ..., W_n with
// W_l(z_1, ..., z_n) = x_l, i.e. the images of the inverse substitution.
// Throws NotABasis otherwise.
std::vector<Word> invert_basis(std::span<const Word> basis_words,
                               Alphabet alphabet);

}  // namespace stallings
