#pragma once

// Endomorphisms of F_n given by the images of the generators.

#include <optional>
#include <span>
#include <vector>

#include "stallings/core_graph.hpp"
#include "stallings/word.hpp"

namespace stallings {

class Endomorphism {
 public:
  // images[i] is the image of x_{i+1}; exactly n images are required.
  Endomorphism(Alphabet alphabet, std::vector<Word> images);

  static Endomorphism identity(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image_of(Generator g) const { return images_.at(g - 1); }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

// Fixes every generator except possibly x_moved, which goes to `image`.
class OneGenEndo {
 public:
  OneGenEndo(Alphabet alphabet, Generator moved, Word image);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  Generator moved() const noexcept { return moved_; }
  const Word& image() const noexcept { return image_; }
  bool is_identity() const;

  Endomorphism as_endomorphism() const;

  friend bool operator==(const OneGenEndo&, const OneGenEndo&) = default;

 private:
  Alphabet alphabet_;
  Generator moved_;
  Word image_;
};

// Substitutes the images and reduces.
Word apply(const Endomorphism& e, const Word& w);

// Apply `first`, then `second`: images are apply(second, first.images()).
Endomorphism compose(const Endomorphism& first, const Endomorphism& second);

// Runs 1-generator subgroup endomorphisms one after another. Each step acts on
// the current free basis slot by slot: step k replaces slot `moved` by its
// image, with the image's letter x_j standing for the current content of slot
// j. Returns the map x_j -> final content of slot j, whose image is the last
// subgroup of the chain.
Endomorphism run_pipeline(std::span<const OneGenEndo> steps, Alphabet alphabet);

// Graph of the image subgroup F_n e.
StallingsGraph image(const Endomorphism& e);

// The moved generator and its image when at most one generator is moved.
// The identity is reported with moved index n.
std::optional<OneGenEndo> as_one_generator(const Endomorphism& e);

bool is_automorphism(const Endomorphism& e);

// True iff e(g) = g for every listed word.
bool fixes(const Endomorphism& e, std::span<const Word> gens);

}  // namespace stallings
