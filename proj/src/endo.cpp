#include "stallings/endo.hpp"

#include <string>

#include "stallings/subgroup_ops.hpp"

namespace stallings {

Endomorphism::Endomorphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(alphabet), images_(std::move(images)) {
  if (images_.size() != alphabet_.rank()) {
    throw IndexOutOfRange("endomorphism of F_" + std::to_string(alphabet_.rank()) +
                          " needs " + std::to_string(alphabet_.rank()) +
                          " images, got " + std::to_string(images_.size()));
  }
  for (const Word& w : images_) {
    require_same_alphabet(alphabet_, w.alphabet(), "Endomorphism");
  }
}

Endomorphism Endomorphism::identity(Alphabet alphabet) {
  std::vector<Word> images;
  for (Generator g = 1; g <= alphabet.rank(); ++g) {
    images.push_back(Word::generator(alphabet, g));
  }
  return Endomorphism(alphabet, std::move(images));
}

OneGenEndo::OneGenEndo(Alphabet alphabet, Generator moved, Word image)
    : alphabet_(alphabet), moved_(moved), image_(std::move(image)) {
  if (!alphabet_.contains(moved_)) {
    throw IndexOutOfRange("moved generator x" + std::to_string(moved_) +
                          " outside alphabet of rank " +
                          std::to_string(alphabet_.rank()));
  }
  require_same_alphabet(alphabet_, image_.alphabet(), "OneGenEndo");
}

bool OneGenEndo::is_identity() const {
  return image_ == Word::generator(alphabet_, moved_);
}

Endomorphism OneGenEndo::as_endomorphism() const {
  Endomorphism id = Endomorphism::identity(alphabet_);
  std::vector<Word> images = id.images();
  images[moved_ - 1] = image_;
  return Endomorphism(alphabet_, std::move(images));
}

Word apply(const Endomorphism& e, const Word& w) {
  require_same_alphabet(e.alphabet(), w.alphabet(), "apply");
  Word result(e.alphabet());
  for (Letter l : w.letters()) {
    const Word& img = e.image_of(l.gen());
    result = result * (l.positive() ? img : invert(img));
  }
  return result;
}

Endomorphism compose(const Endomorphism& first, const Endomorphism& second) {
  require_same_alphabet(first.alphabet(), second.alphabet(), "compose");
  std::vector<Word> images;
  images.reserve(first.images().size());
  for (const Word& w : first.images()) {
    images.push_back(apply(second, w));
  }
  return Endomorphism(first.alphabet(), std::move(images));
}

Endomorphism run_pipeline(std::span<const OneGenEndo> steps, Alphabet alphabet) {
  Endomorphism current = Endomorphism::identity(alphabet);
  for (const OneGenEndo& step : steps) {
    require_same_alphabet(alphabet, step.alphabet(), "run_pipeline");
    current = compose(step.as_endomorphism(), current);
  }
  return current;
}

StallingsGraph image(const Endomorphism& e) {
  return subgroup_graph(e.images(), e.alphabet());
}

std::optional<OneGenEndo> as_one_generator(const Endomorphism& e) {
  const Alphabet& a = e.alphabet();
  std::optional<Generator> moved;
  for (Generator g = 1; g <= a.rank(); ++g) {
    if (e.image_of(g) != Word::generator(a, g)) {
      if (moved) {
        return std::nullopt;
      }
      moved = g;
    }
  }
  const Generator index = moved.value_or(static_cast<Generator>(a.rank()));
  return OneGenEndo(a, index, e.image_of(index));
}

bool is_automorphism(const Endomorphism& e) {
  return is_basis(e.images(), e.alphabet());
}

bool fixes(const Endomorphism& e, std::span<const Word> gens) {
  for (const Word& g : gens) {
    if (apply(e, g) != g) {
      return false;
    }
  }
  return true;
}

}  // namespace stallings
