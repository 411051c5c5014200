#pragma once

// Echelon form of a subgroup with respect to an explicit ordered basis of F_n:
// the rank of H ∩ <z_1, ..., z_i> may grow by at most one at each step.
//
// Whether H is echelon with respect to *some* basis is not decided here; the
// caller always supplies the basis.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "stallings/core_graph.hpp"
#include "stallings/endo.hpp"
#include "stallings/subgroup_ops.hpp"
#include "stallings/word.hpp"

namespace stallings {

// An ordered free basis z_1, ..., z_n of F_n written in the standard
// generators. Construction validates the basis and precomputes the inverse
// substitution.
class OrderedBasis {
 public:
  // Throws NotABasis.
  OrderedBasis(std::vector<Word> elements, Alphabet alphabet);

  static OrderedBasis identity(Alphabet alphabet);

  // Comma-separated words, e.g. "y,x,z".
  static OrderedBasis parse(std::string_view text, Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return forward_.alphabet(); }
  const std::vector<Word>& elements() const noexcept { return forward_.images(); }
  bool is_identity() const;

  // x_i -> z_i, taking basis coordinates to standard coordinates.
  const Endomorphism& to_standard() const noexcept { return forward_; }
  // Standard coordinates to basis coordinates.
  const Endomorphism& to_basis() const noexcept { return inverse_; }

 private:
  OrderedBasis(Endomorphism forward, Endomorphism inverse)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

  Endomorphism forward_;
  Endomorphism inverse_;
};

// The graph of H rewritten in the coordinates of `basis`: an element equal to
// W(z_1, ..., z_n) becomes W(x_1, ..., x_n).
StallingsGraph change_coordinates(const StallingsGraph& h,
                                  const OrderedBasis& basis);

struct EchelonCheck {
  bool echelon;
  RankProfile profile;  // in basis coordinates
};

EchelonCheck is_echelon_wrt(const StallingsGraph& h, const OrderedBasis& basis);

// Indices i_1 < ... < i_r with basis words y_j in F_{i_j} - F_{i_j - 1}, all
// in basis coordinates. The words freely generate the subgroup.
class EchelonCertificate {
 public:
  // Throws MalformedCertificate when the shape is wrong.
  EchelonCertificate(Alphabet alphabet, std::vector<Generator> indices,
                     std::vector<Word> words);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Generator>& indices() const noexcept { return indices_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return indices_.size(); }

  // The basis word with top index i, if any.
  const Word* word_at(Generator i) const;

 private:
  Alphabet alphabet_;
  std::vector<Generator> indices_;
  std::vector<Word> words_;
};

// Nullopt when H is not echelon with respect to `basis`. Otherwise builds the
// certificate from nested spanning trees of the prefix restrictions, so the
// basis of H ∩ F_{i-1} is literally extended to one of H ∩ F_i.
std::optional<EchelonCertificate> echelon_certificate(const StallingsGraph& h,
                                                      const OrderedBasis& basis);

// The chain of 1-generator endomorphisms F_n = H_0 > H_1 > ... > H_n = H
// where step k sends x_{n+1-k} to y_{n+1-k} (or to 1 when n+1-k is not a
// certificate index). Identity steps are omitted.
struct EchelonPipeline {
  std::vector<OneGenEndo> steps;
  StallingsGraph expected_image;

  Endomorphism composite() const;
  StallingsGraph image() const;
};

EchelonPipeline build_via_pipeline(const EchelonCertificate& cert,
                                  Alphabet alphabet);

}  // namespace stallings
