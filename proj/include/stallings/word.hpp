#pragma once

// Freely reduced words over the ranked alphabet x_1, ..., x_n.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stallings/error.hpp"

namespace stallings {

// Generator indices are 1-based; 0 means "none".
using Generator = std::uint32_t;

inline constexpr Generator kNoGenerator = 0;

// The rank n of the ambient free group F_n.
class Alphabet {
 public:
  explicit Alphabet(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  bool contains(Generator g) const noexcept { return g >= 1 && g <= rank_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t rank_;
};

// Throws AlphabetMismatch naming `what` if the two alphabets differ.
void require_same_alphabet(const Alphabet& a, const Alphabet& b,
                           std::string_view what);

// x_g^{+1} or x_g^{-1}, stored as a signed code (+g or -g).
class Letter {
 public:
  constexpr Letter(Generator gen, int sign) noexcept
      : code_(sign < 0 ? -static_cast<std::int32_t>(gen)
                       : static_cast<std::int32_t>(gen)) {}

  constexpr Generator gen() const noexcept {
    return static_cast<Generator>(code_ < 0 ? -code_ : code_);
  }
  constexpr int sign() const noexcept { return code_ < 0 ? -1 : 1; }
  constexpr bool positive() const noexcept { return code_ > 0; }
  constexpr Letter inverse() const noexcept { return Letter(gen(), -sign()); }
  constexpr std::int32_t code() const noexcept { return code_; }

  constexpr bool cancels(Letter other) const noexcept {
    return code_ == -other.code_;
  }

  friend constexpr bool operator==(Letter, Letter) = default;

  // x1 < X1 < x2 < X2 < ...
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    if (auto c = a.gen() <=> b.gen(); c != 0) {
      return c;
    }
    return b.sign() <=> a.sign();
  }

 private:
  std::int32_t code_;
};

// An element of F_n, always stored freely reduced. The empty word is 1.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}

  // Reduces eagerly; throws UnknownGenerator on an out-of-range letter.
  Word(Alphabet alphabet, std::span<const Letter> letters);
  Word(Alphabet alphabet, std::initializer_list<Letter> letters)
      : Word(alphabet, std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word identity(Alphabet alphabet) { return Word(alphabet); }
  static Word generator(Alphabet alphabet, Generator gen, int sign = 1);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  // Same group element in a different (large enough) alphabet.
  Word rebased(Alphabet alphabet) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

  // Shortlex, letters compared as in Letter.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

Word free_reduce(Alphabet alphabet, std::span<const Letter> raw);

Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);
Word power(const Word& a, long exponent);

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

// a = conjugator * core * conjugator^{-1} with core cyclically reduced.
struct CyclicDecomposition {
  Word core;
  Word conjugator;
};

CyclicDecomposition cyclically_reduce(const Word& a);

bool is_cyclically_reduced(const Word& a);

// Largest generator index occurring in `a`; 0 for the identity.
// a lies in F_i = <x_1, ..., x_i> iff max_generator(a) <= i.
Generator max_generator(const Word& a);

// Word syntax: a..z are x_1..x_26, A..Z their inverses; tokens `x12` / `X12`
// for arbitrary indices. Whitespace between tokens is ignored and the empty
// string is 1. For rank n <= 3 the letters x, y, z (and X, Y, Z) also name
// x_1, x_2, x_3, since their default meanings would be out of range.
Word parse_word(std::string_view text, Alphabet alphabet);

// Inverse of parse_word. Uses single letters when n <= 26, tokens otherwise.
// The identity prints as the empty string.
std::string to_string(const Word& w);

// Like to_string but prints "1" for the identity.
std::string display(const Word& w);

}  // namespace stallings

template <>
struct std::hash<stallings::Word> {
  std::size_t operator()(const stallings::Word& w) const noexcept;
};
