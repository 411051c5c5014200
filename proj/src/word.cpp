#include "stallings/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

namespace stallings {

Alphabet::Alphabet(std::size_t rank) : rank_(rank) {
  if (rank == 0) {
    throw IndexOutOfRange("alphabet rank must be at least 1");
  }
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b,
                           std::string_view what) {
  if (a != b) {
    throw AlphabetMismatch(std::string(what) + ": alphabets of rank " +
                           std::to_string(a.rank()) + " and " +
                           std::to_string(b.rank()) + " differ");
  }
}

namespace {

void check_letter(const Alphabet& alphabet, Letter l) {
  if (!alphabet.contains(l.gen())) {
    throw UnknownGenerator("generator x" + std::to_string(l.gen()) +
                           " outside alphabet of rank " +
                           std::to_string(alphabet.rank()));
  }
}

// Appends `l` to an already reduced sequence, cancelling if needed.
void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(Alphabet alphabet, std::span<const Letter> letters)
    : alphabet_(alphabet) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(alphabet_, l);
    push_reduced(letters_, l);
  }
}

Word Word::generator(Alphabet alphabet, Generator gen, int sign) {
  const Letter l(gen, sign);
  return Word(alphabet, std::span<const Letter>(&l, 1));
}

Word Word::rebased(Alphabet alphabet) const {
  return Word(alphabet, letters_);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.alphabet_.rank() <=> b.alphabet_.rank(); c != 0) {
    return c;
  }
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
      b.letters_.end());
}

Word free_reduce(Alphabet alphabet, std::span<const Letter> raw) {
  return Word(alphabet, raw);
}

Word multiply(const Word& a, const Word& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "multiply");
  const auto la = a.letters();
  const auto lb = b.letters();
  std::size_t cancel = 0;
  while (cancel < la.size() && cancel < lb.size() &&
         la[la.size() - 1 - cancel].cancels(lb[cancel])) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(la.size() + lb.size() - 2 * cancel);
  out.insert(out.end(), la.begin(), la.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), lb.begin() + static_cast<std::ptrdiff_t>(cancel), lb.end());
  return Word(a.alphabet(), out);
}

Word invert(const Word& a) {
  std::vector<Letter> out;
  out.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(a.alphabet(), out);
}

Word power(const Word& a, long exponent) {
  const Word base = exponent < 0 ? invert(a) : a;
  Word result(a.alphabet());
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
    result = multiply(result, base);
  }
  return result;
}

bool is_cyclically_reduced(const Word& a) {
  return a.size() < 2 || !a.front().cancels(a.back());
}

CyclicDecomposition cyclically_reduce(const Word& a) {
  const auto letters = a.letters();
  std::size_t k = 0;
  while (2 * k + 1 < letters.size() &&
         letters[k].cancels(letters[letters.size() - 1 - k])) {
    ++k;
  }
  const auto mid = letters.subspan(k, letters.size() - 2 * k);
  return {Word(a.alphabet(), mid), Word(a.alphabet(), letters.first(k))};
}

Generator max_generator(const Word& a) {
  Generator top = kNoGenerator;
  for (Letter l : a.letters()) {
    top = std::max(top, l.gen());
  }
  return top;
}

Word parse_word(std::string_view text, Alphabet alphabet) {
  const bool xyz_aliases = alphabet.rank() <= 3;
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw SyntaxError("unexpected character '" + std::string(1, c) +
                        "' at offset " + std::to_string(i) + " in word \"" +
                        std::string(text) + "\"");
    }
    const int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    Generator gen = 0;
    if (lower == 'x' && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      const auto [ptr, ec] =
          std::from_chars(text.data() + i + 1, text.data() + j, gen);
      if (ec != std::errc() || gen == 0) {
        throw SyntaxError("bad generator token \"" +
                          std::string(text.substr(i, j - i)) + "\"");
      }
      i = j;
    } else {
      if (xyz_aliases && lower >= 'x') {
        gen = static_cast<Generator>(lower - 'x' + 1);
      } else {
        gen = static_cast<Generator>(lower - 'a' + 1);
      }
      ++i;
    }
    if (!alphabet.contains(gen)) {
      throw UnknownGenerator("generator x" + std::to_string(gen) +
                             " outside alphabet of rank " +
                             std::to_string(alphabet.rank()) + " in word \"" +
                             std::string(text) + "\"");
    }
    letters.emplace_back(gen, sign);
  }
  return Word(alphabet, letters);
}

std::string to_string(const Word& w) {
  std::string out;
  const bool single = w.alphabet().rank() <= 26;
  for (Letter l : w.letters()) {
    if (single) {
      const char base = l.positive() ? 'a' : 'A';
      out.push_back(static_cast<char>(base + static_cast<char>(l.gen() - 1)));
    } else {
      out.push_back(l.positive() ? 'x' : 'X');
      out += std::to_string(l.gen());
    }
  }
  return out;
}

std::string display(const Word& w) {
  return w.empty() ? std::string("1") : to_string(w);
}

}  // namespace stallings

std::size_t std::hash<stallings::Word>::operator()(
    const stallings::Word& w) const noexcept {
  // FNV-1a over the signed letter codes.
  std::uint64_t h = 1469598103934665603ULL ^ w.alphabet().rank();
  for (stallings::Letter l : w.letters()) {
    h ^= static_cast<std::uint32_t>(l.code());
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}
