#include "stallings/witness.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <utility>

namespace stallings {

GeneratorWitness::GeneratorWitness(std::span<const Word> gens,
                                   Alphabet alphabet)
    : alphabet_(alphabet),
      gen_alphabet_(std::max<std::size_t>(1, gens.size())) {
  // Wedge of loops; the last edge of loop j carries y_j, all others 1.
  num_vertices_ = 1;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Word& w = gens[j];
    require_same_alphabet(w.alphabet(), alphabet, "GeneratorWitness");
    Vertex current = base_;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const bool last = i + 1 == w.size();
      const Vertex next = last ? base_ : static_cast<Vertex>(num_vertices_++);
      const Letter l = w[i];
      Word witness(gen_alphabet_);
      if (last) {
        witness = Word::generator(gen_alphabet_, static_cast<Generator>(j + 1));
      }
      if (l.positive()) {
        edges_.push_back({current, l.gen(), next, std::move(witness)});
      } else {
        edges_.push_back({next, l.gen(), current, invert(witness)});
      }
      current = next;
    }
  }

  // Each vertex v carries an implicit potential p(v) with p(base) = 1, and
  // every edge satisfies eval(witness) = p(origin) x_label p(target)^-1.
  // Merging `gone` into `kept` with delta evaluating to p(kept) p(gone)^-1
  // preserves that relation for all edges touching `gone`.
  auto merge = [&](Vertex kept, Vertex gone, const Word& delta) {
    const Word delta_inv = invert(delta);
    for (WitnessEdge& f : edges_) {
      if (f.origin == gone) {
        f.witness = delta * f.witness;
        f.origin = kept;
      }
      if (f.target == gone) {
        f.witness = f.witness * delta_inv;
        f.target = kept;
      }
    }
  };

  for (;;) {
    // (vertex, label, outgoing?) -> edge index
    std::map<std::tuple<Vertex, Generator, bool>, std::size_t> seen;
    std::optional<std::pair<std::size_t, std::size_t>> clash;
    bool outgoing = true;
    for (std::size_t i = 0; i < edges_.size() && !clash; ++i) {
      const WitnessEdge& e = edges_[i];
      for (bool dir : {true, false}) {
        const Vertex at = dir ? e.origin : e.target;
        auto [it, inserted] = seen.try_emplace({at, e.label, dir}, i);
        if (!inserted) {
          clash.emplace(it->second, i);
          outgoing = dir;
          break;
        }
      }
    }
    if (!clash) {
      break;
    }
    auto [i1, i2] = *clash;
    WitnessEdge e1 = edges_[i1];
    WitnessEdge e2 = edges_[i2];
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(i2));
    Vertex a = outgoing ? e1.target : e1.origin;
    Vertex b = outgoing ? e2.target : e2.origin;
    if (a == b) {
      continue;  // parallel edges; keep e1
    }
    // delta evaluates to p(a) p(b)^-1.
    Word delta = outgoing ? invert(e1.witness) * e2.witness
                          : e1.witness * invert(e2.witness);
    if (b == base_) {
      std::swap(a, b);
      delta = invert(delta);
    }
    merge(a, b, delta);
  }
}

std::optional<Word> GeneratorWitness::express(const Word& w) const {
  require_same_alphabet(alphabet_, w.alphabet(), "express");
  Word result(gen_alphabet_);
  Vertex v = base_;
  for (Letter l : w.letters()) {
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const WitnessEdge& e) {
      return e.label == l.gen() && (l.positive() ? e.origin : e.target) == v;
    });
    if (it == edges_.end()) {
      return std::nullopt;
    }
    if (l.positive()) {
      result = result * it->witness;
      v = it->target;
    } else {
      result = result * invert(it->witness);
      v = it->origin;
    }
  }
  if (v != base_) {
    return std::nullopt;
  }
  return result;
}

StallingsGraph GeneratorWitness::graph() const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const WitnessEdge& e : edges_) {
    edges.push_back({e.origin, e.label, e.target});
  }
  return fold(StallingsGraph(alphabet_, num_vertices_, base_, std::move(edges)));
}

Word evaluate(const Word& expression, std::span<const Word> gens,
              Alphabet alphabet) {
  Word result(alphabet);
  for (Letter l : expression.letters()) {
    if (l.gen() > gens.size()) {
      throw IndexOutOfRange("expression uses generator y" +
                            std::to_string(l.gen()) + " of " +
                            std::to_string(gens.size()));
    }
    const Word& g = gens[l.gen() - 1];
    result = result * (l.positive() ? g : invert(g));
  }
  return result;
}

std::vector<Word> invert_basis(std::span<const Word> basis_words,
                               Alphabet alphabet) {
  const std::size_t n = alphabet.rank();
  if (basis_words.size() != n) {
    throw NotABasis("a basis of F_" + std::to_string(n) + " needs " +
                    std::to_string(n) + " words, got " +
                    std::to_string(basis_words.size()));
  }
  const GeneratorWitness witness(basis_words, alphabet);
  std::vector<Word> inverse;
  inverse.reserve(n);
  for (Generator l = 1; l <= n; ++l) {
    auto expr = witness.express(Word::generator(alphabet, l));
    if (!expr) {
      throw NotABasis("the words do not generate x" + std::to_string(l));
    }
    // Abstract generator y_j becomes x_j.
    inverse.push_back(expr->rebased(alphabet));
  }
  return inverse;
}

}  // namespace stallings
