#include "stallings/echelon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "stallings/witness.hpp"

namespace stallings {

OrderedBasis::OrderedBasis(std::vector<Word> elements, Alphabet alphabet)
    : forward_(Endomorphism::identity(alphabet)),
      inverse_(Endomorphism::identity(alphabet)) {
  if (elements.size() != alphabet.rank()) {
    throw NotABasis("ordered basis of F_" + std::to_string(alphabet.rank()) +
                    " needs " + std::to_string(alphabet.rank()) +
                    " elements, got " + std::to_string(elements.size()));
  }
  for (const Word& w : elements) {
    require_same_alphabet(alphabet, w.alphabet(), "OrderedBasis");
  }
  std::vector<Word> inverse = invert_basis(elements, alphabet);
  forward_ = Endomorphism(alphabet, std::move(elements));
  inverse_ = Endomorphism(alphabet, std::move(inverse));
  for (Generator g = 1; g <= alphabet.rank(); ++g) {
    if (apply(forward_, inverse_.image_of(g)) != Word::generator(alphabet, g)) {
      throw std::logic_error("basis inversion failed for x" + std::to_string(g));
    }
  }
}

OrderedBasis OrderedBasis::identity(Alphabet alphabet) {
  return OrderedBasis(Endomorphism::identity(alphabet),
                      Endomorphism::identity(alphabet));
}

OrderedBasis OrderedBasis::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Word> words;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    words.push_back(parse_word(text.substr(start, comma - start), alphabet));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return OrderedBasis(std::move(words), alphabet);
}

bool OrderedBasis::is_identity() const {
  return forward_ == Endomorphism::identity(alphabet());
}

StallingsGraph change_coordinates(const StallingsGraph& h,
                                  const OrderedBasis& basis) {
  require_same_alphabet(h.alphabet(), basis.alphabet(), "change_coordinates");
  const StallingsGraph folded = h.folded() ? h : fold(h);
  if (basis.is_identity()) {
    return trim(folded);
  }
  std::vector<Word> gens;
  for (const Word& w : stallings::basis(trim(folded))) {
    gens.push_back(apply(basis.to_basis(), w));
  }
  return subgroup_graph(gens, h.alphabet());
}

EchelonCheck is_echelon_wrt(const StallingsGraph& h, const OrderedBasis& basis) {
  RankProfile profile = rank_profile(change_coordinates(h, basis));
  const bool echelon = profile.max_jump() <= 1;
  return {echelon, std::move(profile)};
}

EchelonCertificate::EchelonCertificate(Alphabet alphabet,
                                       std::vector<Generator> indices,
                                       std::vector<Word> words)
    : alphabet_(alphabet), indices_(std::move(indices)), words_(std::move(words)) {
  if (indices_.size() != words_.size()) {
    throw MalformedCertificate("certificate has " + std::to_string(indices_.size()) +
                               " indices but " + std::to_string(words_.size()) +
                               " words");
  }
  for (std::size_t j = 0; j < indices_.size(); ++j) {
    if (!alphabet_.contains(indices_[j])) {
      throw MalformedCertificate("certificate index " + std::to_string(indices_[j]) +
                                 " out of range");
    }
    if (j > 0 && indices_[j] <= indices_[j - 1]) {
      throw MalformedCertificate("certificate indices must increase strictly");
    }
    if (words_[j].alphabet() != alphabet_) {
      throw MalformedCertificate("certificate word over the wrong alphabet");
    }
    if (max_generator(words_[j]) != indices_[j]) {
      throw MalformedCertificate("word " + display(words_[j]) + " is not in F_" +
                                 std::to_string(indices_[j]) + " - F_" +
                                 std::to_string(indices_[j] - 1));
    }
  }
}

const Word* EchelonCertificate::word_at(Generator i) const {
  auto it = std::find(indices_.begin(), indices_.end(), i);
  return it == indices_.end() ? nullptr
                              : &words_[static_cast<std::size_t>(it - indices_.begin())];
}

std::optional<EchelonCertificate> echelon_certificate(const StallingsGraph& h,
                                                      const OrderedBasis& basis) {
  const StallingsGraph g = change_coordinates(h, basis);
  const RankProfile profile = rank_profile(g);
  if (profile.max_jump() > 1) {
    return std::nullopt;
  }
  const Alphabet& a = g.alphabet();
  const std::size_t n = a.rank();

  // Tree grown stage by stage: after stage i it spans the base component of
  // the subgraph with labels <= i.
  std::vector<bool> in_tree(g.num_vertices(), false);
  std::vector<Word> path(g.num_vertices(), Word(a));
  std::vector<Vertex> order{g.base()};
  in_tree[g.base()] = true;
  std::vector<bool> edge_used(g.num_edges(), false);
  // Edges are sorted by (origin, label), so the x_l edge leaving v is found
  // by search.
  auto edge_index = [&](Vertex origin, Generator label) {
    const auto edges = g.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{origin, label, 0},
                               [](const Edge& x, const Edge& y) {
                                 return x.origin != y.origin ? x.origin < y.origin
                                                             : x.label < y.label;
                               });
    return static_cast<std::size_t>(it - edges.begin());
  };

  std::vector<Generator> indices;
  std::vector<Word> words;
  for (Generator i = 1; i <= n; ++i) {
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      const Vertex v = order[idx];
      for (Generator l = 1; l <= i; ++l) {
        for (int sign : {1, -1}) {
          const Vertex w = g.follow(v, Letter(l, sign));
          if (w == kNoVertex || in_tree[w]) {
            continue;
          }
          in_tree[w] = true;
          edge_used[sign > 0 ? edge_index(v, l) : edge_index(w, l)] = true;
          path[w] = path[v] * Word::generator(a, l, sign);
          order.push_back(w);
        }
      }
    }
    std::vector<Word> fresh;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edges()[e];
      if (edge_used[e] || edge.label > i || !in_tree[edge.origin]) {
        continue;
      }
      edge_used[e] = true;
      fresh.push_back(path[edge.origin] * Word::generator(a, edge.label) *
                      invert(path[edge.target]));
    }
    if (fresh.size() != profile[i] - profile[i - 1]) {
      throw std::logic_error("nested spanning trees disagree with the rank profile");
    }
    if (!fresh.empty()) {
      indices.push_back(i);
      words.push_back(std::move(fresh.front()));
    }
  }

  EchelonCertificate cert(a, std::move(indices), std::move(words));
  if (canonical_code(subgroup_graph(cert.words(), a)) != canonical_code(g)) {
    throw std::logic_error("echelon certificate does not regenerate the subgroup");
  }
  return cert;
}

Endomorphism EchelonPipeline::composite() const {
  return run_pipeline(steps, expected_image.alphabet());
}

StallingsGraph EchelonPipeline::image() const {
  return stallings::image(composite());
}

EchelonPipeline build_via_pipeline(const EchelonCertificate& cert,
                                  Alphabet alphabet) {
  if (cert.alphabet() != alphabet) {
    throw MalformedCertificate("certificate alphabet differs from F_" +
                               std::to_string(alphabet.rank()));
  }
  const std::size_t n = alphabet.rank();
  std::vector<OneGenEndo> steps;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto m = static_cast<Generator>(n + 1 - k);
    const Word* y = cert.word_at(m);
    OneGenEndo step(alphabet, m, y != nullptr ? *y : Word(alphabet));
    if (!step.is_identity()) {
      steps.push_back(std::move(step));
    }
  }
  EchelonPipeline pipeline{std::move(steps), subgroup_graph(cert.words(), alphabet)};
  if (canonical_code(pipeline.image()) != canonical_code(pipeline.expected_image)) {
    throw std::logic_error("pipeline image differs from the certificate subgroup");
  }
  return pipeline;
}

}  // namespace stallings
