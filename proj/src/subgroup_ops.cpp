#include "stallings/subgroup_ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stallings {

RankProfile::RankProfile(std::vector<std::size_t> values)
    : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 0) {
    throw std::invalid_argument("rank profile must start at 0");
  }
  if (!std::is_sorted(values_.begin(), values_.end())) {
    throw std::logic_error("rank profile must be nondecreasing");
  }
}

std::size_t RankProfile::max_jump() const noexcept {
  std::size_t jump = 0;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    jump = std::max(jump, values_[i] - values_[i - 1]);
  }
  return jump;
}

StallingsGraph intersect(const StallingsGraph& a, const StallingsGraph& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "intersect");
  require_folded_graph(a, "intersect");
  require_folded_graph(b, "intersect");
  const std::size_t n = a.alphabet().rank();
  const std::size_t vb = b.num_vertices();

  std::vector<Vertex> id(a.num_vertices() * vb, kNoVertex);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  auto visit = [&](Vertex x, Vertex y) {
    Vertex& slot = id[x * vb + y];
    if (slot == kNoVertex) {
      slot = static_cast<Vertex>(pairs.size());
      pairs.emplace_back(x, y);
    }
    return slot;
  };

  visit(a.base(), b.base());
  std::vector<Vertex> out;
  std::vector<Vertex> in;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [x, y] = pairs[p];
    out.resize((p + 1) * n, kNoVertex);
    in.resize((p + 1) * n, kNoVertex);
    for (Generator l = 1; l <= n; ++l) {
      const Vertex xo = a.out(x, l);
      const Vertex yo = b.out(y, l);
      if (xo != kNoVertex && yo != kNoVertex) {
        out[p * n + l - 1] = visit(xo, yo);
      }
      const Vertex xi = a.in(x, l);
      const Vertex yi = b.in(y, l);
      if (xi != kNoVertex && yi != kNoVertex) {
        in[p * n + l - 1] = visit(xi, yi);
      }
    }
  }
  return trim(detail::make_canonical(a.alphabet(), pairs.size(), 0, out, in,
                                     false));
}

StallingsGraph restrict_to_prefix(const StallingsGraph& h, std::size_t i) {
  require_folded_graph(h, "restrict_to_prefix");
  const std::size_t n = h.alphabet().rank();
  if (i > n) {
    throw IndexOutOfRange("prefix index " + std::to_string(i) +
                          " exceeds rank " + std::to_string(n));
  }
  std::vector<Vertex> out(h.num_vertices() * n, kNoVertex);
  std::vector<Vertex> in(h.num_vertices() * n, kNoVertex);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    for (Generator l = 1; l <= i; ++l) {
      out[v * n + l - 1] = h.out(v, l);
      in[v * n + l - 1] = h.in(v, l);
    }
  }
  return trim(detail::make_canonical(h.alphabet(), h.num_vertices(), h.base(),
                                     out, in, false));
}

RankProfile rank_profile(const StallingsGraph& h) {
  std::vector<std::size_t> values;
  for (std::size_t i = 0; i <= h.alphabet().rank(); ++i) {
    values.push_back(rank(restrict_to_prefix(h, i)));
  }
  return RankProfile(std::move(values));
}

StallingsGraph conjugate(const StallingsGraph& h, const Word& w) {
  require_same_alphabet(h.alphabet(), w.alphabet(), "conjugate");
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  if (w.empty()) {
    return trim(fold(h));
  }
  // New base reads w^-1 to reach the old base.
  const Word stem = invert(w);
  std::size_t next = h.num_vertices();
  const Vertex new_base = static_cast<Vertex>(next++);
  Vertex current = new_base;
  for (std::size_t i = 0; i < stem.size(); ++i) {
    const Vertex to =
        i + 1 == stem.size() ? h.base() : static_cast<Vertex>(next++);
    const Letter l = stem[i];
    if (l.positive()) {
      edges.push_back({current, l.gen(), to});
    } else {
      edges.push_back({to, l.gen(), current});
    }
    current = to;
  }
  return trim(fold(StallingsGraph(h.alphabet(), next, new_base, std::move(edges))));
}

StallingsGraph join(const StallingsGraph& a, const StallingsGraph& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "join");
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const Vertex offset = static_cast<Vertex>(a.num_vertices());
  auto map_b = [&](Vertex v) { return v == b.base() ? a.base() : v + offset; };
  for (const Edge& e : b.edges()) {
    edges.push_back({map_b(e.origin), e.label, map_b(e.target)});
  }
  return trim(fold(StallingsGraph(a.alphabet(), a.num_vertices() + b.num_vertices(),
                                  a.base(), std::move(edges))));
}

bool is_whole_group(const StallingsGraph& g) {
  require_folded_graph(g, "is_whole_group");
  return g.num_vertices() == 1 && g.num_edges() == g.alphabet().rank();
}

bool is_basis(std::span<const Word> words, Alphabet alphabet) {
  if (words.size() != alphabet.rank()) {
    return false;
  }
  return is_whole_group(subgroup_graph(words, alphabet));
}

}  // namespace stallings
