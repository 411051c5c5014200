#include "stallings/core_graph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace stallings {

namespace {

std::atomic<std::uint64_t> g_rank_checks{0};
std::atomic<std::uint64_t> g_rank_mismatches{0};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Both arguments must be roots. Returns the surviving root.
  Vertex unite(Vertex a, Vertex b) {
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
};

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

// Appends a path spelling `w` from `from` to `to`; fresh vertices are
// allocated after `next_vertex`.
void add_path(std::vector<Edge>& edges, std::size_t& next_vertex, Vertex from,
              Vertex to, const Word& w) {
  Vertex current = from;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Vertex next =
        i + 1 == w.size() ? to : static_cast<Vertex>(next_vertex++);
    const Letter l = w[i];
    if (l.positive()) {
      edges.push_back({current, l.gen(), next});
    } else {
      edges.push_back({next, l.gen(), current});
    }
    current = next;
  }
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint8_t b : c.bytes()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

StallingsGraph::StallingsGraph(Alphabet alphabet, std::size_t num_vertices,
                               Vertex base, std::vector<Edge> edges)
    : alphabet_(alphabet),
      num_vertices_(num_vertices),
      base_(base),
      edges_(std::move(edges)),
      degree_(num_vertices, 0) {
  if (num_vertices == 0 || base >= num_vertices) {
    throw IndexOutOfRange("graph base vertex out of range");
  }
  for (const Edge& e : edges_) {
    if (e.origin >= num_vertices || e.target >= num_vertices) {
      throw IndexOutOfRange("edge endpoint out of range");
    }
    if (!alphabet_.contains(e.label)) {
      throw UnknownGenerator("edge label x" + std::to_string(e.label) +
                             " outside alphabet of rank " +
                             std::to_string(alphabet_.rank()));
    }
    ++degree_[e.origin];
    ++degree_[e.target];
  }
}

StallingsGraph StallingsGraph::trivial(Alphabet alphabet) {
  const std::vector<Vertex> none(alphabet.rank(), kNoVertex);
  return detail::make_canonical(alphabet, 1, 0, none, none, true);
}

Vertex StallingsGraph::follow(Vertex v, Letter l) const {
  require_folded_graph(*this, "follow");
  return l.positive() ? out(v, l.gen()) : in(v, l.gen());
}

void require_folded_graph(const StallingsGraph& g, const char* what) {
  if (!g.folded()) {
    throw std::invalid_argument(std::string(what) + " requires a folded graph");
  }
}

namespace detail {

// Renumbers the base component of a deterministic transition table in
// breadth-first order (labels ascending, outgoing before incoming).
StallingsGraph make_canonical(Alphabet alphabet, std::size_t num_vertices,
                              Vertex base, std::span<const Vertex> out,
                              std::span<const Vertex> in, bool trimmed) {
  const std::size_t n = alphabet.rank();
  std::vector<Vertex> new_id(num_vertices, kNoVertex);
  std::vector<Vertex> order;
  order.reserve(num_vertices);
  new_id[base] = 0;
  order.push_back(base);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const Vertex v = order[idx];
    for (std::size_t l = 0; l < n; ++l) {
      for (Vertex w : {out[v * n + l], in[v * n + l]}) {
        if (w != kNoVertex && new_id[w] == kNoVertex) {
          new_id[w] = static_cast<Vertex>(order.size());
          order.push_back(w);
        }
      }
    }
  }

  StallingsGraph g(alphabet);
  g.num_vertices_ = order.size();
  g.base_ = 0;
  g.folded_ = true;
  g.trimmed_ = trimmed;
  g.out_.assign(order.size() * n, kNoVertex);
  g.in_.assign(order.size() * n, kNoVertex);
  g.degree_.assign(order.size(), 0);
  for (std::size_t nv = 0; nv < order.size(); ++nv) {
    const Vertex v = order[nv];
    for (std::size_t l = 0; l < n; ++l) {
      if (const Vertex w = out[v * n + l]; w != kNoVertex) {
        const Vertex nw = new_id[w];
        g.out_[nv * n + l] = nw;
        g.in_[nw * n + l] = static_cast<Vertex>(nv);
        g.edges_.push_back(
            {static_cast<Vertex>(nv), static_cast<Generator>(l + 1), nw});
        ++g.degree_[nv];
        ++g.degree_[nw];
      }
    }
  }
  return g;
}

}  // namespace detail

StallingsGraph bouquet(std::span<const Word> gens, Alphabet alphabet) {
  std::vector<Edge> edges;
  std::size_t next_vertex = 1;
  for (const Word& w : gens) {
    require_same_alphabet(w.alphabet(), alphabet, "bouquet");
    add_path(edges, next_vertex, 0, 0, w);
  }
  return StallingsGraph(alphabet, next_vertex, 0, std::move(edges));
}

StallingsGraph standard_bouquet(Alphabet alphabet, std::size_t k) {
  if (k > alphabet.rank()) {
    throw IndexOutOfRange("bouquet of " + std::to_string(k) +
                          " loops exceeds alphabet rank");
  }
  std::vector<Edge> edges;
  for (std::size_t l = 1; l <= k; ++l) {
    edges.push_back({0, static_cast<Generator>(l), 0});
  }
  return fold(StallingsGraph(alphabet, 1, 0, std::move(edges)));
}

StallingsGraph fold(const StallingsGraph& g) {
  const std::size_t n = g.alphabet().rank();
  const std::size_t slots = 2 * n;
  const std::size_t num_vertices = g.num_vertices();

  // table[v * slots + 2(l-1)] : target of the x_l edge leaving v,
  // table[v * slots + 2(l-1) + 1] : origin of the x_l edge entering v.
  std::vector<Vertex> table(num_vertices * slots, kNoVertex);
  DisjointSets sets(num_vertices);
  std::vector<std::pair<Vertex, Vertex>> pending;

  auto attach = [&](Vertex u, std::size_t slot, Vertex w) {
    Vertex& current = table[sets.find(u) * slots + slot];
    if (current == kNoVertex) {
      current = w;
    } else if (sets.find(current) != sets.find(w)) {
      pending.emplace_back(current, w);
    }
  };

  for (const Edge& e : g.edges()) {
    attach(e.origin, 2 * (e.label - 1), e.target);
    attach(e.target, 2 * (e.label - 1) + 1, e.origin);
  }
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    a = sets.find(a);
    b = sets.find(b);
    if (a == b) {
      continue;
    }
    const Vertex root = sets.unite(a, b);
    const Vertex gone = root == a ? b : a;
    for (std::size_t s = 0; s < slots; ++s) {
      const Vertex w = std::exchange(table[gone * slots + s], kNoVertex);
      if (w != kNoVertex) {
        attach(root, s, w);
      }
    }
  }

  std::vector<Vertex> out(num_vertices * n, kNoVertex);
  std::vector<Vertex> in(num_vertices * n, kNoVertex);
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (sets.find(v) != v) {
      continue;
    }
    for (std::size_t l = 0; l < n; ++l) {
      if (const Vertex w = table[v * slots + 2 * l]; w != kNoVertex) {
        out[v * n + l] = sets.find(w);
      }
      if (const Vertex w = table[v * slots + 2 * l + 1]; w != kNoVertex) {
        in[v * n + l] = sets.find(w);
      }
    }
  }
  return detail::make_canonical(g.alphabet(), num_vertices,
                                sets.find(g.base()), out, in,
                                g.folded() && g.trimmed());
}

StallingsGraph trim(const StallingsGraph& g) {
  require_folded_graph(g, "trim");
  if (g.trimmed()) {
    return g;
  }
  const std::size_t n = g.alphabet().rank();
  const std::size_t num_vertices = g.num_vertices();
  std::vector<Vertex> out(num_vertices * n);
  std::vector<Vertex> in(num_vertices * n);
  std::vector<std::size_t> degree(num_vertices);
  for (Vertex v = 0; v < num_vertices; ++v) {
    degree[v] = g.degree(v);
    for (std::size_t l = 0; l < n; ++l) {
      out[v * n + l] = g.out(v, static_cast<Generator>(l + 1));
      in[v * n + l] = g.in(v, static_cast<Generator>(l + 1));
    }
  }

  std::vector<Vertex> queue;
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (v != g.base() && degree[v] <= 1) {
      queue.push_back(v);
    }
  }
  auto drop = [&](Vertex w) {
    if (--degree[w] == 1 && w != g.base()) {
      queue.push_back(w);
    }
  };
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (std::size_t l = 0; l < n; ++l) {
      if (const Vertex w = std::exchange(out[v * n + l], kNoVertex); w != kNoVertex) {
        in[w * n + l] = kNoVertex;
        drop(w);
      }
      if (const Vertex w = std::exchange(in[v * n + l], kNoVertex); w != kNoVertex) {
        out[w * n + l] = kNoVertex;
        drop(w);
      }
    }
    degree[v] = 0;
  }
  return detail::make_canonical(g.alphabet(), num_vertices, g.base(), out, in,
                                true);
}

StallingsGraph subgroup_graph(std::span<const Word> gens, Alphabet alphabet) {
  return trim(fold(bouquet(gens, alphabet)));
}

std::optional<long> betti_by_degree_sum(const StallingsGraph& g) {
  long excess = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < 2) {
      return std::nullopt;
    }
    excess += static_cast<long>(g.degree(v)) - 2;
  }
  return 1 + excess / 2;
}

std::size_t rank(const StallingsGraph& g) {
  const long betti = static_cast<long>(g.num_edges()) -
                     static_cast<long>(g.num_vertices()) + 1;
  if (const auto by_degree = betti_by_degree_sum(g)) {
    g_rank_checks.fetch_add(1, std::memory_order_relaxed);
    if (*by_degree != betti) {
      g_rank_mismatches.fetch_add(1, std::memory_order_relaxed);
      throw std::logic_error("Betti number mismatch: |E|-|V|+1 = " +
                             std::to_string(betti) + ", degree sum gives " +
                             std::to_string(*by_degree));
    }
  }
  if (betti < 0) {
    throw std::logic_error("rank of a disconnected graph");
  }
  return static_cast<std::size_t>(betti);
}

RankAudit rank_audit() noexcept {
  return {g_rank_checks.load(), g_rank_mismatches.load()};
}

void reset_rank_audit() noexcept {
  g_rank_checks.store(0);
  g_rank_mismatches.store(0);
}

Vertex trace(const StallingsGraph& g, Vertex from, const Word& w) {
  require_folded_graph(g, "trace");
  require_same_alphabet(g.alphabet(), w.alphabet(), "trace");
  Vertex v = from;
  for (Letter l : w.letters()) {
    v = g.follow(v, l);
    if (v == kNoVertex) {
      break;
    }
  }
  return v;
}

bool contains(const StallingsGraph& g, const Word& w) {
  return trace(g, g.base(), w) == g.base();
}

SpanningTree spanning_tree(const StallingsGraph& g) {
  require_folded_graph(g, "spanning_tree");
  const std::size_t n = g.alphabet().rank();
  std::vector<std::uint32_t> out_edge(g.num_vertices() * n, kNoVertex);
  std::vector<std::uint32_t> in_edge(g.num_vertices() * n, kNoVertex);
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    out_edge[e.origin * n + e.label - 1] = i;
    in_edge[e.target * n + e.label - 1] = i;
  }

  SpanningTree tree{std::vector<std::uint32_t>(g.num_vertices(), kNoVertex),
                    std::vector<bool>(g.num_edges(), false),
                    std::vector<Word>(g.num_vertices(), Word(g.alphabet()))};
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> order{g.base()};
  seen[g.base()] = true;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const Vertex v = order[idx];
    for (Generator l = 1; l <= n; ++l) {
      for (int sign : {1, -1}) {
        const Vertex w = g.follow(v, Letter(l, sign));
        if (w == kNoVertex || seen[w]) {
          continue;
        }
        seen[w] = true;
        const std::uint32_t e =
            sign > 0 ? out_edge[v * n + l - 1] : in_edge[v * n + l - 1];
        tree.parent_edge[w] = e;
        tree.in_tree[e] = true;
        tree.path[w] = tree.path[v] * Word::generator(g.alphabet(), l, sign);
        order.push_back(w);
      }
    }
  }
  return tree;
}

std::vector<Word> basis(const StallingsGraph& g) {
  const SpanningTree tree = spanning_tree(g);
  std::vector<Word> result;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (tree.in_tree[i]) {
      continue;
    }
    const Edge& e = g.edges()[i];
    result.push_back(tree.path[e.origin] *
                     Word::generator(g.alphabet(), e.label) *
                     invert(tree.path[e.target]));
  }
  return result;
}

std::optional<std::size_t> is_finite_index(const StallingsGraph& g) {
  require_folded_graph(g, "is_finite_index");
  if (g.num_edges() != g.num_vertices() * g.alphabet().rank()) {
    return std::nullopt;
  }
  // A folded graph with |V|*n edges has every out/in slot filled.
  return g.num_vertices();
}

CanonicalCode canonical_code(const StallingsGraph& g) {
  require_folded_graph(g, "canonical_code");
  const std::size_t n = g.alphabet().rank();
  std::vector<std::uint8_t> bytes;
  bytes.reserve(2 + g.num_vertices() * n);
  put_varint(bytes, n);
  put_varint(bytes, g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Generator l = 1; l <= n; ++l) {
      const Vertex w = g.out(v, l);
      put_varint(bytes, w == kNoVertex ? 0 : std::uint64_t{w} + 1);
    }
  }
  return CanonicalCode(std::move(bytes));
}

std::string to_dot(const StallingsGraph& g) {
  std::ostringstream os;
  os << "digraph subgroup {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v << " [shape=" << (v == g.base() ? "doublecircle" : "circle")
       << "];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << e.origin << " -> " << e.target << " [label=\"x" << e.label
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace stallings
