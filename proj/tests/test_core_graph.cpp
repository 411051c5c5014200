#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "stallings/core_graph.hpp"
#include "stallings/lab.hpp"
#include "support.hpp"

using namespace stallings;
using testing::sg;
using testing::w;
using testing::words;

namespace {

const Alphabet F1(1), F2(2), F3(3);

std::vector<Edge> edge_list(const StallingsGraph& g) {
  return {g.edges().begin(), g.edges().end()};
}

std::vector<StallingsGraph> cores(std::size_t n, std::size_t max_vertices) {
  EnumBudget budget;
  budget.max_vertices = max_vertices;
  return enumerate_cores(Alphabet(n), budget);
}

std::vector<Word> random_gens(std::mt19937_64& rng, int n, int count, std::size_t len) {
  std::vector<Word> gens;
  for (int i = 0; i < count; ++i) {
    gens.push_back(oracle::word(oracle::random_word(rng, n, len), Alphabet(n)));
  }
  return gens;
}

std::vector<oracle::RawWord> raw_all(std::span<const Word> gens) {
  std::vector<oracle::RawWord> out;
  for (const Word& g : gens) {
    out.push_back(oracle::raw(g));
  }
  return out;
}

}  // namespace

TEST_CASE("bouquet examples") {
  const StallingsGraph one = bouquet(words(1, {"a"}), F1);
  CHECK(one.num_vertices() == 1);
  CHECK(one.num_edges() == 1);
  const StallingsGraph none = bouquet({}, F2);
  CHECK(none.num_vertices() == 1);
  CHECK(none.num_edges() == 0);
  const StallingsGraph cycle = bouquet(words(2, {"ab"}), F2);
  CHECK(cycle.num_vertices() == 2);
  CHECK(edge_list(cycle) == std::vector<Edge>{{0, 1, 1}, {1, 2, 0}});
  CHECK_THROWS_AS(bouquet(words(3, {"a"}), F2), AlphabetMismatch);
}

TEST_CASE("raw graph validation") {
  CHECK_THROWS_AS(StallingsGraph(F2, 2, 2, {}), IndexOutOfRange);
  CHECK_THROWS_AS(StallingsGraph(F2, 2, 0, {{0, 1, 2}}), IndexOutOfRange);
  CHECK_THROWS_AS(StallingsGraph(F2, 2, 0, {{0, 3, 1}}), UnknownGenerator);
  CHECK_THROWS_AS(rank(StallingsGraph(F2, 3, 0, {})), std::logic_error);
  CHECK_THROWS_AS(contains(bouquet(words(2, {"aa", "a"}), F2), w("a", 2)),
                  std::invalid_argument);
}

TEST_CASE("fold examples") {
  const StallingsGraph twice = fold(bouquet(words(1, {"a", "a"}), F1));
  CHECK(twice.num_edges() == 1);
  CHECK(twice.num_vertices() == 1);
  CHECK(twice.folded());

  const StallingsGraph g = testing::example_h();
  const StallingsGraph again = fold(g);
  CHECK(canonical_code(again) == canonical_code(g));
  CHECK(edge_list(again) == edge_list(g));

  // x1^2 and x1^3 generate <x1>: the word oracle finds every power up to
  // length 8 among products of the two generators.
  const StallingsGraph cyclic = trim(fold(bouquet(words(1, {"aa", "aaa"}), F1)));
  CHECK(canonical_code(cyclic) == canonical_code(sg(1, {"a"})));
  const auto closure = oracle::product_closure({{1, 1}, {1, 1, 1}}, 8, 12, 12);
  CHECK(closure.size() == 17);
  for (const auto& word : oracle::all_words(1, 8)) {
    CHECK(contains(cyclic, oracle::word(word, F1)) == (closure.count(word) == 1));
  }
}

TEST_CASE("trim examples") {
  const StallingsGraph folded = fold(bouquet(words(2, {"abA"}), F2));
  const StallingsGraph trimmed = trim(folded);
  CHECK(trimmed.num_vertices() == 2);
  CHECK(edge_list(trimmed) == std::vector<Edge>{{0, 1, 1}, {1, 2, 1}});
  CHECK(trimmed.degree(0) == 1);

  const StallingsGraph trivial = trim(StallingsGraph::trivial(F2));
  CHECK(trivial.num_vertices() == 1);
  CHECK(trivial.num_edges() == 0);

  // The word is reduced before any graph is built.
  const std::vector<Word> reduced{w("abBAa", 2)};
  CHECK(reduced.front() == w("a", 2));
  CHECK(canonical_code(trim(fold(bouquet(reduced, F2)))) == canonical_code(sg(2, {"a"})));
  CHECK_THROWS_AS(trim(bouquet(words(2, {"aa", "a"}), F2)), std::invalid_argument);
}

TEST_CASE("subgroup_graph examples") {
  CHECK(rank(testing::example_g()) == 3);
  const StallingsGraph f2 = sg(2, {"a", "b"});
  CHECK(f2.num_vertices() == 1);
  CHECK(f2.num_edges() == 2);
  CHECK(canonical_code(sg(1, {"aa", "aaa"})) == canonical_code(sg(1, {"a"})));
  CHECK(sg(2, {}).num_vertices() == 1);
  CHECK(rank(sg(2, {})) == 0);
  CHECK(rank(sg(2, {"", "ab"})) == 1);
}

TEST_CASE("rank examples") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(rank(standard_bouquet(Alphabet(n), n)) == n);
  }
  CHECK(rank(StallingsGraph::trivial(F3)) == 0);
  CHECK(rank(testing::example_h()) == 3);
}

TEST_CASE("contains examples") {
  const StallingsGraph g = testing::example_g();
  CHECK(contains(g, w("xxyyxx", 3)));
  CHECK(contains(g, Word(F3)));
  CHECK(contains(StallingsGraph::trivial(F3), Word(F3)));
  // x acting as a transposition on two points while y and z act trivially:
  // every generator of G fixes point 0 and x does not, so x is not in G.
  const std::vector<std::vector<int>> perms{{1, 0}, {0, 1}, {0, 1}};
  for (const char* gen : {"xxyyxx", "y", "z"}) {
    CHECK(oracle::act(perms, oracle::raw(w(gen, 3)), 0) == 0);
  }
  CHECK(oracle::act(perms, oracle::raw(w("x", 3)), 0) == 1);
  CHECK_FALSE(contains(g, w("x", 3)));
  CHECK_THROWS_AS(contains(g, w("a", 2)), AlphabetMismatch);
}

TEST_CASE("basis examples") {
  CHECK(basis(sg(2, {"a", "b"})) == words(2, {"a", "b"}));
  CHECK(basis(StallingsGraph::trivial(F2)).empty());
  const StallingsGraph cyclic = sg(1, {"aa", "aaa"});
  const auto b = basis(cyclic);
  REQUIRE(b.size() == 1);
  CHECK(canonical_code(subgroup_graph(b, F1)) == canonical_code(cyclic));
}

TEST_CASE("is_finite_index examples") {
  CHECK(is_finite_index(sg(3, {"a", "b", "c"})) == 1);
  // The even-length words form a subgroup of index 2; the graph must accept
  // exactly those.
  const StallingsGraph even = sg(2, {"xx", "yy", "xy"});
  for (const auto& word : oracle::all_words(2, 8)) {
    REQUIRE(contains(even, oracle::word(word, F2)) == oracle::even_length(word));
  }
  CHECK(is_finite_index(even) == 2);
  CHECK_FALSE(is_finite_index(sg(2, {"a"})).has_value());
}

TEST_CASE("canonical_code examples") {
  CHECK(canonical_code(sg(2, {"ab", "ab"})) == canonical_code(sg(2, {"ab"})));
  CHECK(canonical_code(sg(1, {"a"})) != canonical_code(StallingsGraph::trivial(F1)));
  CHECK(canonical_code(sg(2, {"b", "abA"})) == canonical_code(sg(2, {"abA", "b"})));
  CHECK(canonical_code(sg(2, {"a"})) != canonical_code(sg(2, {"b"})));
  CHECK(canonical_code(sg(1, {})) != canonical_code(sg(2, {})));
  CHECK(canonical_code(sg(2, {"a"})).hex().size() % 2 == 0);
}

TEST_CASE("to_dot examples") {
  auto count = [](const std::string& text, const std::string& what) {
    std::size_t c = 0;
    for (std::size_t at = text.find(what); at != std::string::npos;
         at = text.find(what, at + 1)) {
      ++c;
    }
    return c;
  };
  const std::string trivial = to_dot(StallingsGraph::trivial(F2));
  CHECK(count(trivial, "shape=") == 1);
  CHECK(count(trivial, "->") == 0);
  const std::string loop = to_dot(sg(1, {"a"}));
  CHECK(count(loop, "shape=") == 1);
  CHECK(count(loop, "0 -> 0 [label=\"x1\"]") == 1);
  const std::string two = to_dot(sg(2, {"a", "b"}));
  CHECK(count(two, "shape=") == 1);
  CHECK(count(two, "->") == 2);
  CHECK(count(two, "label=\"x2\"") == 1);
  CHECK(count(two, "doublecircle") == 1);
}

TEST_CASE("trace and spanning tree") {
  const StallingsGraph g = sg(2, {"abA"});
  CHECK(trace(g, 0, w("a", 2)) == 1);
  CHECK(trace(g, 0, w("b", 2)) == kNoVertex);
  const SpanningTree t = spanning_tree(g);
  CHECK(t.path[1] == w("a", 2));
  CHECK(std::count(t.in_tree.begin(), t.in_tree.end(), true) == 1);
}

TEST_CASE("property: folding is confluent") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 2;
    const Alphabet a(static_cast<std::size_t>(n));
    const auto gens = random_gens(rng, n, 1 + trial % 4, 8);
    const StallingsGraph raw = bouquet(gens, a);
    const CanonicalCode expected = canonical_code(trim(fold(raw)));
    // Independent quadratic folding reaches the same rooted graph.
    const auto naive = oracle::naive_trim(oracle::naive_fold(oracle::naive_bouquet(raw_all(gens), n)));
    REQUIRE(oracle::naive_canonical(naive) ==
            oracle::naive_canonical(oracle::from_library(trim(fold(raw)))));
    for (int order = 0; order < 5; ++order) {
      std::vector<Vertex> relabel(raw.num_vertices());
      std::iota(relabel.begin(), relabel.end(), 0);
      std::shuffle(relabel.begin(), relabel.end(), rng);
      std::vector<Edge> edges;
      for (const Edge& e : raw.edges()) {
        edges.push_back({relabel[e.origin], e.label, relabel[e.target]});
      }
      std::shuffle(edges.begin(), edges.end(), rng);
      const StallingsGraph shuffled(a, raw.num_vertices(), relabel[raw.base()], edges);
      REQUIRE(canonical_code(trim(fold(shuffled))) == expected);
    }
  }
}

TEST_CASE("property: the graph language matches products of generators") {
  std::mt19937_64 rng(22);
  const auto all = oracle::all_words(2, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = random_gens(rng, 2, 1 + trial % 3, 4);
    const StallingsGraph g = subgroup_graph(gens, F2);
    const auto naive = oracle::naive_fold(oracle::naive_bouquet(raw_all(gens), 2));
    const auto closure = oracle::product_closure(raw_all(gens), 8, 4, 16);
    for (const auto& word : all) {
      const bool member = contains(g, oracle::word(word, F2));
      REQUIRE(member == oracle::naive_contains(naive, word));
      if (closure.count(word) != 0) {
        REQUIRE(member);
      }
    }
  }
}

TEST_CASE("property: rank agrees with the degree-sum formula") {
  reset_rank_audit();
  std::size_t checked = 0;
  for (auto [n, v] : {std::pair<std::size_t, std::size_t>{2, 4}, {3, 3}, {4, 2}}) {
    for (const StallingsGraph& g : cores(n, v)) {
      const std::size_t r = rank(g);
      REQUIRE(static_cast<int>(r) == oracle::naive_rank(oracle::from_library(g)));
      if (const auto by_degree = betti_by_degree_sum(g)) {
        REQUIRE(*by_degree == static_cast<long>(r));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
  CHECK(rank_audit().mismatches == 0);
  CHECK(rank_audit().checks >= checked);
}

TEST_CASE("property: basis regenerates the graph") {
  std::size_t graphs = 0;
  for (auto [n, v] : {std::pair<std::size_t, std::size_t>{2, 5}, {3, 3}, {1, 5}}) {
    for (const StallingsGraph& g : cores(n, v)) {
      const auto b = basis(g);
      REQUIRE(b.size() == rank(g));
      REQUIRE(canonical_code(subgroup_graph(b, g.alphabet())) == canonical_code(g));
      ++graphs;
    }
  }
  CHECK(graphs > 10000);
}

TEST_CASE("property: trim keeps the base and the language") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Vertex> vertex(0, 5);
  std::uniform_int_distribution<Generator> label(1, 2);
  const auto all = oracle::all_words(2, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Edge> edges;
    for (int i = 0; i < 7; ++i) {
      edges.push_back({vertex(rng), label(rng), vertex(rng)});
    }
    const StallingsGraph folded = fold(StallingsGraph(F2, 6, vertex(rng), edges));
    const StallingsGraph trimmed = trim(folded);
    REQUIRE(trimmed.base() == 0);
    REQUIRE(trimmed.num_vertices() >= 1);
    REQUIRE(rank(trimmed) == rank(folded));
    for (Vertex v = 1; v < trimmed.num_vertices(); ++v) {
      REQUIRE(trimmed.degree(v) >= 2);
    }
    for (const auto& word : all) {
      const Word u = oracle::word(word, F2);
      REQUIRE(contains(folded, u) == contains(trimmed, u));
    }
  }
}
