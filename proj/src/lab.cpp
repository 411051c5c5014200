#include "stallings/lab.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>

#include "stallings/subgroup_ops.hpp"

namespace stallings {

namespace {

using Clock = std::chrono::steady_clock;

// Runs body(i) for i in [0, count) on `jobs` threads with a fixed striding,
// so results written per index do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += jobs) {
          body(i);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

// Uniform integer in [0, bound) by rejection, so streams depend only on the
// mt19937_64 output sequence.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Grows deterministic transition tables vertex by vertex, slot by slot
// (label ascending, outgoing before incoming). A slot is left empty, joined to
// an already created vertex that has not been processed, or joined to a fresh
// vertex. The vertex numbering produced this way is the canonical BFS
// numbering, so every connected folded graph is produced exactly once.
class CoreGenerator {
 public:
  CoreGenerator(Alphabet alphabet, std::size_t max_vertices,
                const std::function<bool(const StallingsGraph&)>& emit)
      : alphabet_(alphabet),
        n_(alphabet.rank()),
        max_vertices_(max_vertices),
        out_(max_vertices * n_, kNoVertex),
        in_(max_vertices * n_, kNoVertex),
        degree_(max_vertices, 0),
        emit_(emit) {}

  void run() { step(0, 0); }

 private:
  bool step(Vertex v, std::size_t slot) {
    if (v == created_) {
      return emit_(detail::make_canonical(
          alphabet_, created_, 0,
          std::span<const Vertex>(out_).first(created_ * n_),
          std::span<const Vertex>(in_).first(created_ * n_), true));
    }
    if (slot == 2 * n_) {
      // v is final now; non-base vertices of a core need degree >= 2.
      if (v != 0 && degree_[v] < 2) {
        return true;
      }
      return step(v + 1, 0);
    }
    const std::size_t l = slot / 2;
    const bool outgoing = slot % 2 == 0;
    Vertex& mine = outgoing ? out_[v * n_ + l] : in_[v * n_ + l];
    if (mine != kNoVertex) {
      return step(v, slot + 1);
    }
    if (!step(v, slot + 1)) {
      return false;
    }
    auto try_link = [&](Vertex w) {
      Vertex& theirs = outgoing ? in_[w * n_ + l] : out_[w * n_ + l];
      mine = w;
      theirs = v;
      ++degree_[v];
      ++degree_[w];
      const bool go_on = step(v, slot + 1);
      --degree_[v];
      --degree_[w];
      theirs = kNoVertex;
      mine = kNoVertex;
      return go_on;
    };
    for (Vertex w = v; w < created_; ++w) {
      const Vertex theirs = outgoing ? in_[w * n_ + l] : out_[w * n_ + l];
      // A loop on an incoming slot would fill the outgoing slot of v, which
      // was already decided.
      if (theirs != kNoVertex || (w == v && !outgoing)) {
        continue;
      }
      if (!try_link(w)) {
        return false;
      }
    }
    if (created_ < max_vertices_) {
      const auto fresh = static_cast<Vertex>(created_++);
      const bool go_on = try_link(fresh);
      --created_;
      if (!go_on) {
        return false;
      }
    }
    return true;
  }

  Alphabet alphabet_;
  std::size_t n_;
  std::size_t max_vertices_;
  std::size_t created_ = 1;
  std::vector<Vertex> out_;
  std::vector<Vertex> in_;
  std::vector<std::size_t> degree_;
  const std::function<bool(const StallingsGraph&)>& emit_;
};

StallingsGraph random_core(Alphabet alphabet, std::size_t num_vertices,
                           std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<Vertex> perm(num_vertices);
  for (Generator l = 1; l <= alphabet.rank(); ++l) {
    for (std::size_t i = 0; i < num_vertices; ++i) {
      perm[i] = static_cast<Vertex>(i);
    }
    for (std::size_t i = num_vertices; i > 1; --i) {
      std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    }
    for (std::size_t v = 0; v < num_vertices; ++v) {
      if (uniform_below(rng, 2) == 1) {
        edges.push_back({static_cast<Vertex>(v), l, perm[v]});
      }
    }
  }
  return trim(fold(StallingsGraph(alphabet, num_vertices, 0, std::move(edges))));
}

}  // namespace

void for_each_core(Alphabet alphabet, const EnumBudget& budget,
                   const std::function<bool(const StallingsGraph&)>& visit) {
  if (budget.max_vertices == 0) {
    throw IndexOutOfRange("max_vertices must be at least 1");
  }
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
  std::size_t emitted = 0;
  const auto cap = budget.max_graphs.value_or(std::numeric_limits<std::size_t>::max());
  auto deliver = [&](const StallingsGraph& g) {
    if (emitted >= cap) {
      return false;
    }
    if (!seen.insert(canonical_code(g)).second) {
      return true;
    }
    ++emitted;
    return visit(g) && emitted < cap;
  };

  if (budget.mode == EnumMode::exhaustive) {
    if (alphabet.rank() * budget.max_vertices > budget.slot_limit) {
      throw BudgetExceeded("exhaustive enumeration of " +
                           std::to_string(alphabet.rank() * budget.max_vertices) +
                           " transition slots exceeds the limit of " +
                           std::to_string(budget.slot_limit));
    }
    const std::function<bool(const StallingsGraph&)> emit = deliver;
    CoreGenerator(alphabet, budget.max_vertices, emit).run();
    return;
  }

  if (!budget.max_graphs) {
    throw BudgetExceeded("sampled enumeration needs a max_graphs cap");
  }
  std::mt19937_64 rng(budget.seed);
  const std::size_t attempts = std::max<std::size_t>(1000, 50 * *budget.max_graphs);
  for (std::size_t i = 0; i < attempts; ++i) {
    if (!deliver(random_core(alphabet, budget.max_vertices, rng))) {
      return;
    }
  }
}

std::vector<StallingsGraph> enumerate_cores(Alphabet alphabet,
                                            const EnumBudget& budget) {
  std::vector<StallingsGraph> graphs;
  for_each_core(alphabet, budget, [&](const StallingsGraph& g) {
    graphs.push_back(g);
    return true;
  });
  return graphs;
}

std::set<Word> brute_force_members(std::span<const Word> gens, Alphabet alphabet,
                                   std::size_t max_len, std::size_t element_cap) {
  std::vector<Word> letters;
  std::size_t min_len = std::numeric_limits<std::size_t>::max();
  std::size_t max_gen_len = 0;
  for (const Word& g : gens) {
    require_same_alphabet(alphabet, g.alphabet(), "brute_force_members");
    if (g.empty()) {
      continue;
    }
    letters.push_back(g);
    letters.push_back(invert(g));
    min_len = std::min(min_len, g.size());
    max_gen_len = std::max(max_gen_len, g.size());
  }
  std::set<Word> members{Word(alphabet)};
  if (letters.empty()) {
    return members;
  }
  const std::size_t factors = (2 * max_len + min_len - 1) / min_len + 2;
  const std::size_t length_cap = max_len + max_gen_len;

  std::unordered_set<Word> reached{Word(alphabet)};
  std::vector<Word> frontier{Word(alphabet)};
  for (std::size_t step = 0; step < factors && !frontier.empty(); ++step) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& g : letters) {
        Word p = w * g;
        if (p.size() <= length_cap && reached.insert(p).second) {
          next.push_back(std::move(p));
        }
      }
    }
    if (reached.size() > element_cap) {
      throw BudgetExceeded("brute-force product set exceeds " +
                           std::to_string(element_cap) + " elements");
    }
    frontier = std::move(next);
  }
  for (const Word& w : reached) {
    if (w.size() <= max_len) {
      members.insert(w);
    }
  }
  return members;
}

InertiaReport test_inert(const StallingsGraph& h,
                         std::span<const StallingsGraph> family, unsigned jobs) {
  const auto start = Clock::now();
  std::vector<std::optional<InertiaViolation>> found(family.size());
  parallel_for(family.size(), jobs, [&](std::size_t i) {
    const StallingsGraph& g = family[i];
    const std::size_t rk_cap = rank(intersect(h, g));
    const std::size_t rk_g = rank(g);
    if (rk_cap > rk_g) {
      found[i] = InertiaViolation{canonical_code(g), rk_cap, rk_g};
    }
  });
  InertiaReport report;
  report.tested = family.size();
  for (auto& v : found) {
    if (v) {
      report.violations.push_back(std::move(*v));
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const auto& a, const auto& b) { return a.g < b.g; });
  report.elapsed = Clock::now() - start;
  return report;
}

InertiaReport test_inert(const StallingsGraph& h, const EnumBudget& budget,
                         unsigned jobs) {
  const auto start = Clock::now();
  const std::vector<StallingsGraph> family = enumerate_cores(h.alphabet(), budget);
  InertiaReport report = test_inert(h, family, jobs);
  report.elapsed = Clock::now() - start;
  return report;
}

namespace {

// Folded quotients of h by restricted growth strings over its vertex set:
// block[0] = 0 holds the base, and each entry is at most one more than the
// maximum before it. Calls visit(trimmed quotient).
void quotients_by_partition(const StallingsGraph& h,
                            const std::function<void(const StallingsGraph&)>& visit) {
  const std::size_t count = h.num_vertices();
  std::vector<Vertex> block(count, 0);
  std::vector<Vertex> prefix_max(count, 0);
  std::vector<Edge> edges(h.edges().size());
  for (;;) {
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
      const Edge& e = h.edges()[i];
      edges[i] = {block[e.origin], e.label, block[e.target]};
    }
    visit(trim(fold(StallingsGraph(h.alphabet(), prefix_max[count - 1] + 1,
                                   block[h.base()], edges))));
    std::size_t i = count;
    while (i-- > 1) {
      if (block[i] <= prefix_max[i - 1]) {
        break;
      }
    }
    if (i == 0 || count == 1) {
      return;
    }
    ++block[i];
    prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
    for (std::size_t j = i + 1; j < count; ++j) {
      block[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

// Builds a folded graph K together with the label-preserving map f from h's
// graph onto it, one edge of h at a time in canonical order. Each folded
// quotient corresponds to exactly one such map, so every quotient is produced
// once. Adding an edge never lowers |E_K| - |V_K| + 1, which lets a rank cap
// prune partial maps.
class QuotientSearch {
 public:
  QuotientSearch(const StallingsGraph& h, std::size_t max_nodes,
                 const std::function<void(const StallingsGraph&)>& visit)
      : h_(fold(h)),
        n_(h.alphabet().rank()),
        out_(h_.num_vertices() * n_, kNoVertex),
        in_(h_.num_vertices() * n_, kNoVertex),
        image_(h_.num_vertices(), kNoVertex),
        max_nodes_(max_nodes),
        visit_(visit) {
    // fold() numbers vertices breadth first from the base, so ordering edges
    // by their smaller endpoint guarantees one endpoint is already mapped.
    for (std::size_t i = 0; i < h_.num_edges(); ++i) {
      order_.push_back(i);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      auto key = [&](std::size_t i) {
        const Edge& e = h_.edges()[i];
        return std::pair(std::min(e.origin, e.target), e.label);
      };
      return key(x) < key(y);
    });
  }

  // Visits quotients of rank <= cap (all of them when cap is empty). The cap
  // may be lowered by the caller from inside visit().
  void run(std::optional<std::size_t>* cap) {
    cap_ = cap;
    image_[h_.base()] = 0;
    step(0);
  }

 private:
  bool over_cap() const {
    return *cap_ && edges_ + 1 > vertices_ + **cap_;
  }

  void link(Vertex s, Generator l, Vertex t, int delta) {
    out_[s * n_ + l - 1] = delta > 0 ? t : kNoVertex;
    in_[t * n_ + l - 1] = delta > 0 ? s : kNoVertex;
    edges_ += delta;
  }

  void step(std::size_t i) {
    if (++nodes_ > max_nodes_) {
      throw BudgetExceeded("quotient search visited more than " +
                           std::to_string(max_nodes_) + " partial maps");
    }
    if (over_cap()) {
      return;
    }
    if (i == order_.size()) {
      const auto span_out = std::span<const Vertex>(out_).first(vertices_ * n_);
      const auto span_in = std::span<const Vertex>(in_).first(vertices_ * n_);
      visit_(trim(detail::make_canonical(h_.alphabet(), vertices_, 0, span_out,
                                         span_in, false)));
      return;
    }
    const Edge& e = h_.edges()[order_[i]];
    const Generator l = e.label;
    Vertex& fa = image_[e.origin];
    Vertex& fb = image_[e.target];
    if (fa != kNoVertex && out_[fa * n_ + l - 1] != kNoVertex) {
      const Vertex t = out_[fa * n_ + l - 1];
      if (fb == kNoVertex) {
        fb = t;
        step(i + 1);
        fb = kNoVertex;
      } else if (fb == t) {
        step(i + 1);
      }
      return;
    }
    if (fb != kNoVertex && in_[fb * n_ + l - 1] != kNoVertex) {
      const Vertex s = in_[fb * n_ + l - 1];
      if (fa == kNoVertex) {
        fa = s;
        step(i + 1);
        fa = kNoVertex;
      }
      // fa is assigned here only when its outgoing slot is free, so it
      // cannot equal s.
      return;
    }
    if (fa != kNoVertex && fb != kNoVertex) {
      link(fa, l, fb, 1);
      step(i + 1);
      link(fa, l, fb, -1);
      return;
    }
    // Exactly one endpoint is mapped; the other goes to an existing vertex
    // with a free slot or to a fresh one.
    const bool forward = fa != kNoVertex;
    Vertex& open = forward ? fb : fa;
    const Vertex known = forward ? fa : fb;
    for (Vertex w = 0; w <= vertices_; ++w) {
      const bool fresh = w == vertices_;
      if (fresh && vertices_ == image_.size()) {
        break;
      }
      if (!fresh && (forward ? in_[w * n_ + l - 1] : out_[w * n_ + l - 1]) != kNoVertex) {
        continue;
      }
      vertices_ += fresh;
      open = w;
      forward ? link(known, l, w, 1) : link(w, l, known, 1);
      step(i + 1);
      forward ? link(known, l, w, -1) : link(w, l, known, -1);
      open = kNoVertex;
      vertices_ -= fresh;
    }
  }

  StallingsGraph h_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<Vertex> out_;
  std::vector<Vertex> in_;
  std::vector<Vertex> image_;
  std::size_t vertices_ = 1;
  std::size_t edges_ = 0;
  std::size_t nodes_ = 0;
  std::size_t max_nodes_;
  std::optional<std::size_t>* cap_ = nullptr;
  const std::function<void(const StallingsGraph&)>& visit_;
};

}  // namespace

void for_each_quotient(const StallingsGraph& h, QuotientMethod method,
                       const std::function<void(const StallingsGraph&)>& visit,
                       std::size_t max_nodes) {
  require_folded_graph(h, "for_each_quotient");
  if (method == QuotientMethod::partitions) {
    quotients_by_partition(h, visit);
    return;
  }
  std::optional<std::size_t> cap;
  QuotientSearch(h, max_nodes, visit).run(&cap);
}

CompressionReport test_compressed(const StallingsGraph& h,
                                  std::size_t max_partition_vertices,
                                  std::size_t max_nodes) {
  require_folded_graph(h, "test_compressed");
  CompressionReport report;
  report.rank = rank(h);
  report.min_overgroup_rank = report.rank;
  std::set<CanonicalCode> seen;
  auto consider = [&](const StallingsGraph& q) {
    CanonicalCode code = canonical_code(q);
    if (seen.count(code) != 0) {
      return;
    }
    const std::size_t r = rank(q);
    if (r < report.min_overgroup_rank ||
        (r < report.rank && r == report.min_overgroup_rank && code < *report.witness)) {
      report.min_overgroup_rank = r;
      report.witness = code;
    }
    seen.insert(std::move(code));
  };

  if (h.num_vertices() <= max_partition_vertices) {
    report.exhaustive = true;
    quotients_by_partition(h, consider);
  } else {
    // Only quotients that could beat the best rank so far are completed.
    report.exhaustive = false;
    consider(h);
    std::optional<std::size_t> cap;
    if (report.rank > 0) {
      cap = report.rank - 1;
      const std::function<void(const StallingsGraph&)> tighten =
          [&](const StallingsGraph& q) {
            consider(q);
            cap = report.min_overgroup_rank;
          };
      QuotientSearch(h, max_nodes, tighten).run(&cap);
    }
  }
  report.quotients_tested = seen.size();
  report.compressed = report.min_overgroup_rank >= report.rank;
  return report;
}

HnReport hn_bound_scan(Alphabet alphabet, const EnumBudget& budget,
                       unsigned jobs) {
  const auto start = Clock::now();
  std::vector<StallingsGraph> family;
  std::vector<std::size_t> ranks;
  std::vector<CanonicalCode> codes;
  for_each_core(alphabet, budget, [&](const StallingsGraph& g) {
    if (const std::size_t r = rank(g); r > 0) {
      family.push_back(g);
      ranks.push_back(r);
      codes.push_back(canonical_code(g));
    }
    return true;
  });

  std::vector<std::vector<HnViolation>> rows(family.size());
  parallel_for(family.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      const std::size_t rk_cap = rank(intersect(family[i], family[j]));
      const std::size_t bound = 1 + (ranks[i] - 1) * (ranks[j] - 1);
      if (rk_cap > bound) {
        rows[i].push_back({codes[i], codes[j], rk_cap, bound});
      }
    }
  });

  HnReport report;
  report.tested = family.size() * (family.size() + 1) / 2;
  for (auto& row : rows) {
    for (auto& v : row) {
      report.violations.push_back(std::move(v));
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const auto& a, const auto& b) {
              return a.g1 != b.g1 ? a.g1 < b.g1 : a.g2 < b.g2;
            });
  report.elapsed = Clock::now() - start;
  return report;
}

bool rank_chain_check(const StallingsGraph& h, const StallingsGraph& g) {
  require_same_alphabet(h.alphabet(), g.alphabet(), "rank_chain_check");
  for (const Word& w : basis(h)) {
    if (!contains(g, w)) {
      throw NotASubgroup("basis element " + display(w) +
                         " of H is not in G");
    }
  }
  const RankProfile ph = rank_profile(h);
  const RankProfile pg = rank_profile(g);
  for (std::size_t i = 0; i < ph.size(); ++i) {
    if (pg[i] < ph[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace stallings
