// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "stallings/echelon.hpp"
#include "stallings/endo.hpp"
#include "stallings/json_io.hpp"
#include "stallings/lab.hpp"
#include "stallings/subgroup_ops.hpp"
#include "support.hpp"

using namespace stallings;
using Clock = std::chrono::steady_clock;

namespace {

const Alphabet F2(2), F3(3);

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

EnumBudget exhaustive(std::size_t max_vertices) {
  EnumBudget b;
  b.max_vertices = max_vertices;
  return b;
}

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Graphs seen while running criteria 2 to 4, for the explicit Betti recount.
std::vector<StallingsGraph> audited;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

Word random_word_with_top(std::mt19937_64& rng, Generator top, std::size_t max_len) {
  const Alphabet a(top);
  while (true) {
    const auto raw = oracle::random_word(rng, static_cast<int>(top), max_len);
    const Word w = oracle::word(raw, a);
    if (max_generator(w) == top) {
      return w;
    }
  }
}

// Criterion 1.
Outcome example_pipeline() {
  const auto start = Clock::now();
  const std::vector<OneGenEndo> steps{OneGenEndo(F3, 1, testing::w("xxyyxx", 3)),
                                      OneGenEndo(F3, 2, testing::w("yyzzyy", 3)),
                                      OneGenEndo(F3, 3, testing::w("zzxzz", 3))};
  const Endomorphism composite = run_pipeline(steps, F3);
  const StallingsGraph img = image(composite);
  const double t = since(start);
  if (composite.images() != testing::words(3, {"xxyyxx", "yyzzyy", "zzxxyyxxzz"})) {
    return fail("images " + to_string(composite.image_of(1)) + ", " +
                to_string(composite.image_of(2)) + ", " + to_string(composite.image_of(3)));
  }
  if (canonical_code(img) != canonical_code(testing::example_h())) {
    return fail("image graph differs from H");
  }
  if (rank(img) != 3) {
    return fail("rank " + std::to_string(rank(img)));
  }
  if (t >= 1.0) {
    return fail("took " + std::to_string(t) + " s");
  }
  return {true, "images (u, v, w), rank 3, " + std::to_string(t) + " s"};
}

// Criterion 2.
std::string inertia_of_h(Outcome& outcome) {
  const auto start = Clock::now();
  const EnumBudget budget = exhaustive(3);
  const InertiaReport r = test_inert(testing::example_h(), budget, jobs());
  const double t = since(start);
  outcome = {r.violations.empty() && r.tested > 0 && t < 300,
             std::to_string(r.tested) + " graphs, " + std::to_string(r.violations.size()) +
                 " violations, " + std::to_string(t) + " s"};
  audited.push_back(testing::example_h());
  return dump(inertia_report_to_json(r, budget));
}

// Criterion 3.
std::string one_generator_images(Outcome& outcome) {
  std::mt19937_64 rng(20240301);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 3);
  const EnumBudget budget = exhaustive(3);
  Json reports = Json::array();
  std::size_t violations = 0;
  std::size_t tested = 0;
  for (int i = 0; i < 200; ++i) {
    const Alphabet a(rank_dist(rng));
    std::uniform_int_distribution<Generator> moved_dist(1, static_cast<Generator>(a.rank()));
    const Generator moved = moved_dist(rng);
    const Word x = oracle::word(oracle::random_word(rng, static_cast<int>(a.rank()), 6), a);
    const StallingsGraph img = image(OneGenEndo(a, moved, x).as_endomorphism());
    audited.push_back(img);
    const InertiaReport r = test_inert(img, budget, jobs());
    violations += r.violations.size();
    tested += r.tested;
    Json item;
    item["n"] = a.rank();
    item["moved"] = moved;
    item["image"] = to_string(x);
    item["report"] = inertia_report_to_json(r, budget);
    reports.push_back(std::move(item));
  }
  outcome = {violations == 0,
             "200 endomorphisms, " + std::to_string(tested) + " intersections, " +
                 std::to_string(violations) + " violations"};
  return dump(reports);
}

// Criterion 4.
Outcome echelon_certificates() {
  std::mt19937_64 rng(20240302);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 4);
  std::bernoulli_distribution coin(0.6);
  int built = 0;
  int attempts = 0;
  while (built < 100) {
    if (++attempts > 100000) {
      return fail("could not draw 100 certificates");
    }
    const Alphabet a(rank_dist(rng));
    const std::size_t n = a.rank();
    std::vector<Generator> indices;
    std::vector<Word> ys;
    for (Generator i = 1; i <= n; ++i) {
      if (coin(rng)) {
        indices.push_back(i);
        ys.push_back(random_word_with_top(rng, i, 5).rebased(a));
      }
    }
    const EchelonCertificate cert(a, indices, ys);
    const StallingsGraph expected = subgroup_graph(ys, a);
    if (expected.num_vertices() > 9) {
      continue;
    }
    ++built;
    const EchelonPipeline p = build_via_pipeline(cert, a);
    const StallingsGraph img = p.image();
    audited.push_back(img);
    std::ostringstream where;
    where << "certificate " << built << " over F_" << n;
    if (canonical_code(img) != canonical_code(expected)) {
      return fail(where.str() + ": pipeline image differs from the certificate subgroup");
    }
    if (!is_echelon_wrt(img, OrderedBasis::identity(a)).echelon) {
      return fail(where.str() + ": image not echelon");
    }
    if (p.steps.size() > n) {
      return fail(where.str() + ": " + std::to_string(p.steps.size()) + " steps");
    }
    for (const OneGenEndo& s : p.steps) {
      if (s.is_identity()) {
        return fail(where.str() + ": identity step");
      }
    }
    if (rank(img) != ys.size()) {
      return fail(where.str() + ": rank " + std::to_string(rank(img)));
    }
    const CompressionReport c = test_compressed(img);
    if (!c.compressed || !c.exhaustive) {
      return fail(where.str() + ": not shown compressed");
    }
  }
  return {true, "100 certificates, pipelines echelon, compressed"};
}

// Criterion 5.
Outcome betti_consistency(const std::vector<StallingsGraph>& families) {
  const RankAudit audit = rank_audit();
  if (audit.mismatches != 0) {
    return fail(std::to_string(audit.mismatches) + " mismatches inside rank()");
  }
  std::size_t recounted = 0;
  auto recount = [&](const StallingsGraph& g) {
    bool all_two = true;
    long sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      all_two = all_two && g.degree(v) >= 2;
      sum += static_cast<long>(g.degree(v)) - 2;
    }
    if (!all_two) {
      return true;
    }
    ++recounted;
    const long betti = static_cast<long>(g.num_edges()) - static_cast<long>(g.num_vertices()) + 1;
    return sum % 2 == 0 && betti == 1 + sum / 2;
  };
  for (const std::vector<StallingsGraph>* list : {&std::as_const(audited), &families}) {
    for (const StallingsGraph& g : *list) {
      if (!recount(g)) {
        return fail("degree sum disagrees on " + canonical_code(g).hex());
      }
    }
  }
  return {audit.checks > 0 && recounted > 0,
          std::to_string(audit.checks) + " audited inside rank(), " + std::to_string(recounted) +
              " recounted, 0 mismatches"};
}

// Criterion 6.
std::string hanna_neumann(Outcome& outcome) {
  const auto start = Clock::now();
  const EnumBudget budget = exhaustive(3);
  const HnReport r = hn_bound_scan(F2, budget, jobs());
  const double t = since(start);
  outcome = {r.violations.empty() && r.tested > 0 && t < 600,
             std::to_string(r.tested) + " pairs, " + std::to_string(r.violations.size()) +
                 " violations, " + std::to_string(t) + " s"};
  return dump(hn_report_to_json(r, budget));
}

// Criterion 7.
Outcome oracle_equivalence() {
  std::vector<Word> all;
  for (const auto& r : oracle::all_words(2, 6)) {
    all.push_back(oracle::word(r, F2));
  }
  std::size_t graphs = 0;
  for (std::size_t v = 1; v <= 3; ++v) {
    for (const StallingsGraph& g : enumerate_cores(F2, exhaustive(v))) {
      ++graphs;
      const std::set<Word> members = brute_force_members(basis(g), F2, 6);
      for (const Word& u : all) {
        if (contains(g, u) != (members.count(u) == 1)) {
          return fail("disagree on " + display(u) + " in " + canonical_code(g).hex());
        }
      }
    }
  }
  return {true, std::to_string(graphs) + " graphs x " + std::to_string(all.size()) + " words"};
}

// Criterion 8.
Outcome order_sensitivity() {
  const StallingsGraph g = testing::example_g();
  const EchelonCheck yxz = is_echelon_wrt(g, OrderedBasis::parse("y,x,z", F3));
  const EchelonCheck xyz = is_echelon_wrt(g, OrderedBasis::identity(F3));
  const bool ok = yxz.echelon && yxz.profile == RankProfile({0, 1, 2, 3}) && !xyz.echelon &&
                  xyz.profile == RankProfile({0, 0, 2, 3});
  auto show = [](const RankProfile& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      s += (i ? "," : "") + std::to_string(p[i]);
    }
    return s;
  };
  return {ok, "(y,x,z) " + std::string(yxz.echelon ? "echelon " : "not echelon ") +
                  show(yxz.profile) + "; (x,y,z) " +
                  (xyz.echelon ? "echelon " : "not echelon ") + show(xyz.profile)};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("criterion %d %s: %s (%s)\n", id, name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  };
  auto guarded = [&](const std::function<Outcome()>& body) -> Outcome {
    try {
      return body();
    } catch (const std::exception& e) {
      return fail(std::string("threw: ") + e.what());
    }
  };

  reset_rank_audit();
  report(1, "worked example pipeline", guarded(example_pipeline));

  std::string first_inertia;
  std::string first_images;
  std::string first_hn;
  report(2, "inertia of H", guarded([&] {
           Outcome o;
           first_inertia = inertia_of_h(o);
           return o;
         }));
  report(3, "1-generator images inert", guarded([&] {
           Outcome o;
           first_images = one_generator_images(o);
           return o;
         }));
  report(4, "echelon certificates", guarded(echelon_certificates));
  report(5, "Betti degree sum", guarded([&] {
           const auto f3 = enumerate_cores(F3, exhaustive(3));
           return betti_consistency(f3);
         }));
  report(6, "Hanna Neumann scan", guarded([&] {
           Outcome o;
           first_hn = hanna_neumann(o);
           return o;
         }));
  report(7, "oracle equivalence", guarded(oracle_equivalence));
  report(8, "echelon order sensitivity", guarded(order_sensitivity));
  report(9, "deterministic reports", guarded([&] {
           Outcome ignored;
           const bool same = inertia_of_h(ignored) == first_inertia &&
                             one_generator_images(ignored) == first_images &&
                             hanna_neumann(ignored) == first_hn;
           return Outcome{same && !first_inertia.empty(),
                          same ? "reruns byte identical" : "reruns differ"};
         }));

  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
