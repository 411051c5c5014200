#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "stallings/core_graph.hpp"
#include "stallings/echelon.hpp"
#include "stallings/endo.hpp"
#include "stallings/error.hpp"
#include "stallings/fix_structure.hpp"
#include "stallings/json_io.hpp"
#include "stallings/lab.hpp"
#include "stallings/subgroup_ops.hpp"

namespace stallings::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string trim_space(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::size_t parse_count(std::string_view text, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw SyntaxError("bad " + what + " \"" + std::string(text) + "\"");
  }
  return value;
}

std::string join(const std::vector<std::size_t>& values, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i ? sep : "") << values[i];
  }
  return out.str();
}

std::string join_words(std::span<const Word> words, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    out += (i ? sep : "") + display(words[i]);
  }
  return out;
}

struct Options {
  std::optional<std::size_t> n;
  std::vector<std::string> gens;
  std::vector<std::string> subgroup;
  std::string file;
  std::string graph;
  std::vector<std::string> other;
  std::string other_file;
  std::string other_graph;
  std::string word;
  std::string order;
  std::string format = "text";
  std::size_t budget_vertices = 0;
  std::string mode = "exhaustive";
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::optional<std::size_t> max_graphs;
  std::vector<std::string> steps;
  std::string cert;
  std::string endo;
};

struct Subgroup {
  Alphabet alphabet;
  std::vector<Word> gens;
  StallingsGraph graph;
};

Alphabet resolve_alphabet(const Options& opt, std::optional<Alphabet> found) {
  if (found) {
    if (opt.n && *opt.n != found->rank()) {
      throw AlphabetMismatch("-n " + std::to_string(*opt.n) +
                             " disagrees with input rank " +
                             std::to_string(found->rank()));
    }
    return *found;
  }
  if (!opt.n) {
    throw Error("missing -n <rank>");
  }
  return Alphabet(*opt.n);
}

Subgroup from_words(Alphabet a, const std::vector<std::string>& texts) {
  std::vector<Word> gens;
  for (const auto& t : texts) {
    gens.push_back(parse_word(t, a));
  }
  StallingsGraph g = subgroup_graph(gens, a);
  return {a, std::move(gens), std::move(g)};
}

Subgroup from_graph_file(const std::string& path) {
  StallingsGraph g = graph_from_json(parse_json_text(read_file(path)));
  std::vector<Word> gens = basis(g);
  const Alphabet a = g.alphabet();
  return {a, std::move(gens), std::move(g)};
}

Subgroup load_primary(const Options& opt) {
  std::vector<std::string> words = opt.gens;
  words.insert(words.end(), opt.subgroup.begin(), opt.subgroup.end());
  const int sources = !opt.graph.empty() + !opt.file.empty();
  if (sources > 1 || (sources == 1 && !words.empty())) {
    throw Error("give the subgroup once: words, --file or --graph");
  }
  if (!opt.graph.empty()) {
    Subgroup s = from_graph_file(opt.graph);
    resolve_alphabet(opt, s.alphabet);
    return s;
  }
  if (!opt.file.empty()) {
    SubgroupFile f = parse_subgroup_file(opt.file);
    const Alphabet a = resolve_alphabet(opt, f.alphabet);
    StallingsGraph g = subgroup_graph(f.gens, a);
    return {a, std::move(f.gens), std::move(g)};
  }
  return from_words(resolve_alphabet(opt, std::nullopt), words);
}

Subgroup load_other(const Options& opt, Alphabet a) {
  const int sources = !opt.other_graph.empty() + !opt.other_file.empty() +
                      !opt.other.empty();
  if (sources != 1) {
    throw Error("give the second subgroup once: --other, --other-file or --other-graph");
  }
  if (!opt.other_graph.empty()) {
    Subgroup s = from_graph_file(opt.other_graph);
    require_same_alphabet(a, s.alphabet, "second subgroup");
    return s;
  }
  if (!opt.other_file.empty()) {
    SubgroupFile f = parse_subgroup_file(opt.other_file);
    require_same_alphabet(a, f.alphabet, "second subgroup");
    StallingsGraph g = subgroup_graph(f.gens, a);
    return {a, std::move(f.gens), std::move(g)};
  }
  return from_words(a, opt.other);
}

OrderedBasis load_order(const Options& opt, Alphabet a) {
  return opt.order.empty() ? OrderedBasis::identity(a) : OrderedBasis::parse(opt.order, a);
}

EnumBudget load_budget(const Options& opt, std::size_t default_vertices) {
  EnumBudget budget;
  budget.max_vertices = opt.budget_vertices ? opt.budget_vertices : default_vertices;
  budget.max_graphs = opt.max_graphs;
  budget.mode = opt.mode == "sampled" ? EnumMode::sampled : EnumMode::exhaustive;
  if (budget.mode == EnumMode::sampled) {
    if (!opt.seed) {
      throw Error("--mode sampled needs an explicit --seed");
    }
    if (!opt.max_graphs) {
      throw Error("--mode sampled needs --max-graphs");
    }
  }
  budget.seed = opt.seed.value_or(0);
  return budget;
}

void require_format(const Options& opt, bool dot_allowed) {
  if (opt.format == "dot" && !dot_allowed) {
    throw Error("--format dot is only available for graph output");
  }
}

std::string seconds(std::chrono::duration<double> d) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << d.count() << " s";
  return out.str();
}

// Text, JSON or DOT rendering of a result graph.
void print_graph(const Options& opt, const StallingsGraph& g, std::ostream& out) {
  if (opt.format == "dot") {
    out << to_dot(g);
    return;
  }
  if (opt.format == "json") {
    Json doc = graph_to_json(g);
    doc["rank"] = rank(g);
    doc["code"] = canonical_code(g).hex();
    out << dump(doc);
    return;
  }
  out << "rank " << rank(g) << "\n";
  out << "vertices " << g.num_vertices() << "\n";
  out << "edges " << g.num_edges() << "\n";
  for (const Word& w : basis(g)) {
    out << display(w) << "\n";
  }
}

int cmd_rank(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  const Subgroup h = load_primary(opt);
  const std::size_t r = rank(h.graph);
  if (opt.format == "json") {
    Json doc;
    doc["n"] = h.alphabet.rank();
    doc["rank"] = r;
    doc["code"] = canonical_code(h.graph).hex();
    out << dump(doc);
  } else {
    out << r << "\n";
  }
  return kOk;
}

int cmd_basis(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  const Subgroup h = load_primary(opt);
  const std::vector<Word> b = basis(h.graph);
  if (opt.format == "json") {
    Json doc;
    doc["n"] = h.alphabet.rank();
    Json words = Json::array();
    for (const Word& w : b) {
      words.push_back(to_string(w));
    }
    doc["basis"] = std::move(words);
    out << dump(doc);
  } else {
    for (const Word& w : b) {
      out << display(w) << "\n";
    }
  }
  return kOk;
}

int cmd_member(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  const Subgroup h = load_primary(opt);
  const Word w = parse_word(opt.word, h.alphabet);
  const bool member = contains(h.graph, w);
  if (opt.format == "json") {
    Json doc;
    doc["word"] = to_string(w);
    doc["member"] = member;
    out << dump(doc);
  } else {
    out << (member ? "true" : "false") << "\n";
  }
  return member ? kOk : kFalse;
}

int cmd_intersect(const Options& opt, std::ostream& out) {
  const Subgroup h = load_primary(opt);
  const Subgroup g = load_other(opt, h.alphabet);
  print_graph(opt, intersect(h.graph, g.graph), out);
  return kOk;
}

int cmd_profile(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  const Subgroup h = load_primary(opt);
  const OrderedBasis order = load_order(opt, h.alphabet);
  const RankProfile profile = rank_profile(change_coordinates(h.graph, order));
  if (opt.format == "json") {
    Json doc;
    doc["profile"] = profile_to_json(profile);
    out << dump(doc);
  } else {
    out << join(profile.values(), ",") << "\n";
  }
  return kOk;
}

int cmd_echelon_check(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  const Subgroup h = load_primary(opt);
  const EchelonCheck check = is_echelon_wrt(h.graph, load_order(opt, h.alphabet));
  if (opt.format == "json") {
    Json doc;
    doc["echelon"] = check.echelon;
    doc["profile"] = profile_to_json(check.profile);
    out << dump(doc);
  } else {
    out << (check.echelon ? "true" : "false") << "\n";
    out << "profile " << join(check.profile.values(), ",") << "\n";
  }
  return check.echelon ? kOk : kFalse;
}

int cmd_certificate(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  const Subgroup h = load_primary(opt);
  const auto cert = echelon_certificate(h.graph, load_order(opt, h.alphabet));
  if (!cert) {
    if (opt.format == "json") {
      out << dump(Json(nullptr));
    } else {
      out << "not echelon\n";
    }
    return kFalse;
  }
  if (opt.format == "json") {
    out << dump(certificate_to_json(*cert));
  } else {
    for (std::size_t j = 0; j < cert->size(); ++j) {
      out << cert->indices()[j] << " " << display(cert->words()[j]) << "\n";
    }
  }
  return kOk;
}

OneGenEndo parse_step(const std::string& text, Alphabet a) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw SyntaxError("step \"" + text + "\" is not of the form <generator>:<word>");
  }
  const std::string head = trim_space(std::string_view(text).substr(0, colon));
  Generator moved = 0;
  if (!head.empty() && std::isdigit(static_cast<unsigned char>(head[0]))) {
    moved = static_cast<Generator>(parse_count(head, "step generator"));
  } else {
    const Word g = parse_word(head, a);
    if (g.size() != 1 || !g[0].positive()) {
      throw SyntaxError("step generator \"" + head + "\" must be a single generator");
    }
    moved = g[0].gen();
  }
  return OneGenEndo(a, moved, parse_word(text.substr(colon + 1), a));
}

int cmd_pipeline(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  std::vector<OneGenEndo> steps;
  std::optional<Alphabet> alphabet;
  if (!opt.cert.empty()) {
    if (!opt.steps.empty()) {
      throw Error("give either --step or --cert, not both");
    }
    const std::optional<Alphabet> fallback =
        opt.n ? std::optional<Alphabet>(Alphabet(*opt.n)) : std::nullopt;
    const EchelonCertificate cert =
        certificate_from_json(parse_json_text(read_file(opt.cert)), fallback);
    alphabet = resolve_alphabet(opt, cert.alphabet());
    steps = build_via_pipeline(cert, *alphabet).steps;
  } else {
    alphabet = resolve_alphabet(opt, std::nullopt);
    for (const auto& s : opt.steps) {
      steps.push_back(parse_step(s, *alphabet));
    }
  }
  const Endomorphism composite = run_pipeline(steps, *alphabet);
  const StallingsGraph img = image(composite);
  if (opt.format == "json") {
    Json doc;
    doc["n"] = alphabet->rank();
    Json js = Json::array();
    for (const OneGenEndo& s : steps) {
      Json item;
      item["moved"] = s.moved();
      item["image"] = to_string(s.image());
      js.push_back(std::move(item));
    }
    doc["steps"] = std::move(js);
    doc["images"] = endomorphism_to_json(composite)["images"];
    doc["rank"] = rank(img);
    doc["code"] = canonical_code(img).hex();
    out << dump(doc);
  } else {
    for (const OneGenEndo& s : steps) {
      out << "step x" << s.moved() << " -> " << display(s.image()) << "\n";
    }
    out << "images " << join_words(composite.images(), ", ") << "\n";
    out << "rank " << rank(img) << "\n";
  }
  return kOk;
}

Endomorphism load_endo(const Options& opt) {
  if (!opt.endo.empty()) {
    if (!opt.gens.empty()) {
      throw Error("give the images either inline or with --endo");
    }
    const Endomorphism e = endomorphism_from_json(parse_json_text(read_file(opt.endo)));
    resolve_alphabet(opt, e.alphabet());
    return e;
  }
  const Alphabet a = resolve_alphabet(opt, std::nullopt);
  std::vector<Word> images;
  for (const auto& t : opt.gens) {
    images.push_back(parse_word(t, a));
  }
  return Endomorphism(a, std::move(images));
}

int cmd_endo_image(const Options& opt, std::ostream& out) {
  const Endomorphism e = load_endo(opt);
  const StallingsGraph img = image(e);
  if (opt.format == "dot") {
    out << to_dot(img);
    return kOk;
  }
  const auto one = as_one_generator(e);
  const bool automorphism = is_automorphism(e);
  if (opt.format == "json") {
    Json doc;
    doc["endomorphism"] = endomorphism_to_json(e);
    doc["rank"] = rank(img);
    doc["automorphism"] = automorphism;
    if (one) {
      doc["one_generator"] = one->moved();
    } else {
      doc["one_generator"] = nullptr;
    }
    doc["graph"] = graph_to_json(img);
    out << dump(doc);
  } else {
    out << "rank " << rank(img) << "\n";
    out << "automorphism " << (automorphism ? "true" : "false") << "\n";
    out << "one-generator " << (one ? "x" + std::to_string(one->moved()) : "no") << "\n";
    for (const Word& w : basis(img)) {
      out << display(w) << "\n";
    }
  }
  return kOk;
}

int cmd_fix_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  require_format(opt, false);
  if (opt.cert.empty()) {
    throw Error("fix-verify needs --cert <file>");
  }
  const FixCertificate cert = fix_certificate_from_json(parse_json_text(read_file(opt.cert)));
  resolve_alphabet(opt, cert.ordering.alphabet());
  const auto violation = fix_structure_violation(cert);
  if (opt.format == "json") {
    Json doc;
    doc["valid"] = !violation;
    if (violation) {
      doc["reason"] = *violation;
    } else {
      doc["reason"] = nullptr;
    }
    out << dump(doc);
  } else {
    out << (violation ? "false" : "true") << "\n";
  }
  if (violation) {
    err << *violation << "\n";
  }
  return violation ? kFalse : kOk;
}

int cmd_inert_test(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  const Subgroup h = load_primary(opt);
  const EnumBudget budget = load_budget(opt, 3);
  const InertiaReport report = test_inert(h.graph, budget, opt.jobs);
  if (opt.format == "json") {
    out << dump(inertia_report_to_json(report, budget));
  } else {
    out << "tested " << report.tested << "\n";
    out << "violations " << report.violations.size() << "\n";
    for (const auto& v : report.violations) {
      out << v.g.hex() << " rk_cap " << v.rk_cap << " rk_g " << v.rk_g << "\n";
    }
    out << "elapsed " << seconds(report.elapsed) << "\n";
  }
  return report.violations.empty() ? kOk : kFalse;
}

int cmd_compress_test(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  const Subgroup h = load_primary(opt);
  const std::size_t limit = opt.budget_vertices ? opt.budget_vertices : 9;
  const CompressionReport report = test_compressed(h.graph, limit);
  if (opt.format == "json") {
    out << dump(compression_report_to_json(report));
  } else {
    out << "rank " << report.rank << "\n";
    out << "quotients " << report.quotients_tested
        << (report.exhaustive ? "" : " (rank-pruned search)") << "\n";
    out << "min overgroup rank " << report.min_overgroup_rank << "\n";
    out << "compressed " << (report.compressed ? "true" : "false") << "\n";
  }
  return report.compressed ? kOk : kFalse;
}

int cmd_hn_scan(const Options& opt, std::ostream& out) {
  require_format(opt, false);
  const Alphabet a = resolve_alphabet(opt, std::nullopt);
  const EnumBudget budget = load_budget(opt, 3);
  const HnReport report = hn_bound_scan(a, budget, opt.jobs);
  if (opt.format == "json") {
    out << dump(hn_report_to_json(report, budget));
  } else {
    out << "pairs " << report.tested << "\n";
    out << "violations " << report.violations.size() << "\n";
    for (const auto& v : report.violations) {
      out << v.g1.hex() << " " << v.g2.hex() << " rk_cap " << v.rk_cap << " bound "
          << v.bound << "\n";
    }
    out << "elapsed " << seconds(report.elapsed) << "\n";
  }
  return report.violations.empty() ? kOk : kFalse;
}

int cmd_export_dot(const Options& opt, std::ostream& out) {
  const Subgroup h = load_primary(opt);
  if (opt.format == "json") {
    out << dump(graph_to_json(h.graph));
  } else {
    out << to_dot(h.graph);
  }
  return kOk;
}

}  // namespace

SubgroupFile parse_subgroup_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Alphabet> alphabet;
  std::vector<Word> gens;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view view(raw);
    view = view.substr(0, view.find('#'));
    const std::string line = trim_space(view);
    if (line.empty()) {
      continue;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!alphabet) {
      if (line.rfind("n=", 0) != 0) {
        throw SyntaxError(where + "expected n=<int>, got \"" + line + "\"");
      }
      try {
        const std::size_t n = parse_count(trim_space(line.substr(2)), "rank");
        alphabet = Alphabet(n);
      } catch (const Error& e) {
        throw SyntaxError(where + e.what());
      }
      continue;
    }
    try {
      gens.push_back(parse_word(line, *alphabet));
    } catch (const Error& e) {
      throw SyntaxError(where + e.what());
    }
  }
  if (!alphabet) {
    throw SyntaxError("line " + std::to_string(line_no + 1) + ": missing n=<int>");
  }
  return {*alphabet, std::move(gens)};
}

SubgroupFile parse_subgroup_file(const std::string& path) {
  return parse_subgroup_text(read_file(path));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Subgroups of free groups via Stallings graphs", "stallings"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("-n", opt.n, "Rank of the free group")->check(CLI::PositiveNumber);
    sub->add_option("--format", opt.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };
  auto subgroup_inputs = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("gens", opt.gens, "Generator words");
    sub->add_option("--subgroup", opt.subgroup, "Generator words");
    sub->add_option("--file", opt.file, "Subgroup file (n=<int>, then one word per line)");
    sub->add_option("--graph", opt.graph, "Graph JSON file");
  };
  auto budget_inputs = [&](CLI::App* sub) {
    sub->add_option("--budget-vertices", opt.budget_vertices, "Vertex budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--mode", opt.mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    sub->add_option("--seed", opt.seed, "Seed for sampled mode");
    sub->add_option("--max-graphs", opt.max_graphs, "Cap on enumerated graphs");
    sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* rank_cmd = app.add_subcommand("rank", "Rank of a subgroup");
  subgroup_inputs(rank_cmd);
  auto* basis_cmd = app.add_subcommand("basis", "Free basis from a spanning tree");
  subgroup_inputs(basis_cmd);
  auto* member_cmd = app.add_subcommand("member", "Membership of a word");
  subgroup_inputs(member_cmd);
  member_cmd->add_option("--word", opt.word, "Word to test")->required();
  auto* intersect_cmd = app.add_subcommand("intersect", "Intersection of two subgroups");
  subgroup_inputs(intersect_cmd);
  intersect_cmd->add_option("--other", opt.other, "Generators of the second subgroup");
  intersect_cmd->add_option("--other-file", opt.other_file, "Second subgroup file");
  intersect_cmd->add_option("--other-graph", opt.other_graph, "Second subgroup graph JSON");
  auto* profile_cmd = app.add_subcommand("profile", "Rank profile rk(H & F_i)");
  subgroup_inputs(profile_cmd);
  profile_cmd->add_option("--order", opt.order, "Ordered basis, comma separated");
  auto* echelon_cmd = app.add_subcommand("echelon-check", "Echelon test for an ordered basis");
  subgroup_inputs(echelon_cmd);
  echelon_cmd->add_option("--order", opt.order, "Ordered basis, comma separated");
  auto* cert_cmd = app.add_subcommand("certificate", "Echelon certificate");
  subgroup_inputs(cert_cmd);
  cert_cmd->add_option("--order", opt.order, "Ordered basis, comma separated");
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Compose 1-generator endomorphisms");
  common(pipeline_cmd);
  pipeline_cmd->add_option("--step", opt.steps, "Step <generator>:<word>, applied in order");
  pipeline_cmd->add_option("--cert", opt.cert, "Echelon certificate JSON");
  auto* endo_cmd = app.add_subcommand("endo-image", "Image of an endomorphism");
  common(endo_cmd);
  endo_cmd->add_option("images", opt.gens, "Images of x1..xn");
  endo_cmd->add_option("--endo", opt.endo, "Endomorphism JSON file");
  auto* fix_cmd = app.add_subcommand("fix-verify", "Check a fixed-subgroup certificate");
  common(fix_cmd);
  fix_cmd->add_option("--cert", opt.cert, "Fix certificate JSON")->required();
  auto* inert_cmd = app.add_subcommand("inert-test", "Inertia against enumerated subgroups");
  subgroup_inputs(inert_cmd);
  budget_inputs(inert_cmd);
  auto* compress_cmd = app.add_subcommand("compress-test", "Compression via folded quotients");
  subgroup_inputs(compress_cmd);
  compress_cmd->add_option("--budget-vertices", opt.budget_vertices,
                           "Largest graph whose partitions are enumerated")
      ->check(CLI::PositiveNumber);
  auto* hn_cmd = app.add_subcommand("hn-scan", "Hanna Neumann bound over enumerated pairs");
  common(hn_cmd);
  budget_inputs(hn_cmd);
  auto* dot_cmd = app.add_subcommand("export-dot", "Graph as DOT (or JSON)");
  subgroup_inputs(dot_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "rank") return cmd_rank(opt, out);
    if (name == "basis") return cmd_basis(opt, out);
    if (name == "member") return cmd_member(opt, out);
    if (name == "intersect") return cmd_intersect(opt, out);
    if (name == "profile") return cmd_profile(opt, out);
    if (name == "echelon-check") return cmd_echelon_check(opt, out);
    if (name == "certificate") return cmd_certificate(opt, out);
    if (name == "pipeline") return cmd_pipeline(opt, out);
    if (name == "endo-image") return cmd_endo_image(opt, out);
    if (name == "fix-verify") return cmd_fix_verify(opt, out, err);
    if (name == "inert-test") return cmd_inert_test(opt, out);
    if (name == "compress-test") return cmd_compress_test(opt, out);
    if (name == "hn-scan") return cmd_hn_scan(opt, out);
    if (name == "export-dot") return cmd_export_dot(opt, out);
    err << "unknown command " << name << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace stallings::cli
