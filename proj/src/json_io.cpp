#include "stallings/json_io.hpp"

#include <string>

namespace stallings {

namespace {

// Runs `body`, turning schema errors from the JSON library into SyntaxError.
template <typename Body>
auto guarded(const char* what, Body body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw SyntaxError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Alphabet alphabet_of(const Json& doc) {
  const auto n = doc.at("n").get<long long>();
  if (n < 1) {
    throw IndexOutOfRange("alphabet rank must be positive, got " + std::to_string(n));
  }
  return Alphabet(static_cast<std::size_t>(n));
}

Json words_to_json(std::span<const Word> words) {
  Json out = Json::array();
  for (const Word& w : words) {
    out.push_back(to_string(w));
  }
  return out;
}

std::vector<Word> words_from_json(const Json& doc, Alphabet alphabet) {
  std::vector<Word> words;
  for (const Json& item : doc) {
    words.push_back(parse_word(item.get<std::string>(), alphabet));
  }
  return words;
}

}  // namespace

Json graph_to_json(const StallingsGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(Json::array({e.origin, e.label, e.target}));
  }
  Json doc;
  doc["n"] = g.alphabet().rank();
  doc["base"] = g.base();
  doc["edges"] = std::move(edges);
  return doc;
}

StallingsGraph graph_from_json(const Json& doc) {
  return guarded("graph", [&] {
    const Alphabet a = alphabet_of(doc);
    const auto base = doc.at("base").get<long long>();
    std::vector<Edge> edges;
    long long top = base;
    for (const Json& item : doc.at("edges")) {
      if (!item.is_array() || item.size() != 3) {
        throw SyntaxError("graph edge must be [origin, label, target]");
      }
      const auto o = item[0].get<long long>();
      const auto l = item[1].get<long long>();
      const auto t = item[2].get<long long>();
      if (o < 0 || t < 0 || l < 1 || static_cast<std::size_t>(l) > a.rank()) {
        throw IndexOutOfRange("graph edge [" + std::to_string(o) + ", " +
                              std::to_string(l) + ", " + std::to_string(t) +
                              "] out of range");
      }
      top = std::max({top, o, t});
      edges.push_back({static_cast<Vertex>(o), static_cast<Generator>(l),
                       static_cast<Vertex>(t)});
    }
    if (base < 0) {
      throw IndexOutOfRange("graph base must be nonnegative");
    }
    const StallingsGraph raw(a, static_cast<std::size_t>(top) + 1,
                             static_cast<Vertex>(base), std::move(edges));
    return trim(fold(raw));
  });
}

Json certificate_to_json(const EchelonCertificate& cert) {
  Json doc;
  doc["n"] = cert.alphabet().rank();
  doc["indices"] = cert.indices();
  doc["words"] = words_to_json(cert.words());
  return doc;
}

EchelonCertificate certificate_from_json(const Json& doc,
                                         std::optional<Alphabet> fallback) {
  return guarded("certificate", [&] {
    if (!doc.contains("n") && !fallback) {
      throw SyntaxError("certificate JSON needs \"n\"");
    }
    const Alphabet a = doc.contains("n") ? alphabet_of(doc) : *fallback;
    std::vector<Generator> indices;
    for (const Json& i : doc.at("indices")) {
      const auto v = i.get<long long>();
      if (v < 1) {
        throw MalformedCertificate("certificate index " + std::to_string(v) +
                                   " out of range");
      }
      indices.push_back(static_cast<Generator>(v));
    }
    return EchelonCertificate(a, std::move(indices), words_from_json(doc.at("words"), a));
  });
}

Json endomorphism_to_json(const Endomorphism& e) {
  Json doc;
  doc["n"] = e.alphabet().rank();
  doc["images"] = words_to_json(e.images());
  return doc;
}

Endomorphism endomorphism_from_json(const Json& doc) {
  return guarded("endomorphism", [&] {
    const Alphabet a = alphabet_of(doc);
    return Endomorphism(a, words_from_json(doc.at("images"), a));
  });
}

Json fix_certificate_to_json(const FixCertificate& cert) {
  Json zs = Json::array();
  for (const FixConjugate& z : cert.zs) {
    Json item;
    item["index"] = z.index;
    item["w"] = to_string(z.w);
    zs.push_back(std::move(item));
  }
  Json doc;
  doc["n"] = cert.ordering.alphabet().rank();
  doc["ordering"] = words_to_json(cert.ordering.elements());
  doc["ys"] = words_to_json(cert.ys);
  doc["zs"] = std::move(zs);
  return doc;
}

FixCertificate fix_certificate_from_json(const Json& doc) {
  return guarded("fix certificate", [&] {
    const Alphabet a = alphabet_of(doc);
    OrderedBasis ordering = doc.contains("ordering")
                                ? OrderedBasis(words_from_json(doc.at("ordering"), a), a)
                                : OrderedBasis::identity(a);
    std::vector<FixConjugate> zs;
    for (const Json& item : doc.at("zs")) {
      const auto index = item.at("index").get<long long>();
      if (index < 1 || static_cast<std::size_t>(index) > a.rank()) {
        throw IndexOutOfRange("conjugate index " + std::to_string(index) +
                              " out of range");
      }
      zs.push_back({static_cast<Generator>(index),
                    parse_word(item.at("w").get<std::string>(), a)});
    }
    return FixCertificate{std::move(ordering), words_from_json(doc.at("ys"), a),
                          std::move(zs)};
  });
}

Json profile_to_json(const RankProfile& profile) { return profile.values(); }

Json budget_to_json(const EnumBudget& budget) {
  Json doc;
  doc["mode"] = budget.mode == EnumMode::exhaustive ? "exhaustive" : "sampled";
  doc["max_vertices"] = budget.max_vertices;
  if (budget.max_graphs) {
    doc["max_graphs"] = *budget.max_graphs;
  } else {
    doc["max_graphs"] = nullptr;
  }
  doc["slot_limit"] = budget.slot_limit;
  return doc;
}

Json inertia_report_to_json(const InertiaReport& report, const EnumBudget& budget) {
  Json violations = Json::array();
  for (const InertiaViolation& v : report.violations) {
    Json item;
    item["g"] = v.g.hex();
    item["rk_cap"] = v.rk_cap;
    item["rk_g"] = v.rk_g;
    violations.push_back(std::move(item));
  }
  Json doc;
  doc["tested"] = report.tested;
  doc["violations"] = std::move(violations);
  doc["seed"] = budget.seed;
  doc["budget"] = budget_to_json(budget);
  return doc;
}

Json hn_report_to_json(const HnReport& report, const EnumBudget& budget) {
  Json violations = Json::array();
  for (const HnViolation& v : report.violations) {
    Json item;
    item["g1"] = v.g1.hex();
    item["g2"] = v.g2.hex();
    item["rk_cap"] = v.rk_cap;
    item["bound"] = v.bound;
    violations.push_back(std::move(item));
  }
  Json doc;
  doc["tested"] = report.tested;
  doc["violations"] = std::move(violations);
  doc["seed"] = budget.seed;
  doc["budget"] = budget_to_json(budget);
  return doc;
}

Json compression_report_to_json(const CompressionReport& report) {
  Json doc;
  doc["rank"] = report.rank;
  doc["quotients_tested"] = report.quotients_tested;
  doc["exhaustive"] = report.exhaustive;
  doc["min_overgroup_rank"] = report.min_overgroup_rank;
  doc["compressed"] = report.compressed;
  if (report.witness) {
    doc["witness"] = report.witness->hex();
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace stallings
