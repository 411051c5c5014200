#include "stallings/fix_structure.hpp"

#include <algorithm>

namespace stallings {

namespace {

Generator min_generator(const Word& w) {
  Generator low = kNoGenerator;
  for (Letter l : w.letters()) {
    low = low == kNoGenerator ? l.gen() : std::min(low, l.gen());
  }
  return low;
}

}  // namespace

std::vector<Word> fix_generators(const FixCertificate& cert) {
  const Alphabet& a = cert.ordering.alphabet();
  std::vector<Word> gens = cert.ys;
  for (const FixConjugate& z : cert.zs) {
    const Word x = Word::generator(a, z.index);
    gens.push_back(invert(x) * z.w * x);
  }
  return gens;
}

std::optional<std::string> fix_structure_violation(const FixCertificate& cert) {
  const Alphabet& a = cert.ordering.alphabet();
  Generator top = 0;
  for (std::size_t j = 0; j < cert.ys.size(); ++j) {
    const Word& y = cert.ys[j];
    const std::string name = "y_" + std::to_string(j + 1);
    if (y.alphabet() != a) {
      return name + " is over the wrong alphabet";
    }
    if (y.empty()) {
      return name + " is trivial";
    }
    if (min_generator(y) <= top) {
      return name + " reuses a generator of an earlier block";
    }
    top = max_generator(y);
  }
  const Generator i_r = top;
  for (std::size_t k = 1; k <= cert.zs.size(); ++k) {
    const FixConjugate& z = cert.zs[k - 1];
    const std::string name = "z_" + std::to_string(k);
    if (z.w.alphabet() != a) {
      return name + " is over the wrong alphabet";
    }
    if (z.index != i_r + k) {
      return name + " conjugates by x" + std::to_string(z.index) + ", expected x" +
             std::to_string(i_r + k);
    }
    if (z.w.empty()) {
      return name + " is trivial";
    }
    if (max_generator(z.w) > z.index - 1) {
      return "w_" + std::to_string(k) + " is not in F_" + std::to_string(z.index - 1);
    }
  }
  if (i_r + cert.zs.size() > a.rank()) {
    return "i_r + s = " + std::to_string(i_r + cert.zs.size()) + " exceeds n = " +
           std::to_string(a.rank());
  }

  const std::vector<Word> gens = fix_generators(cert);
  const StallingsGraph g = subgroup_graph(gens, a);
  if (rank(g) != gens.size()) {
    return "generators are not a free basis (rank " + std::to_string(rank(g)) +
           " < " + std::to_string(gens.size()) + ")";
  }
  if (!is_echelon_wrt(g, OrderedBasis::identity(a)).echelon) {
    return "generators are not in echelon form";
  }
  return std::nullopt;
}

bool verify_fix_structure(const FixCertificate& cert) {
  return !fix_structure_violation(cert).has_value();
}

}  // namespace stallings
