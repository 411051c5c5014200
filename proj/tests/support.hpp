#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "stallings/core_graph.hpp"
#include "stallings/word.hpp"

namespace testing {

inline stallings::Word w(std::string_view text, std::size_t n) {
  return stallings::parse_word(text, stallings::Alphabet(n));
}

inline std::vector<stallings::Word> words(std::size_t n,
                                          std::initializer_list<std::string_view> texts) {
  std::vector<stallings::Word> out;
  for (auto t : texts) {
    out.push_back(w(t, n));
  }
  return out;
}

inline stallings::StallingsGraph sg(std::size_t n,
                                    std::initializer_list<std::string_view> texts) {
  return stallings::subgroup_graph(words(n, texts), stallings::Alphabet(n));
}

// The worked example: G = <u, y, z> and H = <u, v, w> with u = x^2 y^2 x^2,
// v = y^2 z^2 y^2, w = z^2 u z^2.
inline stallings::StallingsGraph example_g() { return sg(3, {"xxyyxx", "y", "z"}); }
inline stallings::StallingsGraph example_h() {
  return sg(3, {"xxyyxx", "yyzzyy", "zzxxyyxxzz"});
}

}  // namespace testing
