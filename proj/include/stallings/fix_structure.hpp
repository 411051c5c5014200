#pragma once

// Shape check for fixed subgroups of automorphisms: in suitable coordinates
// Fix(phi) = <y_1, ..., y_r, z_1, ..., z_s> where the y_j live on consecutive
// disjoint generator blocks and z_k = x_{i_r+k}^-1 w_k x_{i_r+k} with
// w_k in F_{i_r+k-1}. Only the shape is verified; Fix(phi) is never computed.

#include <optional>
#include <string>
#include <vector>

#include "stallings/echelon.hpp"

namespace stallings {

struct FixConjugate {
  Generator index;  // i_r + k
  Word w;           // z_k = x_index^-1 w x_index
};

struct FixCertificate {
  OrderedBasis ordering;
  std::vector<Word> ys;
  std::vector<FixConjugate> zs;
};

// Words of the certificate in ordering coordinates: y_1..y_r, z_1..z_s.
std::vector<Word> fix_generators(const FixCertificate& cert);

// Why the certificate fails, or nullopt when it has the required shape and
// its generators form an echelon basis in ordering coordinates.
std::optional<std::string> fix_structure_violation(const FixCertificate& cert);

bool verify_fix_structure(const FixCertificate& cert);

}  // namespace stallings
