#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monodromy/bigint.hpp"

namespace monodromy {

// Homology class in H_1 of a genus-g surface, coordinates ordered
// (x_1, y_1, ..., x_g, y_g) so the intersection form pairs x_i with y_i.
using SpVector = std::vector<BigInt>;

BigInt symplectic_form(const SpVector& u, const SpVector& v);

// Element of Sp(2g, Z); the constructor rejects matrices that fail to
// preserve the intersection form.
struct SpMatrix {
  int genus = 0;
  std::vector<std::vector<BigInt>> m;

  SpMatrix(int genus, std::vector<std::vector<BigInt>> entries);
  static SpMatrix identity(int genus);

  bool operator==(const SpMatrix& o) const { return genus == o.genus && m == o.m; }
  bool operator!=(const SpMatrix& o) const { return !(*this == o); }
};

SpMatrix sp_mul(const SpMatrix& a, const SpMatrix& b);
SpVector sp_apply(const SpMatrix& a, const SpVector& v);

// Transvection along v: w -> w + <w, v> v. For g = 1 this reproduces the
// torus twist matrices, which ties the two representations together.
SpMatrix transvection(const SpVector& v, int genus);

// Homology classes of the standard chain c_1, ..., c_{2g+1}: c_1 = x_1,
// c_{2i} = y_i, c_{2i+1} = x_i + x_{i+1} (reading x_{g+1} = 0), so
// consecutive classes pair to +-1 and all others to 0.
std::vector<SpVector> chain_classes(int genus);

enum class Relation { eta1, eta2, eta3 };

std::string relation_name(Relation r);
Relation relation_from_name(const std::string& name);

// The relation as a positive word in the chain twists a_1..a_{2g+1}
// (1-based indices):
//   eta1: (a_1 ... a_{2g+1} a_{2g+1} ... a_1)^2
//   eta2: (a_1 ... a_{2g})^(4g+2)
//   eta3: (a_1 ... a_{2g+1})^(2g+2)
std::vector<int> relation_word(Relation r, int genus);
std::size_t relation_length(Relation r, int genus);

// Evaluates the relation word through the transvection representation,
// multiplying left to right, and reports whether the product is the
// identity. One fixed convention for the form and the twist direction is
// used everywhere; the relations hold exactly under it.
bool verify_relation(Relation r, int genus);

}  // namespace monodromy
