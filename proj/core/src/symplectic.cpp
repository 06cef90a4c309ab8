#include "monodromy/symplectic.hpp"

#include <stdexcept>
#include <utility>

namespace monodromy {

namespace {

void check_genus(int genus) {
  if (genus < 1) {
    throw std::invalid_argument("genus must be at least 1");
  }
}

void check_vector(const SpVector& v, int genus) {
  if (v.size() != static_cast<std::size_t>(2 * genus)) {
    throw std::invalid_argument("homology vector has the wrong dimension");
  }
}

}  // namespace

BigInt symplectic_form(const SpVector& u, const SpVector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0 || u.empty()) {
    throw std::invalid_argument("symplectic form needs two vectors of equal even dimension");
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < u.size(); i += 2) {
    sum += u[i] * v[i + 1] - u[i + 1] * v[i];
  }
  return sum;
}

SpMatrix::SpMatrix(int genus_, std::vector<std::vector<BigInt>> entries)
    : genus(genus_), m(std::move(entries)) {
  check_genus(genus);
  std::size_t n = static_cast<std::size_t>(2 * genus);
  if (m.size() != n) {
    throw std::invalid_argument("symplectic matrix has the wrong number of rows");
  }
  for (const auto& row : m) {
    if (row.size() != n) {
      throw std::invalid_argument("symplectic matrix has the wrong number of columns");
    }
  }
  // M^T J M = J, checked as <M e_j, M e_k> = <e_j, e_k> on all basis pairs.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      BigInt form = 0;
      for (std::size_t i = 0; i < n; i += 2) {
        form += m[i][j] * m[i + 1][k] - m[i + 1][j] * m[i][k];
      }
      BigInt expected = (k == j + 1 && j % 2 == 0) ? 1 : 0;
      if (form != expected) {
        throw std::invalid_argument("matrix does not preserve the intersection form");
      }
    }
  }
}

SpMatrix SpMatrix::identity(int genus) {
  check_genus(genus);
  std::size_t n = static_cast<std::size_t>(2 * genus);
  std::vector<std::vector<BigInt>> e(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    e[i][i] = 1;
  }
  return SpMatrix(genus, std::move(e));
}

SpMatrix sp_mul(const SpMatrix& a, const SpMatrix& b) {
  if (a.genus != b.genus) {
    throw std::invalid_argument("matrix genus mismatch");
  }
  std::size_t n = a.m.size();
  std::vector<std::vector<BigInt>> c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a.m[i][k] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        c[i][j] += a.m[i][k] * b.m[k][j];
      }
    }
  }
  return SpMatrix(a.genus, std::move(c));
}

SpVector sp_apply(const SpMatrix& a, const SpVector& v) {
  check_vector(v, a.genus);
  std::size_t n = v.size();
  SpVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i] += a.m[i][j] * v[j];
    }
  }
  return out;
}

SpMatrix transvection(const SpVector& v, int genus) {
  check_genus(genus);
  check_vector(v, genus);
  bool zero = true;
  for (const BigInt& x : v) {
    if (x != 0) {
      zero = false;
      break;
    }
  }
  if (zero) {
    throw std::invalid_argument("transvection class must be nonzero");
  }
  // Column j of the result is e_j + <e_j, v> v.
  std::size_t n = v.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    SpVector ej(n, 0);
    ej[j] = 1;
    BigInt coeff = symplectic_form(ej, v);
    for (std::size_t i = 0; i < n; ++i) {
      m[i][j] = (i == j ? 1 : 0) + coeff * v[i];
    }
  }
  return SpMatrix(genus, std::move(m));
}

std::vector<SpVector> chain_classes(int genus) {
  check_genus(genus);
  std::size_t n = static_cast<std::size_t>(2 * genus);
  std::vector<SpVector> classes;
  classes.reserve(static_cast<std::size_t>(2 * genus + 1));
  for (int k = 1; k <= 2 * genus + 1; ++k) {
    SpVector v(n, 0);
    if (k % 2 == 0) {
      v[static_cast<std::size_t>(k - 1)] = 1;  // y_{k/2}
    } else {
      int i = (k - 1) / 2;  // x_i + x_{i+1} with x_0 = x_{g+1} = 0
      if (i >= 1) {
        v[static_cast<std::size_t>(2 * (i - 1))] = 1;
      }
      if (i + 1 <= genus) {
        v[static_cast<std::size_t>(2 * i)] = 1;
      }
    }
    classes.push_back(std::move(v));
  }
  return classes;
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::eta1:
      return "eta1";
    case Relation::eta2:
      return "eta2";
    case Relation::eta3:
      return "eta3";
  }
  throw std::invalid_argument("unknown relation");
}

Relation relation_from_name(const std::string& name) {
  if (name == "eta1") {
    return Relation::eta1;
  }
  if (name == "eta2") {
    return Relation::eta2;
  }
  if (name == "eta3") {
    return Relation::eta3;
  }
  throw std::invalid_argument("unknown relation '" + name + "'");
}

std::vector<int> relation_word(Relation r, int genus) {
  check_genus(genus);
  std::vector<int> word;
  switch (r) {
    case Relation::eta1: {
      std::vector<int> half;
      for (int i = 1; i <= 2 * genus + 1; ++i) {
        half.push_back(i);
      }
      for (int i = 2 * genus + 1; i >= 1; --i) {
        half.push_back(i);
      }
      word.insert(word.end(), half.begin(), half.end());
      word.insert(word.end(), half.begin(), half.end());
      break;
    }
    case Relation::eta2: {
      for (int rep = 0; rep < 2 * (2 * genus + 1); ++rep) {
        for (int i = 1; i <= 2 * genus; ++i) {
          word.push_back(i);
        }
      }
      break;
    }
    case Relation::eta3: {
      for (int rep = 0; rep < 2 * genus + 2; ++rep) {
        for (int i = 1; i <= 2 * genus + 1; ++i) {
          word.push_back(i);
        }
      }
      break;
    }
  }
  return word;
}

std::size_t relation_length(Relation r, int genus) {
  check_genus(genus);
  std::size_t g = static_cast<std::size_t>(genus);
  switch (r) {
    case Relation::eta1:
      return 8 * g + 4;
    case Relation::eta2:
      return 8 * g * g + 4 * g;
    case Relation::eta3:
      return (2 * g + 1) * (2 * g + 2);
  }
  throw std::invalid_argument("unknown relation");
}

bool verify_relation(Relation r, int genus) {
  check_genus(genus);
  std::vector<SpVector> classes = chain_classes(genus);
  std::vector<SpMatrix> twists;
  twists.reserve(classes.size());
  for (const SpVector& c : classes) {
    twists.push_back(transvection(c, genus));
  }
  SpMatrix acc = SpMatrix::identity(genus);
  for (int i : relation_word(r, genus)) {
    acc = sp_mul(acc, twists[static_cast<std::size_t>(i - 1)]);
  }
  return acc == SpMatrix::identity(genus);
}

}  // namespace monodromy
