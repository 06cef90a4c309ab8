#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monodromy/bigint.hpp"
#include "monodromy/braid.hpp"
#include "monodromy/hurwitz.hpp"

namespace monodromy {

// Finite presentation: named generators plus relators as signed 1-based
// generator index words.
struct Presentation {
  std::vector<std::string> gen_names;
  std::vector<std::vector<int>> relators;

  int ngens() const { return static_cast<int>(gen_names.size()); }
};

// Standard Artin presentation of the braid group B_n.
Presentation braid_presentation(int n);

// Compacted coset table: rows[c][2(g-1)] is the action of generator g on
// coset c, rows[c][2(g-1)+1] the action of its inverse; coset 0 is the
// subgroup itself. complete == false means the budget ran out first.
struct CosetTable {
  std::size_t count = 0;
  bool complete = false;
  int ngens = 0;
  std::vector<std::vector<std::uint32_t>> rows;
};

// HLT coset enumeration with a deduction-only lookahead pass and table
// compaction when the coset budget is hit. Coset numbering follows
// definition order, so completed tables are reproducible byte for byte.
CosetTable todd_coxeter(const Presentation& p, const std::vector<std::vector<int>>& subgroup,
                        std::size_t max_cosets = 100'000);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order
};

// Smith normal form of the relator exponent-sum matrix.
AbelianInvariants abelianization(const Presentation& p);

// Smith normal form diagonal (nonzero invariant factors, in divisibility
// order) of an arbitrary integer matrix; exposed for direct testing.
std::vector<BigInt> smith_normal_form_diagonal(std::vector<std::vector<BigInt>> m);

// Independent confirmation that `subgroup` generates the stabilizer of f:
// the orbit engine gives [B_n : Stab(f)] as an orbit size, coset enumeration
// gives [B_n : <subgroup>], and every subgroup word must stabilize f. The
// verdict is true only when both computations complete and all three checks
// agree.
struct CrossCheckReport {
  std::size_t orbit_size = 0;
  bool orbit_complete = false;
  std::size_t coset_count = 0;
  bool coset_complete = false;
  std::vector<bool> word_stabilizes;
  bool verdict = false;
};

CrossCheckReport cross_check_index(const Factorization& f, const std::vector<BraidWord>& subgroup,
                                   std::size_t max_vertices = 1'000'000,
                                   std::size_t max_cosets = 100'000);

// Text form: "gens: s1 s2; rel: s1 s2 s1 = s2 s1 s2; sub: s1^3, s2 s1 s2^-1".
// Relators may be words (taken = 1) or equations; commas separate multiple
// relators or subgroup words.
struct ParsedPresentation {
  Presentation presentation;
  std::vector<std::vector<int>> subgroup;
};

ParsedPresentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p,
                                const std::vector<std::vector<int>>& subgroup = {});

}  // namespace monodromy
