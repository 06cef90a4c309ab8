#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monodromy/errors.hpp"

namespace monodromy {

// Word in the Artin generators of B_n. Letters are signed 1-based generator
// indices: +i for s_i, -i for s_i^-1. The empty word is the identity.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);

  bool empty() const { return letters.empty(); }
};

// Word in a free group F_n, kept freely reduced by every public operation.
struct FreeWord {
  int rank = 1;
  std::vector<int> letters;

  FreeWord() = default;
  FreeWord(int n, std::vector<int> ls);

  bool operator==(const FreeWord&) const = default;
};

FreeWord free_reduce(const FreeWord& w);

// Action of a braid word on a free word, letters applied rightmost-first so
// that artin_act(b1*b2, w) = artin_act(b1, artin_act(b2, w)). Generator rule:
// s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, others fixed.
// Image lengths can blow up on adversarial words; max_length aborts the
// computation with a diagnostic instead of exhausting memory.
FreeWord artin_act(const BraidWord& b, const FreeWord& w, std::size_t max_length = 1u << 20);

// Word problem in B_n via the faithful Artin representation: equal iff the
// actions agree on every free generator.
bool braid_equal(const BraidWord& b1, const BraidWord& b2, std::size_t max_length = 1u << 20);

// Half twist exchanging strands i < j along the front of the intervening
// strands: (s_{j-1} ... s_{i+1}) s_i (s_{i+1} ... s_{j-1})^-1.
BraidWord halftwist_word(int i, int j, int n);

// Standard pure-braid generator A_ij = halftwist(i,j)^2, freely reduced.
BraidWord pure_braid_generator(int i, int j, int n);

BraidWord concat(const BraidWord& b1, const BraidWord& b2);
BraidWord inverse(const BraidWord& b);
BraidWord power(const BraidWord& b, int k);

// Underlying permutation of strand endpoints: result[i-1] is where strand i
// ends up. Each s_i contributes the transposition (i, i+1).
std::vector<int> strand_permutation(const BraidWord& b);

// Compact text form: "s1 s2^-1 s1^3" (whitespace-separated, caret powers).
BraidWord parse_braid_word(const std::string& text, int strands);
std::string format_braid_word(const BraidWord& b);

}  // namespace monodromy
