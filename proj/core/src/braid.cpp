#include "monodromy/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace monodromy {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) {
    throw std::invalid_argument("braid word needs at least one strand");
  }
  for (int l : letters) {
    int idx = std::abs(l);
    if (idx < 1 || idx >= n) {
      throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for " +
                                  std::to_string(n) + " strands");
    }
  }
}

FreeWord::FreeWord(int n, std::vector<int> ls) : rank(n), letters(std::move(ls)) {
  if (n < 1) {
    throw std::invalid_argument("free word needs positive rank");
  }
  for (int l : letters) {
    int idx = std::abs(l);
    if (idx < 1 || idx > n) {
      throw std::invalid_argument("free letter " + std::to_string(l) + " out of range for rank " +
                                  std::to_string(n));
    }
  }
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.rank = w.rank;
  out.letters.reserve(w.letters.size());
  for (int l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

namespace {

// Append the image of one free letter under one braid generator, reducing at
// the seam as we go (the output buffer stays freely reduced).
void push_reduced(std::vector<int>& buf, int l) {
  if (!buf.empty() && buf.back() == -l) {
    buf.pop_back();
  } else {
    buf.push_back(l);
  }
}

void append_image(std::vector<int>& buf, int braid_letter, int free_letter) {
  int i = std::abs(braid_letter);
  int g = std::abs(free_letter);
  bool positive = free_letter > 0;
  // images of the positive generator; invert order+signs for the inverse
  int img[3];
  int len = 0;
  if (braid_letter > 0) {
    if (g == i) {
      img[0] = i; img[1] = i + 1; img[2] = -i; len = 3;
    } else if (g == i + 1) {
      img[0] = i; len = 1;
    } else {
      img[0] = g; len = 1;
    }
  } else {
    if (g == i) {
      img[0] = i + 1; len = 1;
    } else if (g == i + 1) {
      img[0] = -(i + 1); img[1] = i; img[2] = i + 1; len = 3;
    } else {
      img[0] = g; len = 1;
    }
  }
  if (positive) {
    for (int t = 0; t < len; ++t) push_reduced(buf, img[t]);
  } else {
    for (int t = len - 1; t >= 0; --t) push_reduced(buf, -img[t]);
  }
}

}  // namespace

FreeWord artin_act(const BraidWord& b, const FreeWord& w, std::size_t max_length) {
  if (w.rank != b.strands) {
    throw std::invalid_argument("free word rank " + std::to_string(w.rank) +
                                " does not match strand count " + std::to_string(b.strands));
  }
  std::vector<int> cur = free_reduce(w).letters;
  std::vector<int> next;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    next.clear();
    for (int l : cur) {
      append_image(next, *it, l);
      if (next.size() > max_length) {
        throw verification_error("free word exceeded length budget " +
                                 std::to_string(max_length) + " during braid action");
      }
    }
    cur.swap(next);
  }
  FreeWord out;
  out.rank = w.rank;
  out.letters = std::move(cur);
  return out;
}

bool braid_equal(const BraidWord& b1, const BraidWord& b2, std::size_t max_length) {
  if (b1.strands != b2.strands) {
    throw std::invalid_argument("braid words on different strand counts");
  }
  for (int g = 1; g <= b1.strands; ++g) {
    FreeWord x(b1.strands, {g});
    if (artin_act(b1, x, max_length) != artin_act(b2, x, max_length)) {
      return false;
    }
  }
  return true;
}

BraidWord halftwist_word(int i, int j, int n) {
  if (i < 1 || j <= i || j > n) {
    throw std::invalid_argument("halftwist needs 1 <= i < j <= n");
  }
  std::vector<int> ls;
  for (int t = j - 1; t > i; --t) ls.push_back(t);
  ls.push_back(i);
  for (int t = i + 1; t <= j - 1; ++t) ls.push_back(-t);
  return BraidWord(n, std::move(ls));
}

namespace {

std::vector<int> free_cancel(std::vector<int> ls) {
  std::vector<int> out;
  out.reserve(ls.size());
  for (int l : ls) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

BraidWord pure_braid_generator(int i, int j, int n) {
  BraidWord h = halftwist_word(i, j, n);
  std::vector<int> ls = h.letters;
  ls.insert(ls.end(), h.letters.begin(), h.letters.end());
  return BraidWord(n, free_cancel(std::move(ls)));
}

BraidWord concat(const BraidWord& b1, const BraidWord& b2) {
  if (b1.strands != b2.strands) {
    throw std::invalid_argument("braid words on different strand counts");
  }
  std::vector<int> ls = b1.letters;
  ls.insert(ls.end(), b2.letters.begin(), b2.letters.end());
  return BraidWord(b1.strands, std::move(ls));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> ls;
  ls.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) ls.push_back(-*it);
  return BraidWord(b.strands, std::move(ls));
}

BraidWord power(const BraidWord& b, int k) {
  BraidWord base = k < 0 ? inverse(b) : b;
  int reps = std::abs(k);
  std::vector<int> ls;
  ls.reserve(base.letters.size() * static_cast<std::size_t>(reps));
  for (int t = 0; t < reps; ++t) {
    ls.insert(ls.end(), base.letters.begin(), base.letters.end());
  }
  return BraidWord(b.strands, std::move(ls));
}

std::vector<int> strand_permutation(const BraidWord& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  std::iota(perm.begin(), perm.end(), 1);
  // perm maps start position -> end position; apply letters rightmost-first
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    int i = std::abs(*it);
    for (auto& v : perm) {
      if (v == i) {
        v = i + 1;
      } else if (v == i + 1) {
        v = i;
      }
    }
  }
  return perm;
}

BraidWord parse_braid_word(const std::string& text, int strands) {
  std::vector<int> ls;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 's') {
      throw std::invalid_argument("bad braid token '" + tok + "' (expected e.g. s1 or s2^-1)");
    }
    std::size_t caret = tok.find('^');
    std::string idx_part = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    long idx = 0;
    long pow = 1;
    try {
      std::size_t used = 0;
      idx = std::stol(idx_part, &used);
      if (used != idx_part.size()) throw std::invalid_argument("");
      if (caret != std::string::npos) {
        std::string pow_part = tok.substr(caret + 1);
        pow = std::stol(pow_part, &used);
        if (used != pow_part.size()) throw std::invalid_argument("");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid token '" + tok + "'");
    }
    if (idx < 1 || idx >= strands) {
      throw std::invalid_argument("generator s" + std::to_string(idx) + " out of range for " +
                                  std::to_string(strands) + " strands");
    }
    if (pow == 0) continue;
    int letter = pow > 0 ? static_cast<int>(idx) : -static_cast<int>(idx);
    for (long t = 0; t < std::labs(pow); ++t) ls.push_back(letter);
  }
  return BraidWord(strands, std::move(ls));
}

std::string format_braid_word(const BraidWord& b) {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < b.letters.size()) {
    std::size_t j = i;
    while (j < b.letters.size() && b.letters[j] == b.letters[i]) ++j;
    long run = static_cast<long>(j - i);
    long pow = b.letters[i] > 0 ? run : -run;
    if (!first) os << ' ';
    first = false;
    os << 's' << std::abs(b.letters[i]);
    if (pow != 1) os << '^' << pow;
    i = j;
  }
  return os.str();
}

}  // namespace monodromy
