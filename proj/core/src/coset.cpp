#include "monodromy/coset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "monodromy/orbit.hpp"

namespace monodromy {

namespace {

// A generator letter g > 0 acts through column 2(g-1), its inverse through
// column 2(g-1)+1; inv() flips between the two.
int symbol_of(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}

int inv(int s) { return s ^ 1; }

void check_word(const std::vector<int>& word, int ngens, const char* what) {
  for (int letter : word) {
    if (letter == 0 || letter > ngens || letter < -ngens) {
      throw std::invalid_argument(std::string(what) + " uses a generator outside the presentation");
    }
  }
}

// HLT enumerator over a flat table of width 2*ngens. Cosets are numbered in
// definition order; a union-find parent array tracks coincidences, and dead
// rows are transferred onto their representatives before anything else runs.
struct Enumerator {
  int stride;
  std::size_t limit;
  std::vector<std::int32_t> tab;
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> dead;
  std::size_t dead_head = 0;
  std::size_t nrows = 0;
  bool out_of_room = false;

  Enumerator(int ngens, std::size_t max_cosets) : stride(2 * ngens), limit(max_cosets) {
    if (limit == 0) {
      throw std::invalid_argument("coset budget must be positive");
    }
    new_row();  // coset 0: the subgroup itself
  }

  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  std::int32_t& cell(std::int32_t c, int s) { return tab[static_cast<std::size_t>(c) * stride + s]; }

  std::int32_t new_row() {
    std::int32_t c = static_cast<std::int32_t>(nrows++);
    tab.resize(nrows * stride, -1);
    parent.push_back(c);
    return c;
  }

  bool define(std::int32_t c, int s) {
    if (nrows >= limit) {
      out_of_room = true;
      return false;
    }
    std::int32_t nc = new_row();
    cell(c, s) = nc;
    cell(nc, inv(s)) = c;
    return true;
  }

  void note_merge(std::int32_t x, std::int32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return;
    }
    if (x > y) {
      std::swap(x, y);
    }
    parent[y] = x;
    dead.push_back(y);
  }

  // Transfer the rows of dead cosets onto their representatives. Both table
  // directions are kept in sync throughout, otherwise a later scan could
  // define a duplicate for an edge that already exists one-way.
  void process_coincidences() {
    while (dead_head < dead.size()) {
      std::int32_t b = dead[dead_head++];
      for (int s = 0; s < stride; ++s) {
        std::int32_t d = cell(b, s);
        if (d < 0) {
          continue;
        }
        cell(b, s) = -1;
        if (cell(d, inv(s)) == b) {
          cell(d, inv(s)) = -1;
        }
        std::int32_t a = find(b);
        std::int32_t v = find(d);
        std::int32_t fwd = cell(a, s);
        std::int32_t bwd = cell(v, inv(s));
        if (fwd >= 0 && find(fwd) != v) {
          note_merge(fwd, v);
        }
        if (bwd >= 0 && find(bwd) != a) {
          note_merge(bwd, a);
        }
        a = find(a);
        v = find(v);
        if (cell(a, s) < 0) {
          cell(a, s) = v;
        }
        if (cell(v, inv(s)) < 0) {
          cell(v, inv(s)) = a;
        }
      }
    }
    dead.clear();
    dead_head = 0;
  }

  // Trace `word` from coset c, filling the gap. With fill == false this is
  // the lookahead variant: it still records deductions and coincidences but
  // never defines a coset.
  void scan(std::int32_t c, const std::vector<int>& word, bool fill) {
    std::size_t i = 0;
    std::size_t j = word.size();
    std::int32_t f = find(c);
    std::int32_t b = f;
    for (;;) {
      while (i < j) {
        std::int32_t nx = cell(f, symbol_of(word[i]));
        if (nx < 0) {
          break;
        }
        f = find(nx);
        ++i;
      }
      if (i == j) {
        if (f != b) {
          note_merge(f, b);
          process_coincidences();
        }
        return;
      }
      while (j > i) {
        std::int32_t nx = cell(b, inv(symbol_of(word[j - 1])));
        if (nx < 0) {
          break;
        }
        b = find(nx);
        --j;
      }
      if (j == i) {
        note_merge(f, b);
        process_coincidences();
        return;
      }
      if (j == i + 1) {
        int s = symbol_of(word[i]);
        cell(f, s) = b;
        cell(b, inv(s)) = f;
        return;
      }
      if (!fill || !define(f, symbol_of(word[i]))) {
        return;
      }
    }
  }

  // Renumber live cosets in definition order and drop dead rows. Returns the
  // old-to-new index map so the caller can relocate its cursor.
  std::vector<std::int32_t> compact() {
    process_coincidences();
    std::vector<std::int32_t> remap(nrows, -1);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < nrows; ++c) {
      if (find(static_cast<std::int32_t>(c)) == static_cast<std::int32_t>(c)) {
        remap[c] = next++;
      }
    }
    std::vector<std::int32_t> fresh(static_cast<std::size_t>(next) * stride, -1);
    for (std::size_t c = 0; c < nrows; ++c) {
      if (remap[c] < 0) {
        continue;
      }
      for (int s = 0; s < stride; ++s) {
        std::int32_t e = tab[c * stride + s];
        fresh[static_cast<std::size_t>(remap[c]) * stride + s] = e < 0 ? -1 : remap[find(e)];
      }
    }
    tab.swap(fresh);
    nrows = static_cast<std::size_t>(next);
    parent.resize(nrows);
    for (std::size_t c = 0; c < nrows; ++c) {
      parent[c] = static_cast<std::int32_t>(c);
    }
    dead.clear();
    dead_head = 0;
    out_of_room = false;
    return remap;
  }
};

}  // namespace

Presentation braid_presentation(int n) {
  if (n < 2) {
    throw std::invalid_argument("braid presentation needs at least 2 strands");
  }
  Presentation p;
  for (int i = 1; i < n; ++i) {
    p.gen_names.push_back("s" + std::to_string(i));
  }
  for (int i = 1; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1) {
        p.relators.push_back({i, j, i, -j, -i, -j});
      } else {
        p.relators.push_back({i, j, -i, -j});
      }
    }
  }
  return p;
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<std::vector<int>>& subgroup,
                        std::size_t max_cosets) {
  int m = p.ngens();
  if (m <= 0) {
    throw std::invalid_argument("presentation has no generators");
  }
  for (const auto& r : p.relators) {
    check_word(r, m, "relator");
  }
  for (const auto& w : subgroup) {
    check_word(w, m, "subgroup word");
  }

  Enumerator e(m, max_cosets);
  bool complete = false;
  int lookaheads_left = 4;

  for (const auto& w : subgroup) {
    e.scan(0, w, true);
  }

  std::int32_t cursor = 0;
  while (!e.out_of_room || lookaheads_left > 0) {
    if (e.out_of_room) {
      // Budget hit: one deduction-only pass over the live table, then drop
      // dead rows. If that frees no room, the enumeration is abandoned.
      --lookaheads_left;
      for (const auto& w : subgroup) {
        e.scan(0, w, false);
      }
      for (std::size_t c = 0; c < e.nrows; ++c) {
        std::int32_t rc = static_cast<std::int32_t>(c);
        if (e.find(rc) != rc) {
          continue;
        }
        for (const auto& r : p.relators) {
          e.scan(rc, r, false);
        }
      }
      std::vector<std::int32_t> remap = e.compact();
      // Resume at the first surviving coset not yet fully processed.
      std::int32_t resumed = static_cast<std::int32_t>(e.nrows);
      for (std::size_t c = static_cast<std::size_t>(cursor); c < remap.size(); ++c) {
        if (remap[c] >= 0) {
          resumed = remap[c];
          break;
        }
      }
      cursor = resumed;
      if (e.nrows >= max_cosets) {
        break;
      }
      for (const auto& w : subgroup) {
        e.scan(0, w, true);
      }
      if (e.out_of_room) {
        continue;
      }
    }
    if (cursor >= static_cast<std::int32_t>(e.nrows)) {
      complete = true;
      break;
    }
    if (e.find(cursor) != cursor) {
      ++cursor;
      continue;
    }
    for (const auto& r : p.relators) {
      e.scan(cursor, r, true);
      if (e.find(cursor) != cursor || e.out_of_room) {
        break;
      }
    }
    if (e.find(cursor) != cursor) {
      ++cursor;
      continue;
    }
    for (int s = 0; s < e.stride && !e.out_of_room; ++s) {
      if (e.find(cursor) != cursor) {
        break;
      }
      if (e.cell(cursor, s) < 0) {
        e.define(cursor, s);
      }
    }
    if (!e.out_of_room) {
      ++cursor;
    }
  }

  e.compact();
  CosetTable t;
  t.count = e.nrows;
  t.complete = complete;
  t.ngens = m;
  t.rows.assign(e.nrows, std::vector<std::uint32_t>(e.stride, 0));
  for (std::size_t c = 0; c < e.nrows; ++c) {
    for (int s = 0; s < e.stride; ++s) {
      std::int32_t v = e.tab[c * e.stride + s];
      // An incomplete table may retain holes; they are folded to coset 0 and
      // masked by complete == false.
      t.rows[c][s] = v < 0 ? 0 : static_cast<std::uint32_t>(v);
    }
  }
  return t;
}

std::vector<BigInt> smith_normal_form_diagonal(std::vector<std::vector<BigInt>> m) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m) {
    if (row.size() != cols) {
      throw std::invalid_argument("matrix rows have unequal length");
    }
  }

  std::vector<BigInt> diag;
  std::size_t r = 0;
  std::size_t c = 0;
  while (r < rows && c < cols) {
    // Least-absolute-value pivot keeps the Euclidean descent short.
    std::size_t pr = rows;
    std::size_t pc = cols;
    BigInt best = 0;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = c; j < cols; ++j) {
        if (m[i][j] == 0) {
          continue;
        }
        BigInt a = abs(m[i][j]);
        if (pr == rows || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) {
      break;
    }
    std::swap(m[r], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) {
      std::swap(m[i][c], m[i][pc]);
    }

    for (;;) {
      bool moved = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) {
          continue;
        }
        BigInt q = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) {
          m[i][j] -= q * m[r][j];
        }
        if (m[i][c] != 0) {
          std::swap(m[r], m[i]);
          moved = true;
          break;
        }
      }
      if (moved) {
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (m[r][j] == 0) {
          continue;
        }
        BigInt q = m[r][j] / m[r][c];
        for (std::size_t i = r; i < rows; ++i) {
          m[i][j] -= q * m[i][c];
        }
        if (m[r][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) {
            std::swap(m[i][c], m[i][j]);
          }
          moved = true;
          break;
        }
      }
      if (moved) {
        continue;
      }
      // Pivot must divide everything that remains, or the invariant-factor
      // chain breaks; pulling the offending row up restarts the reduction.
      bool fixed = false;
      for (std::size_t i = r + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = c + 1; j < cols && !fixed; ++j) {
          if (m[i][j] % m[r][c] != 0) {
            for (std::size_t k = c; k < cols; ++k) {
              m[r][k] += m[i][k];
            }
            fixed = true;
          }
        }
      }
      if (!fixed) {
        break;
      }
    }
    diag.push_back(abs(m[r][c]));
    ++r;
    ++c;
  }
  return diag;
}

AbelianInvariants abelianization(const Presentation& p) {
  int m = p.ngens();
  if (m <= 0) {
    throw std::invalid_argument("presentation has no generators");
  }
  AbelianInvariants out;
  if (p.relators.empty()) {
    out.free_rank = static_cast<std::size_t>(m);
    return out;
  }
  std::vector<std::vector<BigInt>> mat(p.relators.size(), std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    check_word(p.relators[i], m, "relator");
    for (int letter : p.relators[i]) {
      int g = letter > 0 ? letter : -letter;
      mat[i][g - 1] += letter > 0 ? 1 : -1;
    }
  }
  std::vector<BigInt> diag = smith_normal_form_diagonal(std::move(mat));
  out.free_rank = static_cast<std::size_t>(m) - diag.size();
  for (const BigInt& d : diag) {
    if (d > 1) {
      out.torsion.push_back(d);
    }
  }
  return out;
}

CrossCheckReport cross_check_index(const Factorization& f, const std::vector<BraidWord>& subgroup,
                                   std::size_t max_vertices, std::size_t max_cosets) {
  int n = static_cast<int>(f.entries.size());
  for (const auto& w : subgroup) {
    if (w.strands != n) {
      throw std::invalid_argument("subgroup word strand count does not match the factorization");
    }
  }

  CrossCheckReport rep;
  OrbitBudget budget;
  budget.max_vertices = max_vertices;
  OrbitGraph orbit = enumerate(f, budget);
  rep.orbit_size = orbit.size();
  rep.orbit_complete = orbit.complete;

  std::vector<std::vector<int>> words;
  words.reserve(subgroup.size());
  for (const auto& w : subgroup) {
    words.push_back(w.letters);
  }
  CosetTable t = todd_coxeter(braid_presentation(n), words, max_cosets);
  rep.coset_count = t.count;
  rep.coset_complete = t.complete;

  bool all_stabilize = true;
  for (const auto& w : subgroup) {
    bool ok = stabilizes(f, w);
    rep.word_stabilizes.push_back(ok);
    all_stabilize = all_stabilize && ok;
  }
  rep.verdict = rep.orbit_complete && rep.coset_complete && rep.coset_count == rep.orbit_size &&
                all_stabilize;
  return rep;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
    ++a;
  }
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
    --b;
  }
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_word(const std::string& text,
                            const std::unordered_map<std::string, int>& index) {
  std::vector<int> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    long power = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string exp = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        power = std::stol(exp, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
      }
      if (used != exp.size()) {
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
      }
    }
    auto it = index.find(name);
    if (it == index.end()) {
      throw std::invalid_argument("unknown generator '" + name + "'");
    }
    int letter = power >= 0 ? it->second : -it->second;
    long count = power >= 0 ? power : -power;
    for (long k = 0; k < count; ++k) {
      letters.push_back(letter);
    }
  }
  return letters;
}

std::vector<int> invert_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& letter : out) {
    letter = -letter;
  }
  return out;
}

std::string format_word(const std::vector<int>& w, const std::vector<std::string>& names) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    int g = w[i] > 0 ? w[i] : -w[i];
    long long power = static_cast<long long>(j - i);
    if (w[i] < 0) {
      power = -power;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += names[g - 1];
    if (power != 1) {
      out += '^';
      out += std::to_string(power);
    }
    i = j;
  }
  return out;
}

}  // namespace

ParsedPresentation parse_presentation(const std::string& text) {
  ParsedPresentation out;
  std::unordered_map<std::string, int> index;
  bool have_gens = false;

  for (const std::string& raw : split(text, ';')) {
    std::string seg = trim(raw);
    if (seg.empty()) {
      continue;
    }
    std::size_t colon = seg.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("presentation section lacks a 'key:' prefix: '" + seg + "'");
    }
    std::string key = trim(seg.substr(0, colon));
    std::string body = seg.substr(colon + 1);
    if (key == "gens") {
      if (have_gens) {
        throw std::invalid_argument("duplicate gens section");
      }
      have_gens = true;
      std::istringstream in(body);
      std::string name;
      while (in >> name) {
        if (name.find_first_of("^=,") != std::string::npos) {
          throw std::invalid_argument("generator name '" + name + "' contains reserved characters");
        }
        if (!index.emplace(name, static_cast<int>(out.presentation.gen_names.size()) + 1).second) {
          throw std::invalid_argument("duplicate generator name '" + name + "'");
        }
        out.presentation.gen_names.push_back(name);
      }
      if (out.presentation.gen_names.empty()) {
        throw std::invalid_argument("gens section is empty");
      }
    } else if (key == "rel" || key == "sub") {
      if (!have_gens) {
        throw std::invalid_argument("gens section must come before rel/sub");
      }
      for (const std::string& item_raw : split(body, ',')) {
        std::string item = trim(item_raw);
        if (item.empty()) {
          continue;
        }
        if (key == "rel") {
          std::vector<std::string> sides = split(item, '=');
          if (sides.size() > 2) {
            throw std::invalid_argument("relator has more than one '='");
          }
          std::vector<int> word = parse_word(sides[0], index);
          if (sides.size() == 2) {
            std::vector<int> rhs = invert_word(parse_word(sides[1], index));
            word.insert(word.end(), rhs.begin(), rhs.end());
          }
          out.presentation.relators.push_back(std::move(word));
        } else {
          if (item.find('=') != std::string::npos) {
            throw std::invalid_argument("subgroup words may not contain '='");
          }
          out.subgroup.push_back(parse_word(item, index));
        }
      }
    } else {
      throw std::invalid_argument("unknown presentation section '" + key + "'");
    }
  }
  if (!have_gens) {
    throw std::invalid_argument("presentation lacks a gens section");
  }
  return out;
}

std::string format_presentation(const Presentation& p, const std::vector<std::vector<int>>& subgroup) {
  std::string out = "gens:";
  for (const std::string& name : p.gen_names) {
    out += ' ';
    out += name;
  }
  if (!p.relators.empty()) {
    out += "; rel: ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += format_word(p.relators[i], p.gen_names);
    }
  }
  if (!subgroup.empty()) {
    out += "; sub: ";
    for (std::size_t i = 0; i < subgroup.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += format_word(subgroup[i], p.gen_names);
    }
  }
  return out;
}

}  // namespace monodromy
