// Command-line front end: orbit enumeration, infinity certificates,
// index cross-checks, relation verification, certificate replay, DOT export.
//
// Exit codes: 0 success/complete, 1 negative-but-valid outcome,
// 2 invalid input, 3 verification failure.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monodromy/certify.hpp"
#include "monodromy/coset.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/hurwitz.hpp"
#include "monodromy/orbit.hpp"
#include "monodromy/symplectic.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "family:number" names a builtin; anything else is a JSON file path.
bool looks_builtin(const std::string& s) {
  std::size_t colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size()) {
    return false;
  }
  for (std::size_t i = 0; i < colon; ++i) {
    if (!std::isalpha(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  for (std::size_t i = colon + 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

monodromy::Factorization load_input(const std::string& src) {
  if (looks_builtin(src)) {
    return monodromy::builtin(src);
  }
  return monodromy::factorization_from_json(read_file(src));
}

// MONODROMY_THREADS overrides both the default and --threads.
unsigned resolve_threads(unsigned flag_value) {
  const char* env = std::getenv("MONODROMY_THREADS");
  if (env != nullptr && *env != '\0') {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(env, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("MONODROMY_THREADS is not a number");
    }
    if (used != std::string(env).size() || v < 1) {
      throw std::invalid_argument("MONODROMY_THREADS must be a positive integer");
    }
    return static_cast<unsigned>(v);
  }
  return flag_value < 1 ? 1 : flag_value;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write '" + path + "'");
  }
  out << text;
}

struct GenusRange {
  int lo = 1;
  int hi = 1;
};

GenusRange parse_genus_range(const std::string& text) {
  GenusRange r;
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t used = 0;
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) {
        throw std::invalid_argument("");
      }
    } else {
      std::size_t used = 0;
      std::string a = text.substr(0, dots);
      std::string b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) {
        throw std::invalid_argument("");
      }
      r.hi = std::stoi(b, &used);
      if (used != b.size()) {
        throw std::invalid_argument("");
      }
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad genus range '" + text + "' (expected g or lo..hi)");
  }
  if (r.lo < 1 || r.hi < r.lo) {
    throw std::invalid_argument("genus range must satisfy 1 <= lo <= hi");
  }
  return r;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

int cmd_orbit(const std::string& input, std::size_t max_vertices, unsigned threads,
              const std::string& dot_path, bool dot_to_stdout) {
  monodromy::Factorization f = load_input(input);
  monodromy::OrbitBudget budget;
  budget.max_vertices = max_vertices;
  budget.threads = threads;
  monodromy::OrbitGraph g = monodromy::enumerate(f, budget);

  if (!dot_path.empty()) {
    write_text(dot_path, monodromy::export_dot(g));
  }
  if (dot_to_stdout) {
    std::cout << monodromy::export_dot(g);
    return g.complete ? 0 : 1;
  }

  ordered_json out;
  out["size"] = g.size();
  out["complete"] = g.complete;
  if (g.complete) {
    ordered_json fixed = ordered_json::object();
    std::vector<std::size_t> stats = monodromy::fixed_point_stats(g);
    for (std::size_t i = 0; i < stats.size(); ++i) {
      fixed["s" + std::to_string(i + 1)] = stats[i];
    }
    out["fixed"] = fixed;
  }
  std::cout << out.dump(2) << "\n";
  return g.complete ? 0 : 1;
}

int cmd_certify(const std::string& input, long bound, bool use_auroux, const std::string& out_path) {
  monodromy::Factorization f = load_input(input);
  std::optional<monodromy::InfinityCertificate> cert;
  if (use_auroux) {
    cert = monodromy::auroux_divergence(f, f, bound);
  } else {
    cert = monodromy::certify_infinite(f, bound);
  }
  if (!cert) {
    std::cout << "NOT FOUND\n";
    return 1;
  }
  std::string text = monodromy::certificate_to_json(*cert);
  if (!out_path.empty()) {
    write_text(out_path, text + "\n");
  }
  std::cout << text << "\n";
  return 0;
}

int cmd_index(const std::string& input, const std::vector<std::string>& sub_specs,
              std::size_t max_vertices, std::size_t max_cosets) {
  monodromy::Factorization f = load_input(input);
  int n = static_cast<int>(f.size());
  std::vector<monodromy::BraidWord> words;
  std::vector<std::string> labels;
  for (const std::string& spec : sub_specs) {
    for (const std::string& piece : split_commas(spec)) {
      bool blank = true;
      for (char ch : piece) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
          blank = false;
          break;
        }
      }
      if (blank) {
        continue;  // trailing or doubled commas
      }
      words.push_back(monodromy::parse_braid_word(piece, n));
      labels.push_back(monodromy::format_braid_word(words.back()));
    }
  }
  if (words.empty()) {
    throw std::invalid_argument("index needs at least one subgroup word (--sub)");
  }

  monodromy::CrossCheckReport rep =
      monodromy::cross_check_index(f, words, max_vertices, max_cosets);

  ordered_json out;
  out["orbit_size"] = rep.orbit_size;
  out["orbit_complete"] = rep.orbit_complete;
  out["coset_count"] = rep.coset_count;
  out["coset_complete"] = rep.coset_complete;
  ordered_json st = ordered_json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    st[labels[i]] = static_cast<bool>(rep.word_stabilizes[i]);
  }
  out["stabilizes"] = st;
  out["verdict"] = rep.verdict;
  std::cout << out.dump(2) << "\n";
  return rep.verdict ? 0 : 1;
}

int cmd_verify_relations(const std::string& range_text) {
  GenusRange r = parse_genus_range(range_text);
  bool all_pass = true;
  for (int g = r.lo; g <= r.hi; ++g) {
    for (monodromy::Relation rel :
         {monodromy::Relation::eta1, monodromy::Relation::eta2, monodromy::Relation::eta3}) {
      bool ok = monodromy::verify_relation(rel, g);
      all_pass = all_pass && ok;
      std::cout << monodromy::relation_name(rel) << " g=" << g
                << " length=" << monodromy::relation_length(rel, g) << " "
                << (ok ? "PASS" : "FAIL") << "\n";
    }
  }
  return all_pass ? 0 : 3;
}

int cmd_verify(const std::string& cert_path) {
  monodromy::InfinityCertificate cert =
      monodromy::certificate_from_json(read_file(cert_path));
  monodromy::verify_certificate(cert);
  std::cout << "VERIFIED strategy=" << monodromy::strategy_name(cert.strategy)
            << " K=" << cert.K << "\n";
  return 0;
}

int cmd_export_dot(const std::string& input, const std::string& out_path,
                   std::size_t max_vertices, unsigned threads) {
  monodromy::Factorization f = load_input(input);
  monodromy::OrbitBudget budget;
  budget.max_vertices = max_vertices;
  budget.threads = threads;
  monodromy::OrbitGraph g = monodromy::enumerate(f, budget);
  std::string dot = monodromy::export_dot(g);
  if (out_path.empty()) {
    std::cout << dot;
  } else {
    write_text(out_path, dot);
  }
  return g.complete ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz orbits, infinity certificates, and index cross-checks "
               "for genus-one monodromy factorizations"};
  app.require_subcommand(1);

  std::string input;
  std::string dot_path;
  bool dot_stdout = false;
  std::size_t max_vertices = 1'000'000;
  std::size_t max_cosets = 100'000;
  unsigned threads = 1;
  long bound = 50;
  bool use_auroux = false;
  std::string out_path;
  std::vector<std::string> sub_specs;
  std::string genus_range = "1";
  std::string cert_path;

  CLI::App* orbit = app.add_subcommand("orbit", "enumerate the Hurwitz orbit");
  orbit->add_option("input", input, "builtin id (q:N, E:D) or factorization JSON file")
      ->required();
  orbit->add_option("-d,--dot", dot_path, "also write the orbit graph as DOT");
  orbit->add_flag("--dot-stdout", dot_stdout, "print DOT instead of the JSON summary");
  orbit->add_option("-m,--max-vertices", max_vertices, "orbit vertex budget");
  orbit->add_option("-t,--threads", threads, "worker threads for frontier expansion");

  CLI::App* certify = app.add_subcommand("certify", "search for an infinite-orbit certificate");
  certify->add_option("input", input, "builtin id or factorization JSON file")->required();
  certify->add_option("-K,--verify-bound", bound, "replay depth for certificate verification");
  certify->add_flag("-a,--auroux", use_auroux,
                    "certify the self fiber sum through the intersection-growth law");
  certify->add_option("-o,--out", out_path, "also write the certificate to a file");

  CLI::App* index = app.add_subcommand("index", "cross-check orbit size against coset count");
  index->add_option("input", input, "builtin id or factorization JSON file")->required();
  index->add_option("-s,--sub", sub_specs, "subgroup braid words, comma-separated")
      ->required();
  index->add_option("-m,--max-vertices", max_vertices, "orbit vertex budget");
  index->add_option("-c,--max-cosets", max_cosets, "coset enumeration budget");

  CLI::App* relations = app.add_subcommand("verify-relations", "check chain relation identities");
  relations->add_option("-g,--genus", genus_range, "genus or range lo..hi")->required();

  CLI::App* verify = app.add_subcommand("verify", "replay a certificate file");
  verify->add_option("certificate", cert_path, "certificate JSON file")->required();

  CLI::App* exportdot = app.add_subcommand("export-dot", "enumerate and write the orbit as DOT");
  exportdot->add_option("input", input, "builtin id or factorization JSON file")->required();
  exportdot->add_option("output", out_path, "output file (stdout if omitted)");
  exportdot->add_option("-m,--max-vertices", max_vertices, "orbit vertex budget");
  exportdot->add_option("-t,--threads", threads, "worker threads for frontier expansion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(orbit)) {
      return cmd_orbit(input, max_vertices, resolve_threads(threads), dot_path, dot_stdout);
    }
    if (app.got_subcommand(certify)) {
      return cmd_certify(input, bound, use_auroux, out_path);
    }
    if (app.got_subcommand(index)) {
      return cmd_index(input, sub_specs, max_vertices, max_cosets);
    }
    if (app.got_subcommand(relations)) {
      return cmd_verify_relations(genus_range);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(cert_path);
    }
    if (app.got_subcommand(exportdot)) {
      return cmd_export_dot(input, out_path, max_vertices, resolve_threads(threads));
    }
  } catch (const monodromy::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
