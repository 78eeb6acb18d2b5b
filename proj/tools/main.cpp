#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "indpoly/checks.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/enumeration.hpp"
#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/search.hpp"
#include "indpoly/verify.hpp"

namespace {

using namespace indpoly;

// Flag values that pass CLI validation but name an unsupported combination.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_file(path);
  if (format == "edgelist") return parse_edge_list(text);
  // graph6: exactly one significant line
  std::istringstream is(text);
  std::string line, found;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (!found.empty()) throw std::runtime_error("graph6 input must contain a single line");
    found = line;
  }
  if (found.empty()) throw std::runtime_error("graph6 input is empty");
  return parse_graph6(found);
}

std::string double6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string coeffs_json_array(const Polynomial& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << '"' << p.coeffs()[i].get_str() << '"';
  }
  os << "]";
  return os.str();
}

void print_reports_human(const Polynomial& p) {
  ConcavityReport concavity = check_log_concave(p);
  UnimodalityReport unimodality = check_unimodal(p);
  std::cout << "alpha: " << concavity.alpha << "\n";
  std::cout << "log-concave: " << (concavity.log_concave ? "yes" : "no") << "\n";
  for (const auto& v : concavity.violations) {
    std::cout << "violation: k=" << v.k << " offset=" << v.offset << " lhs=" << v.lhs.get_str()
              << " rhs=" << v.rhs.get_str() << "\n";
  }
  if (unimodality.unimodal) {
    std::cout << "unimodal: yes (mode " << unimodality.mode_low << ".." << unimodality.mode_high
              << ")\n";
  } else {
    std::cout << "unimodal: no (witness " << unimodality.witness << ")\n";
  }
}

// Concavity report object extended with one "unimodality" key.
std::string reports_json(const Polynomial& p) {
  ConcavityReport concavity = check_log_concave(p);
  UnimodalityReport unimodality = check_unimodal(p);
  std::string base = concavity.to_json();
  base.pop_back();  // strip the closing brace
  return base + ", \"unimodality\": " + unimodality.to_json() + "}";
}

int cmd_compute(const std::string& input, const std::string& format, const std::string& method,
                bool json) {
  Graph g = load_graph(input, format);
  Polynomial p;
  if (method == "auto") {
    p = independence_polynomial(g);
  } else if (method == "tree") {
    if (!is_tree(g)) throw std::runtime_error("--method tree requires a tree input");
    p = independence_polynomial_tree(Tree::from_graph(g, 0));
  } else if (method == "general") {
    p = independence_polynomial_general(g);
  } else {
    p = independence_polynomial_bruteforce(g);
  }
  std::cout << (json ? p.coeffs_json() : p.to_text()) << "\n";
  return 0;
}

int cmd_check(const std::string& input, const std::string& format, bool json) {
  Graph g = load_graph(input, format);
  Polynomial p = independence_polynomial(g);
  if (json) {
    std::cout << reports_json(p) << "\n";
  } else {
    print_reports_human(p);
  }
  return 0;
}

// Shared by `family` and `named`: identity describes the tree in key=value
// form, e.g. {"structure": "3kk1", "k": 4} or {"tree": "t1"}.
int emit_tree(const Tree& tree, const std::string& emit, bool json,
              const std::string& identity_json, const std::string& identity_human,
              const std::optional<TopCoefficients>& top, const std::optional<double>& threshold,
              const std::optional<int>& first_k) {
  if (emit == "graph6") {
    std::string line = format_graph6(tree.to_graph());
    if (json) {
      std::cout << "{" << identity_json << ", \"graph6\": \"" << line << "\"}\n";
    } else {
      std::cout << line << "\n";
    }
    return 0;
  }
  Polynomial p = independence_polynomial_tree(tree);
  if (emit == "poly") {
    std::cout << (json ? p.coeffs_json() : p.to_text()) << "\n";
    return 0;
  }
  // emit == "report"
  if (json) {
    std::ostringstream os;
    os << "{" << identity_json << ", \"n\": " << tree.vertex_count() << ", \"coeffs\": "
       << coeffs_json_array(p) << ", \"checks\": " << reports_json(p);
    if (top) {
      os << ", \"closed_form\": {\"degree\": " << top->degree << ", \"c1\": \""
         << top->c1.get_str() << "\", \"c2\": \"" << top->c2.get_str() << "\"}";
    }
    if (threshold) os << ", \"threshold\": " << double6(*threshold);
    if (first_k) os << ", \"first_violating_k\": " << *first_k;
    os << "}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << identity_human << "\n";
    std::cout << "n: " << tree.vertex_count() << "\n";
    std::cout << "I(x) = " << p.to_text() << "\n";
    print_reports_human(p);
    if (top) {
      std::cout << "closed-form top coefficients: x^" << top->degree << " + " << top->c1.get_str()
                << " x^" << top->degree - 1 << " + " << top->c2.get_str() << " x^"
                << top->degree - 2 << " + ...\n";
    }
    if (threshold) std::cout << "threshold: " << double6(*threshold) << "\n";
    if (first_k) std::cout << "first violating k: " << *first_k << "\n";
  }
  return 0;
}

int cmd_family(const std::string& structure, int k, const std::string& emit, bool json) {
  FamilyShape shape = *parse_family_shape(structure);
  Tree tree = build_family_tree(shape, k);
  std::optional<TopCoefficients> top;
  std::optional<double> threshold;
  std::optional<int> first_k;
  if (emit == "report" && has_closed_form(shape)) {
    top = family_top_coefficients(shape, k);
    threshold = family_threshold(shape);
    first_k = family_first_violating_k(shape);
  }
  return emit_tree(tree, emit, json,
                   "\"structure\": \"" + structure + "\", \"k\": " + std::to_string(k),
                   "structure: " + structure + "  k: " + std::to_string(k), top, threshold,
                   first_k);
}

int cmd_named(const std::string& name, const std::string& emit, bool json) {
  NamedTree which = *parse_named_tree(name);
  Tree tree = build_named_tree(which);
  return emit_tree(tree, emit, json, "\"tree\": \"" + name + "\"", "tree: " + name, std::nullopt,
                   std::nullopt, std::nullopt);
}

int cmd_enumerate(int n, bool count_only, const std::string& emit) {
  if (count_only) {
    std::cout << count_free_trees(n) << "\n";
    return 0;
  }
  for (FreeTreeEnumerator e(n); !e.done(); e.advance()) {
    if (emit == "graph6") {
      std::cout << format_graph6(e.tree().to_graph()) << "\n";
    } else {
      const LevelSequence& seq = e.levels();
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << seq[i];
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_search(int min_n, int max_n, int threads, const std::string& out,
               const std::string& checkpoint, bool resume, const std::string& predicate) {
  if (min_n > max_n) throw UsageError("--min-n must not exceed --max-n");
  SearchJob job;
  job.min_n = min_n;
  job.max_n = max_n;
  job.workers = threads;
  job.predicate = *SearchPredicate::parse(predicate);
  job.output_path = out;
  job.checkpoint_path = checkpoint;
  job.resume = resume;
  SearchSummary summary = run_search(job);
  std::uint64_t scanned = 0, found = 0;
  for (const auto& t : summary.per_order) {
    std::fprintf(stderr, "n=%d: scanned %llu trees, found %llu, %.2fs\n", t.n,
                 static_cast<unsigned long long>(t.trees_scanned),
                 static_cast<unsigned long long>(t.counterexamples), t.seconds);
    scanned += t.trees_scanned;
    found += t.counterexamples;
  }
  std::fprintf(stderr, "total: scanned %llu trees, found %llu counterexample(s)\n",
               static_cast<unsigned long long>(scanned), static_cast<unsigned long long>(found));
  return 0;
}

int cmd_thresholds(const std::string& structure, bool json) {
  FamilyShape shape = *parse_family_shape(structure);
  if (!has_closed_form(shape)) {
    throw UsageError("structure " + structure + " has no closed-form top coefficients");
  }
  double threshold = family_threshold(shape);
  int first_k = family_first_violating_k(shape);
  if (json) {
    std::cout << "{\"structure\": \"" << structure << "\", \"threshold\": " << double6(threshold)
              << ", \"first_violating_k\": " << first_k << "}\n";
  } else {
    std::cout << "structure: " << structure << "\n";
    std::cout << "threshold: " << double6(threshold) << "\n";
    std::cout << "first violating k: " << first_k << "\n";
  }
  return 0;
}

int cmd_verify(bool json) {
  std::vector<ReferenceCheck> checks = run_reference_checks();
  bool ok = all_passed(checks);
  if (json) {
    std::ostringstream os;
    os << "{\"pass\": " << (ok ? "true" : "false") << ", \"checks\": [";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (i) os << ", ";
      os << "{\"name\": \"" << checks[i].name << "\", \"pass\": "
         << (checks[i].pass ? "true" : "false") << "}";
    }
    os << "]}";
    std::cout << os.str() << "\n";
  } else {
    for (const auto& c : checks) {
      if (c.pass) {
        std::cout << "PASS " << c.name << "\n";
      } else {
        std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
      }
    }
    std::cout << (ok ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact independence polynomials of graphs: computation, counterexample "
               "families, log-concavity checks, and exhaustive tree scans"};
  app.require_subcommand(1);

  std::string input, format = "edgelist", method = "auto", emit = "poly";
  std::string structure, tree_name, out_path, checkpoint_path, predicate = "non-log-concave";
  bool json = false, count_only = false, resume = false;
  int k = 1, n = 1, min_n = 1, max_n = 1;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* compute = app.add_subcommand("compute", "Independence polynomial of a graph from a file");
  compute->add_option("--input", input, "input file")->required();
  compute->add_option("--format", format, "input format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  compute->add_option("--method", method, "evaluation method")
      ->check(CLI::IsMember({"auto", "tree", "general", "brute"}));
  compute->add_flag("--json", json, "JSON output");

  auto* family = app.add_subcommand("family", "Build a parameterized counterexample tree");
  family->add_option("--structure", structure, "family structure name")
      ->required()
      ->check(CLI::IsMember({"3kk", "3kk1", "3kk2", "3skk", "3skk1", "3skk2", "3skk3"}));
  family->add_option("--k", k, "cluster size parameter")->required()->check(CLI::PositiveNumber);
  family->add_option("--emit", emit, "what to print")
      ->check(CLI::IsMember({"poly", "graph6", "report"}));
  family->add_flag("--json", json, "JSON output");

  auto* named = app.add_subcommand("named", "One of the fixed reference trees");
  named->add_option("--tree", tree_name, "tree name")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "ex28", "ex35"}));
  named->add_option("--emit", emit, "what to print")
      ->check(CLI::IsMember({"poly", "graph6", "report"}));
  named->add_flag("--json", json, "JSON output");

  auto* check = app.add_subcommand("check", "Log-concavity and unimodality of a graph's polynomial");
  check->add_option("--input", input, "input file")->required();
  check->add_option("--format", format, "input format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  check->add_flag("--json", json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "Stream all free trees of one order");
  enumerate->add_option("--n", n, "number of vertices")->required()->check(CLI::Range(1, 32));
  enumerate->add_flag("--count-only", count_only, "print only the class count");
  enumerate->add_option("--emit", emit, "line format (default: level sequences)")
      ->check(CLI::IsMember({"graph6"}));

  auto* search = app.add_subcommand("search", "Scan all free trees in an order range");
  search->add_option("--min-n", min_n, "smallest order")->required()->check(CLI::Range(1, 32));
  search->add_option("--max-n", max_n, "largest order")->required()->check(CLI::Range(1, 32));
  search->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", out_path, "output file for matches (JSON lines; default stdout)");
  search->add_option("--checkpoint", checkpoint_path, "checkpoint file, updated per chunk");
  search->add_flag("--resume", resume, "continue from the checkpoint file");
  search->add_option("--predicate", predicate, "what to flag")->check([](const std::string& s) {
    return SearchPredicate::parse(s) ? std::string()
                                     : std::string("expected non-log-concave, non-unimodal or "
                                                   "offset-at-least:<D>");
  });

  auto* thresholds = app.add_subcommand("thresholds", "Closed-form crossover point of a family");
  thresholds->add_option("--structure", structure, "family structure name")
      ->required()
      ->check(CLI::IsMember({"3kk", "3kk1", "3kk2", "3skk", "3skk1", "3skk2", "3skk3"}));
  thresholds->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Recompute and compare all reference fixtures");
  verify->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(input, format, method, json);
    if (family->parsed()) return cmd_family(structure, k, emit, json);
    if (named->parsed()) return cmd_named(tree_name, emit, json);
    if (check->parsed()) return cmd_check(input, format, json);
    if (enumerate->parsed()) return cmd_enumerate(n, count_only, emit);
    if (search->parsed()) {
      return cmd_search(min_n, max_n, threads, out_path, checkpoint_path, resume, predicate);
    }
    if (thresholds->parsed()) return cmd_thresholds(structure, json);
    if (verify->parsed()) return cmd_verify(json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
