// Command line front end.
//
//   schub schubert   --w 4132 [--method checked|divdiff|pipedream] [--format text|json]
//   schub expand     --w 4132 --basis sem|chm|schubert|monomial [--format text|json]
//   schub pipedreams --w 4132 [--format text|json|dot] [--limit N]
//   schub scan       --n 6 [--sem-max M] [--checks ...] [--jobs J]
//                    [--cache-dir DIR] [--report PATH]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 scan found a conjecture counterexample (with all theorems passing).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "schub/bases.hpp"
#include "schub/json_io.hpp"
#include "schub/perm.hpp"
#include "schub/pipedream.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"
#include "schub/verify.hpp"

namespace {

schub::Permutation parse_word(const std::string& s) {
  std::vector<int> word;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse '" + tok + "' in --w");
      }
      if (used != tok.size()) throw std::invalid_argument("cannot parse '" + tok + "' in --w");
      word.push_back(v);
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(
            "--w takes contiguous digits for n <= 9 (e.g. 4132) or a comma separated word");
      word.push_back(c - '0');
    }
  }
  return schub::Permutation::from_word(std::move(word));  // reports bad entries with positions
}

std::string coeff_prefix(const schub::BigInt& c, bool first) {
  const bool neg = c < 0;
  schub::BigInt mag = neg ? schub::BigInt(-c) : c;
  std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (mag != 1) out += mag.str() + "*";
  return out;
}

std::string poly_text(const schub::IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {  // descending term order
    const auto& [ev, c] = *it;
    std::string factors;
    for (int i = 1; i <= ev.max_var(); ++i) {
      const int e = ev.exponent(i);
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(i);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      const bool neg = c < 0;
      const schub::BigInt mag = neg ? schub::BigInt(-c) : c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      out += mag.str();
    } else {
      out += coeff_prefix(c, first) + factors;
    }
    first = false;
  }
  return out;
}

std::string sem_factors_text(const schub::SemVector& a) {
  std::string out;
  for (int i = 1; i <= static_cast<int>(a.a.size()); ++i) {
    if (a.entry(i) == 0) continue;
    if (!out.empty()) out += "*";
    out += "e[" + std::to_string(i) + "," + std::to_string(a.entry(i)) + "]";
  }
  return out.empty() ? "1" : out;
}

std::string chm_factors_text(const schub::ChmVector& a) {
  std::string out;
  for (int i = 1; i <= static_cast<int>(a.a.size()); ++i) {
    if (a.entry(i) == 0) continue;
    if (!out.empty()) out += "*";
    out += "h[" + std::to_string(i) + "," + std::to_string(a.entry(i)) + "]";
  }
  return out.empty() ? "1" : out;
}

std::string sem_expansion_text(const schub::SemExpansion& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    out += coeff_prefix(it->second, first) + sem_factors_text(it->first);
    first = false;
  }
  return out;
}

std::string schubert_expansion_text(const schub::SchubertExpansion& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms) {
    std::string name = "S[";
    for (int i = 1; i <= w.size(); ++i) name += (i > 1 ? "," : "") + std::to_string(w(i));
    name += "]";
    out += coeff_prefix(c, first) + name;
    first = false;
  }
  return out;
}

std::string word_text(const schub::Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.size(); ++i) out += (i > 1 ? "," : "") + std::to_string(w(i));
  return out;
}

// Staircase picture: row r shows cells with r + c <= n + 1.
std::string pipedream_grid(const schub::PipeDream& d) {
  std::string out;
  for (int r = 1; r <= d.size(); ++r) {
    for (int c = 1; c + r <= d.size() + 1; ++c) out += d.has_crossing(r, c) ? '+' : '.';
    out += '\n';
  }
  return out;
}

std::string pipedream_dot(const schub::Permutation& w, const std::vector<schub::PipeDream>& dreams) {
  std::map<schub::PipeDream, std::size_t> index;
  for (std::size_t i = 0; i < dreams.size(); ++i) index.emplace(dreams[i], i);
  std::string out = "digraph pipedreams {\n";
  out += "  label=\"reduced pipe dreams of " + word_text(w) + "\";\n";
  out += "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < dreams.size(); ++i) {
    std::string cells;
    for (auto [r, c] : dreams[i].crossings())
      cells += "(" + std::to_string(r) + "," + std::to_string(c) + ")";
    if (cells.empty()) cells = "empty";
    out += "  d" + std::to_string(i) + " [label=\"" + cells + "\"];\n";
  }
  for (std::size_t i = 0; i < dreams.size(); ++i)
    for (const schub::LadderMove& m : schub::ladder_moves(dreams[i])) {
      const std::size_t j = index.at(schub::apply_ladder_move(dreams[i], m));
      out += "  d" + std::to_string(i) + " -> d" + std::to_string(j) + " [label=\"k=" +
             std::to_string(m.order) + "\"];\n";
    }
  out += "}\n";
  return out;
}

int run_scan(const schub::ScanConfig& config) {
  const schub::ScanReport report = schub::run_suite(config);
  for (const auto& scan : report.theorems) {
    std::cout << "n=" << scan.n << " theorems:";
    for (const auto& o : scan.outcomes) {
      std::cout << " " << o.name << "=";
      if (!o.checked)
        std::cout << "skipped";
      else
        std::cout << (o.pass ? "pass" : "FAIL(" + std::to_string(o.counterexample_count) + ")");
    }
    std::cout << "\n";
  }
  for (const auto& row : report.counts)
    std::cout << "n=" << row.n << " counts: monomial=" << row.monomial_count
              << (row.catalan_ok ? " (catalan ok)" : " (catalan MISMATCH)")
              << " sem=" << row.sem_count
              << (row.fibonacci_ok && row.remark_ok ? " (fibonacci ok, index "
                                                      + std::to_string(row.fibonacci_index) + ")"
                                                    : " (fibonacci MISMATCH)")
              << " chm=" << row.chm_count << (row.power_ok ? " (2^(n-1) ok)" : " (2^(n-1) MISMATCH)")
              << "\n";
  for (const auto& scan : report.conjecture) {
    std::cout << "n=" << scan.n << " conjecture: ";
    if (!scan.checked) {
      std::cout << "skipped\n";
      continue;
    }
    std::cout << "single_sem=" << scan.single_sem << " nonnegative=" << scan.nonnegative
              << " counterexamples=" << scan.counterexample_count;
    for (const auto& w : scan.counterexamples) std::cout << " " << word_text(w);
    std::cout << "\n";
  }
  if (!config.report_path.empty()) std::cout << "report written to " << config.report_path << "\n";
  if (!report.verification_ok()) {
    std::cout << "verification FAILED\n";
    return 1;
  }
  if (report.conjecture_counterexamples() > 0) {
    std::cout << "verification ok; conjecture counterexamples found\n";
    return 3;
  }
  std::cout << "verification ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert polynomials, pipe dreams, and basis expansions over exact integers"};
  app.require_subcommand(1);

  std::string w_arg;
  std::string method_arg = "checked";
  std::string format_arg = "text";
  std::string basis_arg;
  std::size_t limit = schub::kDefaultDreamLimit;

  CLI::App* cmd_schubert = app.add_subcommand("schubert", "Compute the Schubert polynomial of w");
  cmd_schubert->add_option("--w", w_arg, "permutation word, e.g. 4132 or 10,4,1,...")->required();
  cmd_schubert->add_option("--method", method_arg, "divdiff, pipedream, or checked (default)")
      ->check(CLI::IsMember({"divdiff", "pipedream", "checked"}));
  cmd_schubert->add_option("--format", format_arg, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_expand = app.add_subcommand("expand", "Expand the Schubert polynomial of w in a basis");
  cmd_expand->add_option("--w", w_arg, "permutation word")->required();
  cmd_expand->add_option("--basis", basis_arg, "sem, chm, schubert, or monomial")
      ->required()
      ->check(CLI::IsMember({"sem", "chm", "schubert", "monomial"}));
  cmd_expand->add_option("--format", format_arg, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_dreams = app.add_subcommand("pipedreams", "Enumerate the reduced pipe dreams of w");
  cmd_dreams->add_option("--w", w_arg, "permutation word")->required();
  cmd_dreams->add_option("--format", format_arg, "text, json, or dot (ladder move graph)")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  cmd_dreams->add_option("--limit", limit, "abort beyond this many dreams");

  schub::ScanConfig config;
  config.n_max = 0;
  config.report_path = "scan_report.json";
  if (const char* env = std::getenv("SCHUB_CACHE_DIR")) config.cache_dir = env;
  std::vector<std::string> checks = {"theorems", "counts", "conjecture"};
  int sem_max = -1;

  CLI::App* cmd_scan = app.add_subcommand("scan", "Verify theorems, counts, and the conjecture over S_1..S_n");
  cmd_scan->add_option("--n", config.n_max, "largest symmetric group to scan")
      ->required()
      ->check(CLI::Range(1, 9));
  cmd_scan->add_option("--sem-max", sem_max, "largest n for SEM expansions (default min(n, 6))")
      ->check(CLI::Range(0, 9));
  cmd_scan->add_option("--checks", checks, "subset of theorems,counts,conjecture")
      ->delimiter(',')
      ->check(CLI::IsMember({"theorems", "counts", "conjecture"}));
  cmd_scan->add_option("--jobs", config.jobs, "worker threads (output is identical for any value)")
      ->check(CLI::Range(1, 256));
  cmd_scan->add_option("--cache-dir", config.cache_dir,
                       "directory for the polynomial cache (default $SCHUB_CACHE_DIR, else off)");
  cmd_scan->add_option("--report", config.report_path,
                       "report file path (default scan_report.json; empty to skip)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_schubert->parsed()) {
      const schub::Permutation w = parse_word(w_arg);
      const schub::SchubertMethod method = method_arg == "divdiff" ? schub::SchubertMethod::divdiff
                                           : method_arg == "pipedream"
                                               ? schub::SchubertMethod::pipedream
                                               : schub::SchubertMethod::checked;
      const schub::IntPolynomial s = schub::schubert_poly(w, method);
      if (format_arg == "json")
        std::cout << schub::poly_to_json(s).dump() << "\n";
      else
        std::cout << poly_text(s) << "\n";
      return 0;
    }

    if (cmd_expand->parsed()) {
      const schub::Permutation w = parse_word(w_arg);
      if (basis_arg == "sem") {
        const schub::SemExpansion e = schub::sem_expand(schub::schubert_divdiff(w), w.size());
        std::cout << (format_arg == "json" ? schub::sem_expansion_to_json(e).dump()
                                           : sem_expansion_text(e))
                  << "\n";
      } else if (basis_arg == "chm") {
        const auto a = schub::single_chm_of(w);
        if (format_arg == "json") {
          schub::Json j{{"w", w.word()}, {"single_chm", nullptr}};
          if (a) j["single_chm"] = a->a;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << (a ? chm_factors_text(*a) : "not a single CHM product") << "\n";
        }
      } else if (basis_arg == "monomial") {
        const auto m = schub::single_monomial_of(w);
        if (format_arg == "json") {
          schub::Json j{{"w", w.word()}, {"single_monomial", nullptr}};
          if (m) j["single_monomial"] = m->exponents();
          std::cout << j.dump() << "\n";
        } else if (m) {
          std::cout << poly_text(schub::IntPolynomial::monomial(*m)) << "\n";
        } else {
          std::cout << "not a single monomial\n";
        }
      } else {  // schubert
        const schub::SchubertExpansion e =
            schub::expand_schubert_basis(schub::schubert_divdiff(w), w.size());
        std::cout << (format_arg == "json" ? schub::schubert_expansion_to_json(e).dump()
                                           : schubert_expansion_text(e))
                  << "\n";
      }
      return 0;
    }

    if (cmd_dreams->parsed()) {
      const schub::Permutation w = parse_word(w_arg);
      const std::vector<schub::PipeDream> dreams = schub::enumerate_reduced(w, limit);
      if (format_arg == "json") {
        schub::Json list = schub::Json::array();
        for (const auto& d : dreams) list.push_back(schub::pipedream_to_json(d));
        std::cout << schub::Json{{"w", w.word()}, {"count", dreams.size()}, {"pipedreams", std::move(list)}}
                         .dump()
                  << "\n";
      } else if (format_arg == "dot") {
        std::cout << pipedream_dot(w, dreams);
      } else {
        std::cout << dreams.size() << " reduced pipe dreams of " << word_text(w) << "\n";
        for (const auto& d : dreams) std::cout << "\n" << pipedream_grid(d);
      }
      return 0;
    }

    if (cmd_scan->parsed()) {
      config.sem_max = sem_max >= 0 ? sem_max : std::min(config.n_max, 6);
      config.run_theorems = std::find(checks.begin(), checks.end(), "theorems") != checks.end();
      config.run_counts = std::find(checks.begin(), checks.end(), "counts") != checks.end();
      config.run_conjecture = std::find(checks.begin(), checks.end(), "conjecture") != checks.end();
      return run_scan(config);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
