#pragma once

// Exhaustive verification over S_n of the pattern-avoidance
// characterizations, their enumerative corollaries, and a scan for
// counterexamples to the positivity conjecture (a nonnegative SEM expansion
// only ever being the single-product one).
//
// Pattern flags are computed by subsequence search and algebraic flags from
// the polynomials themselves; the theorems assert the two routes agree, and
// the count section recounts by patterns alone. Scans are deterministic:
// records live in rank-indexed slots, so the thread count never changes any
// output.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "schub/bases.hpp"
#include "schub/json_io.hpp"
#include "schub/perm.hpp"
#include "schub/pipedream.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"

namespace schub {

struct PatternFlags {
  bool p132 = false, p312 = false, p1432 = false, p321 = false, p231 = false;
};

struct ClassificationRecord {
  Permutation w;
  LehmerCode code;
  PatternFlags patterns;
  bool code_nonincreasing = false;
  bool rules_ok = false;
  bool clearance = false;     // diagonal clearance of the bottom dream
  bool is_monomial = false;   // S_w is one monomial
  bool is_sem = false;        // S_w is one SEM product
  bool is_chm = false;        // S_w is one CHM product
  bool sem_checked = false;
  std::int64_t sem_terms = 0;
  bool sem_nonneg = false;
};

namespace detail {

inline PatternFlags pattern_flags(const Permutation& w) {
  static const Permutation q132 = Permutation::from_word({1, 3, 2});
  static const Permutation q312 = Permutation::from_word({3, 1, 2});
  static const Permutation q1432 = Permutation::from_word({1, 4, 3, 2});
  static const Permutation q321 = Permutation::from_word({3, 2, 1});
  static const Permutation q231 = Permutation::from_word({2, 3, 1});
  PatternFlags f;
  f.p132 = contains_pattern(w, q132);
  f.p312 = contains_pattern(w, q312);
  f.p1432 = contains_pattern(w, q1432);
  f.p321 = contains_pattern(w, q321);
  f.p231 = contains_pattern(w, q231);
  return f;
}

inline ClassificationRecord make_record(const Permutation& w, const IntPolynomial& S, bool with_sem) {
  ClassificationRecord rec;
  rec.w = w;
  rec.code = lehmer_code(w);
  rec.patterns = pattern_flags(w);
  rec.code_nonincreasing = rec.code.nonincreasing();
  rec.rules_ok = lehmer_rules_check(rec.code).all_ok();
  rec.clearance = diagonal_clearance(bottom_pipe_dream(w));
  rec.is_monomial = S.term_count() == 1;
  rec.is_chm = equals_chm_product(S, ChmVector{rec.code.entries});
  if (with_sem) {
    rec.sem_checked = true;
    const SemExpansion e = sem_expand(S, w.size());
    rec.sem_terms = static_cast<std::int64_t>(e.terms.size());
    rec.is_sem = e.terms.size() == 1 && e.terms.begin()->second == 1;
    rec.sem_nonneg = std::all_of(e.terms.begin(), e.terms.end(),
                                 [](const auto& t) { return t.second > 0; });
  }
  return rec;
}

}  // namespace detail

inline ClassificationRecord classify(const Permutation& w) {
  return detail::make_record(w, schubert_divdiff(w), true);
}

// --- enumerative helpers ----------------------------------------------------

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

inline BigInt catalan_number(int n) { return binomial(2 * n, n) / (n + 1); }

// Fibonacci with F_1 = F_2 = 1, extended backwards: F_0 = 0, F_{-1} = 1.
inline BigInt fibonacci(int m) {
  if (m < -1) throw std::invalid_argument("fibonacci index must be >= -1");
  BigInt a = 1, b = 0;  // F_{-1}, F_0
  for (int i = 0; i < m; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return m == -1 ? a : b;
}

// --- scan configuration and report -------------------------------------------

struct ScanConfig {
  int n_max = 7;
  int sem_max = 6;  // SEM expansions are solver-backed; cap their exhaustive range
  bool run_theorems = true;
  bool run_counts = true;
  bool run_conjecture = true;
  int jobs = 1;
  std::string cache_dir;     // empty: no on-disk cache
  std::string report_path;   // empty: do not write the report file
};

inline constexpr std::size_t kMaxStoredCounterexamples = 20;

struct TheoremOutcome {
  std::string name;
  bool checked = true;
  bool pass = true;
  std::uint64_t counterexample_count = 0;
  std::vector<Permutation> counterexamples;  // first few, rank order
};

struct TheoremScan {
  int n = 1;
  std::vector<TheoremOutcome> outcomes;

  bool all_pass() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.pass; });
  }
};

struct CountRow {
  int n = 1;
  std::uint64_t monomial_count = 0;  // avoids 132
  std::uint64_t sem_count = 0;       // avoids 312 and 1432
  std::uint64_t chm_count = 0;       // avoids 321 and 231
  BigInt catalan;
  bool catalan_ok = false;
  int fibonacci_index = -1;  // smallest index matching sem_count, -1 if none
  BigInt fibonacci_value;
  bool fibonacci_ok = false;  // matches F_{2n-1}
  BigInt power_of_two;
  bool power_ok = false;
  BigInt remark_sum;  // sum_k C(n,k) F_{n-k-1}
  bool remark_ok = false;

  bool all_ok() const { return catalan_ok && fibonacci_ok && power_ok && remark_ok; }
};

struct ConjectureScan {
  int n = 1;
  bool checked = false;
  std::uint64_t single_sem = 0;
  std::uint64_t nonnegative = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Permutation> counterexamples;
};

struct ScanReport {
  ScanConfig config;
  std::vector<TheoremScan> theorems;
  std::vector<CountRow> counts;
  std::vector<ConjectureScan> conjecture;
  std::vector<std::string> assumptions;
  std::map<std::string, std::int64_t> timing_ms;

  bool theorems_pass() const {
    return std::all_of(theorems.begin(), theorems.end(), [](const auto& t) { return t.all_pass(); });
  }
  bool counts_pass() const {
    return std::all_of(counts.begin(), counts.end(), [](const auto& r) { return r.all_ok(); });
  }
  bool verification_ok() const { return theorems_pass() && counts_pass(); }
  std::uint64_t conjecture_counterexamples() const {
    std::uint64_t c = 0;
    for (const auto& s : conjecture) c += s.counterexample_count;
    return c;
  }
};

// --- Schubert polynomial cache ------------------------------------------------

namespace detail {

inline std::string cache_file_path(const std::string& dir, int n) {
  return (std::filesystem::path(dir) / ("schubert_n" + std::to_string(n) + ".json")).string();
}

inline void write_schubert_cache(const std::string& dir, int n,
                                 const std::vector<IntPolynomial>& table) {
  std::filesystem::create_directories(dir);
  Json polys = Json::array();
  for (const auto& p : table) polys.push_back(poly_to_json(p));
  Json file{{"format_version", 1},
            {"n", n},
            {"checksum", fnv1a_hex(polys.dump())},
            {"polys", std::move(polys)}};
  write_json_file(cache_file_path(dir, n), file);
}

inline std::optional<std::vector<IntPolynomial>> read_schubert_cache(const std::string& dir, int n) {
  const std::string path = cache_file_path(dir, n);
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    const Json file = read_json_file(path);
    if (file.at("format_version").get<int>() != 1) return std::nullopt;
    if (file.at("n").get<int>() != n) return std::nullopt;
    const Json& polys = file.at("polys");
    if (polys.size() != factorial(n)) return std::nullopt;
    if (file.at("checksum").get<std::string>() != fnv1a_hex(polys.dump())) return std::nullopt;
    std::vector<IntPolynomial> table;
    table.reserve(polys.size());
    for (const auto& p : polys) table.push_back(poly_from_json(p));
    return table;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable or malformed: treat as a miss and rebuild
  }
}

}  // namespace detail

inline std::vector<IntPolynomial> load_or_compute_schubert_table(int n, const std::string& cache_dir) {
  if (cache_dir.empty()) return compute_schubert_table(n);
  if (auto cached = detail::read_schubert_cache(cache_dir, n)) return std::move(*cached);
  std::vector<IntPolynomial> table = compute_schubert_table(n);
  detail::write_schubert_cache(cache_dir, n, table);
  return table;
}

// --- scans -------------------------------------------------------------------

namespace detail {

inline std::vector<ClassificationRecord> scan_records(int n, bool with_sem, int jobs,
                                                      const std::vector<IntPolynomial>& table) {
  const std::uint64_t total = factorial(n);
  std::vector<ClassificationRecord> records(total);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t r = lo; r < hi; ++r)
      records[r] = make_record(perm_unrank(n, r), table[r], with_sem);
  };
  jobs = std::max(1, jobs);
  if (jobs == 1 || total < 2 * static_cast<std::uint64_t>(jobs)) {
    work(0, total);
    return records;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < jobs; ++t) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(jobs);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(jobs);
    threads.emplace_back([&, lo, hi] {
      try {
        work(lo, hi);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
  return records;
}

inline void note_counterexample(TheoremOutcome& o, const Permutation& w) {
  o.pass = false;
  ++o.counterexample_count;
  if (o.counterexamples.size() < kMaxStoredCounterexamples) o.counterexamples.push_back(w);
}

inline TheoremScan theorem_scan_from_records(int n, const std::vector<ClassificationRecord>& records) {
  TheoremScan scan;
  scan.n = n;
  TheoremOutcome monomial{.name = "single_monomial_iff_avoids_132_iff_nonincreasing_code"};
  TheoremOutcome sem{.name = "single_sem_iff_avoids_312_1432_iff_lehmer_rules"};
  TheoremOutcome chm{.name = "single_chm_iff_avoids_321_231"};
  TheoremOutcome clearance{.name = "diagonal_clearance_iff_avoids_321_231"};
  TheoremOutcome rules{.name = "lehmer_rules_iff_avoids_312_1432"};
  sem.checked = !records.empty() && records.front().sem_checked;
  for (const auto& rec : records) {
    const bool sem_avoider = !rec.patterns.p312 && !rec.patterns.p1432;
    const bool chm_avoider = !rec.patterns.p321 && !rec.patterns.p231;
    if (rec.is_monomial != !rec.patterns.p132 || rec.is_monomial != rec.code_nonincreasing)
      note_counterexample(monomial, rec.w);
    if (rec.sem_checked && (rec.is_sem != sem_avoider || rec.is_sem != rec.rules_ok))
      note_counterexample(sem, rec.w);
    if (rec.is_chm != chm_avoider) note_counterexample(chm, rec.w);
    if (rec.clearance != chm_avoider) note_counterexample(clearance, rec.w);
    if (rec.rules_ok != sem_avoider) note_counterexample(rules, rec.w);
  }
  scan.outcomes = {std::move(monomial), std::move(sem), std::move(chm), std::move(clearance),
                   std::move(rules)};
  return scan;
}

}  // namespace detail

// Checks the characterization theorems over all of S_n. SEM flags are solver
// backed and only computed for n <= sem_max.
inline TheoremScan theorem_scan(int n, const ScanConfig& config = {}) {
  const std::vector<IntPolynomial> table = load_or_compute_schubert_table(n, config.cache_dir);
  const auto records = detail::scan_records(n, n <= config.sem_max, config.jobs, table);
  return detail::theorem_scan_from_records(n, records);
}

// Counts avoiders by pattern search alone (no polynomials) and compares with
// the closed forms: Catalan, Fibonacci (odd-indexed), powers of two, and the
// binomial-Fibonacci identity for the SEM count.
inline CountRow count_scan(int n) {
  CountRow row;
  row.n = n;
  for_each_permutation(n, [&](const Permutation& w) {
    const PatternFlags f = detail::pattern_flags(w);
    if (!f.p132) ++row.monomial_count;
    if (!f.p312 && !f.p1432) ++row.sem_count;
    if (!f.p321 && !f.p231) ++row.chm_count;
  });
  row.catalan = catalan_number(n);
  row.catalan_ok = row.catalan == row.monomial_count;
  row.fibonacci_value = fibonacci(2 * n - 1);
  row.fibonacci_ok = row.fibonacci_value == row.sem_count;
  row.fibonacci_index = -1;
  for (int m = 1; m <= 2 * n + 2; ++m)
    if (fibonacci(m) == row.sem_count) {
      row.fibonacci_index = m;
      break;
    }
  row.power_of_two = BigInt(1) << (n - 1);
  row.power_ok = row.power_of_two == row.chm_count;
  row.remark_sum = 0;
  for (int k = 0; k <= n; ++k) row.remark_sum += binomial(n, k) * fibonacci(n - k - 1);
  row.remark_ok = row.remark_sum == row.sem_count;
  return row;
}

namespace detail {

inline ConjectureScan conjecture_scan_from_records(int n,
                                                   const std::vector<ClassificationRecord>& records) {
  ConjectureScan scan;
  scan.n = n;
  scan.checked = !records.empty() && records.front().sem_checked;
  if (!scan.checked) return scan;
  for (const auto& rec : records) {
    if (rec.is_sem) ++scan.single_sem;
    if (rec.sem_nonneg) ++scan.nonnegative;
    if (rec.sem_nonneg && !rec.is_sem) {
      ++scan.counterexample_count;
      if (scan.counterexamples.size() < kMaxStoredCounterexamples)
        scan.counterexamples.push_back(rec.w);
    }
  }
  return scan;
}

}  // namespace detail

// Scans S_n for Schubert polynomials whose SEM expansion is nonnegative
// without being a single product. Findings are reported, never asserted.
inline ConjectureScan conjecture_scan(int n, const ScanConfig& config = {}) {
  if (n > config.sem_max) {
    ConjectureScan scan;
    scan.n = n;
    return scan;
  }
  const std::vector<IntPolynomial> table = load_or_compute_schubert_table(n, config.cache_dir);
  const auto records = detail::scan_records(n, true, config.jobs, table);
  return detail::conjecture_scan_from_records(n, records);
}

inline Json scan_report_to_json(const ScanReport& report) {
  Json theorems_json{{"sem_max", report.config.sem_max},
                     {"all_pass", report.theorems_pass()},
                     {"per_n", Json::array()}};
  for (const auto& scan : report.theorems) {
    Json results = Json::array();
    for (const auto& o : scan.outcomes) {
      Json samples = Json::array();
      for (const auto& w : o.counterexamples) samples.push_back(perm_to_json(w));
      results.push_back(Json{{"name", o.name},
                             {"checked", o.checked},
                             {"pass", o.pass},
                             {"counterexample_count", o.counterexample_count},
                             {"counterexamples", std::move(samples)}});
    }
    theorems_json["per_n"].push_back(Json{{"n", scan.n}, {"results", std::move(results)}});
  }

  Json count_rows = Json::array();
  for (const auto& r : report.counts)
    count_rows.push_back(Json{{"n", r.n},
                              {"monomial", r.monomial_count},
                              {"sem", r.sem_count},
                              {"chm", r.chm_count},
                              {"catalan", r.catalan.str()},
                              {"catalan_ok", r.catalan_ok},
                              {"fibonacci_index", r.fibonacci_index},
                              {"fibonacci_value", r.fibonacci_value.str()},
                              {"fibonacci_ok", r.fibonacci_ok},
                              {"power_of_two", r.power_of_two.str()},
                              {"power_ok", r.power_ok},
                              {"remark_sum", r.remark_sum.str()},
                              {"remark_ok", r.remark_ok}});
  Json counts_json{
      {"rows", std::move(count_rows)},
      {"fibonacci_convention",
       "F_1 = F_2 = 1 extended by F_0 = 0 and F_-1 = 1; the SEM avoider count in S_n lands at "
       "index 2n-1 under this convention"}};

  Json conjecture_json{{"max_n", report.config.sem_max},
                       {"clean", report.conjecture_counterexamples() == 0},
                       {"per_n", Json::array()}};
  for (const auto& scan : report.conjecture) {
    Json samples = Json::array();
    for (const auto& w : scan.counterexamples) samples.push_back(perm_to_json(w));
    conjecture_json["per_n"].push_back(Json{{"n", scan.n},
                                            {"checked", scan.checked},
                                            {"single_sem", scan.single_sem},
                                            {"nonnegative", scan.nonnegative},
                                            {"counterexample_count", scan.counterexample_count},
                                            {"counterexamples", std::move(samples)}});
  }

  Json timing = Json::object();
  for (const auto& [key, ms] : report.timing_ms) timing[key] = ms;

  return Json{{"n", report.config.n_max},
              {"theorems", std::move(theorems_json)},
              {"counts", std::move(counts_json)},
              {"conjecture", std::move(conjecture_json)},
              {"assumptions", report.assumptions},
              {"timing_ms", std::move(timing)}};
}

// Full verification pass: theorems, counts, and the conjecture scan for
// n = 1..n_max, sharing one polynomial table per n. Writes the report when
// config.report_path is set.
inline ScanReport run_suite(const ScanConfig& config) {
  if (config.n_max < 1) throw std::invalid_argument("scan needs n_max >= 1");
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  auto ms_since = [](Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  };

  ScanReport report;
  report.config = config;
  report.assumptions = {
      "Meander steps are U = (1,1), D = (1,-1), H = (1,0), reading the Lehmer code from its tail; "
      "a D step is never encoded as (-1,1).",
      "Fibonacci values use F_1 = F_2 = 1 with F_0 = 0 and F_-1 = 1; the matched index for the "
      "SEM avoider count is reported rather than fixed in advance.",
      "Monk covers are length covers (l(wt) = l(w) + 1) enumerated after embedding w into "
      "S_{n+1}, which always suffices.",
      "Bottom pipe dreams put the L_i(w) crossings of row i in columns 1..L_i; diagonal "
      "clearance walks up-right from each nonempty row under that row numbering (for 1427356 "
      "the crossed rows are 2 and 4)."};

  for (int n = 1; n <= config.n_max; ++n) {
    const bool need_records = config.run_theorems || (config.run_conjecture && n <= config.sem_max);
    if (need_records) {
      const auto t0 = Clock::now();
      const std::vector<IntPolynomial> table = load_or_compute_schubert_table(n, config.cache_dir);
      const auto records =
          detail::scan_records(n, n <= config.sem_max, config.jobs, table);
      report.timing_ms["records_n" + std::to_string(n)] = ms_since(t0);
      if (config.run_theorems) {
        report.theorems.push_back(detail::theorem_scan_from_records(n, records));
      }
      if (config.run_conjecture && n <= config.sem_max) {
        report.conjecture.push_back(detail::conjecture_scan_from_records(n, records));
      }
    }
    if (config.run_counts) {
      const auto t0 = Clock::now();
      report.counts.push_back(count_scan(n));
      report.timing_ms["counts_n" + std::to_string(n)] = ms_since(t0);
    }
  }
  report.timing_ms["total"] = ms_since(started);
  if (!config.report_path.empty()) write_json_file(config.report_path, scan_report_to_json(report));
  return report;
}

}  // namespace schub
