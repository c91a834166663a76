#pragma once

// Permutations in one-line notation, Lehmer codes, pattern containment,
// and the code-shape machinery (rules, Motzkin paths) used by the scans.
//
// Conventions used throughout:
//   - positions and values are 1-based; w(i) is the value at position i
//   - the Lehmer code is L_i = #{ j > i : w(j) < w(i) }, so L_i <= n-i and L_n = 0
//   - i is a descent of w iff w(i) > w(i+1) iff L_i > L_{i+1}

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace schub {

struct LehmerCode {
  std::vector<int> entries;  // entries[i-1] = L_i

  LehmerCode() = default;
  explicit LehmerCode(std::vector<int> e) : entries(std::move(e)) {
    for (int v : entries)
      if (v < 0) throw std::invalid_argument("Lehmer code entries must be nonnegative");
  }

  int size() const { return static_cast<int>(entries.size()); }
  int at(int i) const { return entries.at(static_cast<std::size_t>(i) - 1); }  // 1-based
  int sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }

  bool nonincreasing() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (entries[i - 1] < entries[i]) return false;
    return true;
  }

  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;
};

class Permutation {
 public:
  Permutation() : word_{1} {}

  static Permutation identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w), unchecked{});
  }

  static Permutation from_word(std::vector<int> word) {
    const int n = static_cast<int>(word.size());
    if (n < 1) throw std::invalid_argument("permutation word is empty");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      const int v = word[static_cast<std::size_t>(i)];
      if (v < 1 || v > n)
        throw std::invalid_argument("word entry " + std::to_string(v) + " at position " +
                                    std::to_string(i + 1) + " is out of range 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("word repeats value " + std::to_string(v) + " at position " +
                                    std::to_string(i + 1));
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    return Permutation(std::move(word), unchecked{});
  }

  // Inverse of lehmer_code: w(i) is the (L_i + 1)-th smallest value not yet used.
  static Permutation from_code(const LehmerCode& code) {
    const int n = code.size();
    if (n < 1) throw std::invalid_argument("Lehmer code is empty");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int li = code.entries[static_cast<std::size_t>(i)];
      if (li < 0 || li > n - i - 1)
        throw std::invalid_argument("code entry " + std::to_string(li) + " at position " +
                                    std::to_string(i + 1) + " exceeds " + std::to_string(n - i - 1));
      word.push_back(pool[static_cast<std::size_t>(li)]);
      pool.erase(pool.begin() + li);
    }
    return Permutation(std::move(word), unchecked{});
  }

  int size() const { return static_cast<int>(word_.size()); }

  int operator()(int pos) const {
    assert(pos >= 1 && pos <= size());
    return word_[static_cast<std::size_t>(pos) - 1];
  }

  const std::vector<int>& word() const { return word_; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  int length() const {  // inversion count
    int inv = 0;
    const int n = size();
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
  }

  // Pad with fixed points up to size m.
  Permutation embedded(int m) const {
    if (m < size()) throw std::invalid_argument("cannot embed into a smaller symmetric group");
    std::vector<int> w = word_;
    for (int v = size() + 1; v <= m; ++v) w.push_back(v);
    return Permutation(std::move(w), unchecked{});
  }

  // Drop trailing fixed points (never below size 1).
  Permutation trimmed() const {
    std::vector<int> w = word_;
    while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
    return Permutation(std::move(w), unchecked{});
  }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv), unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;  // one-line words, lexicographic
  }

 private:
  struct unchecked {};
  Permutation(std::vector<int> w, unchecked) : word_(std::move(w)) {}

  std::vector<int> word_;
};

inline LehmerCode lehmer_code(const Permutation& w) {
  const int n = w.size();
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int c = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++c;
    code[static_cast<std::size_t>(i) - 1] = c;
  }
  return LehmerCode(std::move(code));
}

inline std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

namespace detail {

// Backtracking search for an order-isomorphic subsequence. chosen holds the
// positions (1-based) selected for pattern slots 1..depth.
inline bool pattern_dfs(const Permutation& w, const Permutation& p, std::vector<int>& chosen) {
  const int k = p.size();
  const int depth = static_cast<int>(chosen.size());
  if (depth == k) return true;
  const int start = chosen.empty() ? 1 : chosen.back() + 1;
  // Enough positions must remain for the rest of the pattern.
  for (int pos = start; pos <= w.size() - (k - depth - 1); ++pos) {
    bool ok = true;
    for (int t = 0; t < depth; ++t) {
      const bool w_gt = w(pos) > w(chosen[static_cast<std::size_t>(t)]);
      const bool p_gt = p(depth + 1) > p(t + 1);
      if (w_gt != p_gt) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(pos);
    if (pattern_dfs(w, p, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(p.size()));
  return detail::pattern_dfs(w, p, chosen);
}

// Shape conditions on a Lehmer code (checked on raw entries, which need not
// form a valid code):
//   rule 1: L_i - L_{i+1} <= 1        (no drop by 2 or more)
//   rule 2: L_{i+1} - L_i <= 1        (no rise by 2 or more)
//   rule 3: between any two strict rises there is a strict fall
// A permutation satisfies all three iff it avoids both 312 and 1432.
struct RuleReport {
  bool rule1_ok = true;
  bool rule2_ok = true;
  bool rule3_ok = true;
  std::vector<std::pair<int, int>> violations;  // (rule, position of the offending step)

  bool all_ok() const { return rule1_ok && rule2_ok && rule3_ok; }
};

inline RuleReport lehmer_rules_check(const LehmerCode& code) {
  RuleReport r;
  const auto& L = code.entries;
  const int n = code.size();
  for (int i = 0; i + 1 < n; ++i) {
    const int step = L[static_cast<std::size_t>(i + 1)] - L[static_cast<std::size_t>(i)];
    if (step < -1) {
      r.rule1_ok = false;
      r.violations.emplace_back(1, i + 1);
    }
    if (step > 1) {
      r.rule2_ok = false;
      r.violations.emplace_back(2, i + 1);
    }
  }
  int last_rise = -1;  // position i (1-based) of the most recent strict rise
  for (int i = 0; i + 1 < n; ++i) {
    const int step = L[static_cast<std::size_t>(i + 1)] - L[static_cast<std::size_t>(i)];
    if (step > 0) {
      if (last_rise >= 0) {
        bool fall_between = false;
        for (int k = last_rise; k < i; ++k)
          if (L[static_cast<std::size_t>(k + 1)] < L[static_cast<std::size_t>(k)]) {
            fall_between = true;
            break;
          }
        if (!fall_between) {
          r.rule3_ok = false;
          r.violations.emplace_back(3, i + 1);
        }
      }
      last_rise = i + 1;
    }
  }
  return r;
}

inline Permutation transpose(const Permutation& w, int i1, int i2) {
  if (i1 < 1 || i2 > w.size() || i1 >= i2)
    throw std::invalid_argument("transposition positions out of range");
  std::vector<int> word = w.word();
  std::swap(word[static_cast<std::size_t>(i1) - 1], word[static_cast<std::size_t>(i2) - 1]);
  return Permutation::from_word(std::move(word));
}

// w -> w.(i1 i2) is a cover in Bruhat order, i.e. the length goes up by
// exactly one: w(i1) < w(i2) with no intermediate value strictly between.
inline bool is_length_cover(const Permutation& w, int i1, int i2) {
  if (i1 < 1 || i2 > w.size() || i1 >= i2)
    throw std::invalid_argument("transposition positions out of range");
  if (w(i1) >= w(i2)) return false;
  for (int j = i1 + 1; j < i2; ++j)
    if (w(i1) < w(j) && w(j) < w(i2)) return false;
  return true;
}

// Lattice path read off the code tail-first: vertex t has height L_{n-t},
// t = 0..n-1. Steps: U = (1,1), D = (1,-1), H = (1,0). A step of |delta| > 1
// is not representable and signals a rules violation.
struct MeanderPath {
  std::vector<int> heights;
  std::vector<char> steps;             // 'U', 'D', 'H'
  bool is_meander = false;             // starts at height 0, never dips below 0
  bool d_separated = false;            // every two D steps have a U between them
};

inline MeanderPath motzkin_path(const LehmerCode& code) {
  const int n = code.size();
  if (n < 1) throw std::invalid_argument("Lehmer code is empty");
  MeanderPath path;
  path.heights.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) path.heights.push_back(code.entries[static_cast<std::size_t>(n - 1 - t)]);
  for (int t = 0; t + 1 < n; ++t) {
    const int delta = path.heights[static_cast<std::size_t>(t + 1)] - path.heights[static_cast<std::size_t>(t)];
    if (delta > 1 || delta < -1)
      throw std::invalid_argument("height step of " + std::to_string(delta) + " at vertex " +
                                  std::to_string(t) + " is not a Motzkin step");
    path.steps.push_back(delta == 1 ? 'U' : delta == -1 ? 'D' : 'H');
  }
  path.is_meander = path.heights.front() == 0 &&
                    std::all_of(path.heights.begin(), path.heights.end(), [](int h) { return h >= 0; });
  path.d_separated = true;
  bool after_d = false;
  for (char s : path.steps) {
    if (s == 'D') {
      if (after_d) path.d_separated = false;
      after_d = true;
    } else if (s == 'U') {
      after_d = false;
    }
  }
  return path;
}

// --- enumeration helpers ---------------------------------------------------

inline std::uint64_t factorial(int n) {
  assert(n >= 0 && n <= 20);
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Rank in lexicographic order of one-line words: sum L_i * (n-i)!.
inline std::uint64_t perm_rank(const Permutation& w) {
  const LehmerCode code = lehmer_code(w);
  const int n = w.size();
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) r += static_cast<std::uint64_t>(code.at(i)) * factorial(n - i);
  return r;
}

inline Permutation perm_unrank(int n, std::uint64_t rank) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  if (rank >= factorial(n)) throw std::invalid_argument("rank out of range");
  std::vector<int> code(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t f = factorial(n - i);
    code[static_cast<std::size_t>(i) - 1] = static_cast<int>(rank / f);
    rank %= f;
  }
  return Permutation::from_code(LehmerCode(std::move(code)));
}

// Visits S_n in lexicographic word order (= rank order).
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    f(Permutation::from_word(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace schub
