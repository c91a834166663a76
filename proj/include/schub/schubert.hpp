#pragma once

// Schubert polynomials by divided differences, cross-checked against the
// pipe dream construction, plus expansion of polynomials in the Schubert
// basis and Monk product verification.
//
// Base case: the longest element of S_n gets the staircase monomial
// x_1^{n-1} x_2^{n-2} ... x_{n-1}. Recursion: if i is an ascent of w then
// S_w = d_i(S_{w s_i}), where w s_i swaps positions i, i+1 and is one longer.
// The polynomial does not depend on trailing fixed points of w.

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schub/perm.hpp"
#include "schub/pipedream.hpp"
#include "schub/poly.hpp"

namespace schub {

inline IntPolynomial staircase_monomial(int n) {
  if (n < 1) throw std::invalid_argument("staircase requires n >= 1");
  std::vector<int> e;
  for (int i = 1; i < n; ++i) e.push_back(n - i);
  return IntPolynomial::monomial(ExponentVector(std::move(e)));
}

namespace detail {

// 0 if w is the longest element of its S_n.
inline int smallest_ascent(const Permutation& w) {
  for (int i = 1; i < w.size(); ++i)
    if (w(i) < w(i + 1)) return i;
  return 0;
}

}  // namespace detail

// Memoized on the trimmed one-line word, so embeddings that only add fixed
// points share one entry. Safe for concurrent callers.
inline IntPolynomial schubert_divdiff(const Permutation& w_in) {
  static std::map<std::vector<int>, IntPolynomial> cache;
  static std::mutex mutex;

  const Permutation w = w_in.trimmed();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(w.word()); it != cache.end()) return it->second;
  }

  // Climb ascents to a cached ancestor or the longest element, then unwind.
  std::vector<std::pair<Permutation, int>> chain;
  Permutation v = w;
  IntPolynomial poly;
  while (true) {
    {
      std::lock_guard lock(mutex);
      if (auto it = cache.find(v.word()); it != cache.end()) {
        poly = it->second;
        break;
      }
    }
    const int i = detail::smallest_ascent(v);
    if (i == 0) {
      poly = staircase_monomial(v.size());
      std::lock_guard lock(mutex);
      cache.emplace(v.word(), poly);
      break;
    }
    chain.emplace_back(v, i);
    v = transpose(v, i, i + 1);  // stays trimmed: an ascent never reaches a trailing fixed point
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    poly = divided_difference(poly, it->second);
    std::lock_guard lock(mutex);
    cache.emplace(it->first.word(), poly);
  }
  return poly;
}

// All of S_n indexed by perm_rank, computed by one sweep from the longest
// element downward (each step is a single divided difference). Independent
// of the memoized path; used by the scans and the on-disk cache.
inline std::vector<IntPolynomial> compute_schubert_table(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("table size out of range");
  const std::uint64_t total = factorial(n);
  std::vector<IntPolynomial> table(total);
  std::vector<std::uint64_t> order(total);
  std::vector<int> len(total);
  for (std::uint64_t r = 0; r < total; ++r) {
    order[r] = r;
    len[r] = static_cast<int>(lehmer_code(perm_unrank(n, r)).sum());
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t a, std::uint64_t b) { return len[a] > len[b]; });
  for (std::uint64_t r : order) {
    const Permutation w = perm_unrank(n, r);
    const int i = detail::smallest_ascent(w);
    if (i == 0) {
      table[r] = staircase_monomial(n);
    } else {
      const Permutation u = transpose(w, i, i + 1);  // one longer, already done
      table[r] = divided_difference(table[perm_rank(u)], i);
    }
  }
  return table;
}

enum class SchubertMethod { divdiff, pipedream, checked };

struct CrossMethodMismatch : std::logic_error {
  CrossMethodMismatch(Permutation w_, IntPolynomial dd, IntPolynomial pd)
      : std::logic_error("Schubert constructions disagree"),
        w(std::move(w_)),
        by_divdiff(std::move(dd)),
        by_pipedreams(std::move(pd)) {}
  Permutation w;
  IntPolynomial by_divdiff, by_pipedreams;
};

inline IntPolynomial schubert_poly(const Permutation& w, SchubertMethod method = SchubertMethod::divdiff) {
  switch (method) {
    case SchubertMethod::divdiff:
      return schubert_divdiff(w);
    case SchubertMethod::pipedream:
      return schubert_from_pipedreams(w);
    case SchubertMethod::checked: {
      IntPolynomial dd = schubert_divdiff(w);
      IntPolynomial pd = schubert_from_pipedreams(w);
      if (dd != pd) throw CrossMethodMismatch(w, std::move(dd), std::move(pd));
      return dd;
    }
  }
  throw std::logic_error("unreachable");
}

struct SchubertExpansion {
  int n = 1;
  std::map<Permutation, BigInt> terms;  // keys sorted by one-line word

  friend bool operator==(const SchubertExpansion&, const SchubertExpansion&) = default;
};

// Expand f in the Schubert basis of S_n by peeling leading monomials: the
// leading term of S_w is x^{L(w)} with coefficient 1, so subtracting
// coeff * S_{from_code(lead)} strictly decreases the leading term.
inline SchubertExpansion expand_schubert_basis(const IntPolynomial& f, int n) {
  if (n < 1) throw std::invalid_argument("ambient size must be >= 1");
  for (const auto& [ev, c] : f.terms())
    for (int i = 1; i <= ev.max_var(); ++i)
      if (ev.exponent(i) > n - i)
        throw std::invalid_argument("monomial exceeds the staircase of S_" + std::to_string(n));
  SchubertExpansion result;
  result.n = n;
  IntPolynomial rest = f;
  while (!rest.is_zero()) {
    const auto [ev, c] = leading_monomial(rest);
    std::vector<int> code(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= ev.max_var(); ++i) code[static_cast<std::size_t>(i) - 1] = ev.exponent(i);
    const Permutation w = Permutation::from_code(LehmerCode(std::move(code)));
    rest -= c * schubert_divdiff(w);
    result.terms.emplace(w, c);
  }
  return result;
}

// Covers arising in the Monk product e^k_1 * S_w: transpositions (i1 i2)
// with i1 <= k < i2 that raise the length by one. Embedding into S_{n+1} is
// always enough: any i2 beyond n+1 would need a value between w(i1) and
// w(i2) = i2, but n+1 sits there already.
inline std::vector<Permutation> monk_products(const Permutation& w, int k) {
  const int n = w.size();
  if (k < 1 || k >= n) throw std::invalid_argument("Monk index must satisfy 1 <= k < n");
  const Permutation u = w.embedded(n + 1);
  std::vector<Permutation> result;
  for (int i1 = 1; i1 <= k; ++i1)
    for (int i2 = k + 1; i2 <= n + 1; ++i2)
      if (is_length_cover(u, i1, i2)) result.push_back(transpose(u, i1, i2).trimmed());
  std::sort(result.begin(), result.end());
  return result;
}

// Checks (x_1 + ... + x_k) * S_w == sum of S_v over the Monk covers,
// multiplicity-free with unit coefficients.
inline bool verify_monk(const Permutation& w, int k) {
  const int n = w.size();
  IntPolynomial e_k1;
  for (int i = 1; i <= k; ++i) e_k1 += IntPolynomial::variable(i);
  const SchubertExpansion expansion = expand_schubert_basis(e_k1 * schubert_divdiff(w), n + 1);
  std::vector<Permutation> got;
  for (const auto& [v, c] : expansion.terms) {
    if (c != 1) return false;
    got.push_back(v.trimmed());
  }
  std::sort(got.begin(), got.end());
  return got == monk_products(w, k);
}

}  // namespace schub
