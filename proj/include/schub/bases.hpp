#pragma once

// Products of elementary and complete homogeneous symmetric polynomials in
// leading subsets of the variables:
//
//   e^i_j = elementary symmetric of degree j in x_1..x_i
//   h^i_j = complete homogeneous of degree j in x_1..x_i
//
// The products e_a = prod_i e^i_{a_i} over vectors with 0 <= a_i <= i,
// i = 1..n-1, form a basis (the SEM basis) of the span H_n of the staircase
// monomials (exponent of x_i at most n-i). sem_expand writes a polynomial in
// that basis by solving the exact linear system per (n, degree); solutions
// for polynomials with integer coefficients come out integral here.
//
// constructive_sem builds, straight from a Lehmer code satisfying the shape
// rules, the SEM vector whose product is the Schubert polynomial: peel off
// maximal runs of unit rises as outer columns (a run of length m ending at
// row i gives the factor e^i_m), leaving a dominant core whose strict
// descents i contribute e^i_i.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schub/perm.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"

namespace schub {

using BigRational = boost::multiprecision::cpp_rational;

inline IntPolynomial elementary_poly(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("elementary_poly needs i, j >= 0");
  if (j == 0) return IntPolynomial::constant(1);
  if (j > i) return IntPolynomial{};
  IntPolynomial p;
  std::vector<int> pick(static_cast<std::size_t>(j));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {  // j-subsets of {1..i} in lexicographic order
    std::vector<int> e(static_cast<std::size_t>(pick.back()), 0);
    for (int v : pick) e[static_cast<std::size_t>(v) - 1] = 1;
    p.add_term(ExponentVector(std::move(e)), 1);
    int t = j - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] == i - (j - 1 - t)) --t;
    if (t < 0) break;
    ++pick[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < j; ++s)
      pick[static_cast<std::size_t>(s)] = pick[static_cast<std::size_t>(s) - 1] + 1;
  }
  return p;
}

inline IntPolynomial homogeneous_poly(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("homogeneous_poly needs i, j >= 0");
  if (j == 0) return IntPolynomial::constant(1);
  if (i == 0) return IntPolynomial{};
  IntPolynomial p;
  std::vector<int> e(static_cast<std::size_t>(i), 0);
  e[0] = j;
  while (true) {  // compositions of j into i parts, first part decreasing
    p.add_term(ExponentVector(e), 1);
    int t = i - 2;
    while (t >= 0 && e[static_cast<std::size_t>(t)] == 0) --t;
    if (t < 0) break;
    const int tail = e[static_cast<std::size_t>(i) - 1];
    e[static_cast<std::size_t>(i) - 1] = 0;
    --e[static_cast<std::size_t>(t)];
    e[static_cast<std::size_t>(t) + 1] = tail + 1;
    for (int s = t + 2; s < i; ++s) {
      e[static_cast<std::size_t>(t) + 1] += e[static_cast<std::size_t>(s)];
      e[static_cast<std::size_t>(s)] = 0;
    }
  }
  return p;
}

// Exponent vector of a SEM product: a[i-1] = a_i = degree taken from e^i.
struct SemVector {
  std::vector<int> a;

  SemVector() = default;
  explicit SemVector(std::vector<int> v) : a(std::move(v)) {
    for (int x : a)
      if (x < 0) throw std::invalid_argument("SEM entries must be nonnegative");
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  int entry(int i) const {  // 1-based, 0 beyond
    return i <= static_cast<int>(a.size()) ? a[static_cast<std::size_t>(i) - 1] : 0;
  }
  int degree() const {
    int d = 0;
    for (int x : a) d += x;
    return d;
  }

  friend bool operator==(const SemVector&, const SemVector&) = default;
  friend std::strong_ordering operator<=>(const SemVector& x, const SemVector& y) {
    return x.a <=> y.a;
  }
};

struct ChmVector {
  std::vector<int> a;

  ChmVector() = default;
  explicit ChmVector(std::vector<int> v) : a(std::move(v)) {
    for (int x : a)
      if (x < 0) throw std::invalid_argument("CHM entries must be nonnegative");
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  int entry(int i) const {
    return i <= static_cast<int>(a.size()) ? a[static_cast<std::size_t>(i) - 1] : 0;
  }
  int degree() const {
    int d = 0;
    for (int x : a) d += x;
    return d;
  }

  friend bool operator==(const ChmVector&, const ChmVector&) = default;
  friend std::strong_ordering operator<=>(const ChmVector& x, const ChmVector& y) {
    return x.a <=> y.a;
  }
};

inline IntPolynomial sem_product(const SemVector& a) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int i = 1; i <= static_cast<int>(a.a.size()); ++i)
    if (a.entry(i) > 0) p = p * elementary_poly(i, a.entry(i));
  return p;
}

inline IntPolynomial chm_product(const ChmVector& a) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int i = 1; i <= static_cast<int>(a.a.size()); ++i)
    if (a.entry(i) > 0) p = p * homogeneous_poly(i, a.entry(i));
  return p;
}

// SEM basis vectors of H_n in a fixed degree: 0 <= a_i <= i for i <= n-1,
// sum = degree; listed lexicographically.
inline std::vector<SemVector> sem_basis_vectors(int n, int degree) {
  std::vector<SemVector> out;
  std::vector<int> a(static_cast<std::size_t>(n - 1), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i > n - 1) {
      if (left == 0) out.emplace_back(SemVector(a));
      return;
    }
    const int hi = std::min(i, left);
    for (int v = 0; v <= hi; ++v) {
      a[static_cast<std::size_t>(i) - 1] = v;
      self(self, i + 1, left - v);
    }
    a[static_cast<std::size_t>(i) - 1] = 0;
  };
  if (n >= 1 && degree >= 0) rec(rec, 1, degree);
  return out;
}

// Staircase monomials of S_n in a fixed degree (exponent of x_i <= n-i),
// listed in increasing term order.
inline std::vector<ExponentVector> staircase_monomials(int n, int degree) {
  std::vector<ExponentVector> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i > n) {
      if (left == 0) out.emplace_back(ExponentVector(e));
      return;
    }
    const int hi = std::min(n - i, left);
    for (int v = 0; v <= hi; ++v) {
      e[static_cast<std::size_t>(i) - 1] = v;
      self(self, i + 1, left - v);
    }
    e[static_cast<std::size_t>(i) - 1] = 0;
  };
  if (n >= 1 && degree >= 0) rec(rec, 1, degree);
  std::sort(out.begin(), out.end(), TermOrder{});
  return out;
}

// The change-of-basis system between SEM products and staircase monomials of
// one degree, LU-factored once over the rationals and cached per (n, degree).
// The system is square and of full rank.
class SemSystem {
 public:
  static const SemSystem& get(int n, int degree) {
    static std::map<std::pair<int, int>, std::unique_ptr<SemSystem>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, degree}];
    if (!slot) slot.reset(new SemSystem(n, degree));
    return *slot;
  }

  int dimension() const { return dim_; }
  const std::vector<SemVector>& basis() const { return basis_; }
  const std::vector<ExponentVector>& monomials() const { return monomials_; }
  const IntPolynomial& basis_product(int col) const {
    return products_[static_cast<std::size_t>(col)];
  }

  // Coefficients of f on the SEM basis vectors, in basis() order. f must be
  // homogeneous of this degree and lie in the staircase span.
  std::vector<BigInt> solve(const IntPolynomial& f) const {
    std::vector<BigRational> b(static_cast<std::size_t>(dim_), BigRational(0));
    for (const auto& [ev, c] : f.terms()) {
      auto it = row_of_.find(ev);
      if (it == row_of_.end())
        throw std::invalid_argument("polynomial has a monomial outside the staircase span");
      b[static_cast<std::size_t>(it->second)] = BigRational(c);
    }
    // Permuted forward substitution, then back substitution.
    std::vector<BigRational> y(static_cast<std::size_t>(dim_));
    for (int r = 0; r < dim_; ++r) {
      BigRational s = b[static_cast<std::size_t>(pivot_[static_cast<std::size_t>(r)])];
      for (int c = 0; c < r; ++c)
        s -= lu(r, c) * y[static_cast<std::size_t>(c)];
      y[static_cast<std::size_t>(r)] = std::move(s);
    }
    std::vector<BigRational> x(static_cast<std::size_t>(dim_));
    for (int r = dim_ - 1; r >= 0; --r) {
      BigRational s = y[static_cast<std::size_t>(r)];
      for (int c = r + 1; c < dim_; ++c)
        s -= lu(r, c) * x[static_cast<std::size_t>(c)];
      x[static_cast<std::size_t>(r)] = s / lu(r, r);
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(dim_));
    for (int c = 0; c < dim_; ++c) {
      const BigRational& v = x[static_cast<std::size_t>(c)];
      if (denominator(v) != 1)
        throw std::logic_error("SEM expansion of an integer polynomial came out non-integral");
      coeffs[static_cast<std::size_t>(c)] = numerator(v);
    }
    return coeffs;
  }

 private:
  SemSystem(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1 || degree < 0) throw std::invalid_argument("bad SEM system parameters");
    basis_ = sem_basis_vectors(n, degree);
    monomials_ = staircase_monomials(n, degree);
    if (basis_.size() != monomials_.size())
      throw std::logic_error("SEM basis and staircase monomial counts disagree");
    dim_ = static_cast<int>(basis_.size());
    for (int r = 0; r < dim_; ++r) row_of_.emplace(monomials_[static_cast<std::size_t>(r)], r);

    lu_.assign(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_), BigRational(0));
    products_.reserve(basis_.size());
    for (int c = 0; c < dim_; ++c) {
      products_.push_back(sem_product(basis_[static_cast<std::size_t>(c)]));
      for (const auto& [ev, coeff] : products_.back().terms())
        lu(row_of_.at(ev), c) = BigRational(coeff);
    }

    // In-place LU with row pivoting (first nonzero entry; exact arithmetic
    // needs no magnitude heuristics). Full rank is a theorem; enforce it.
    pivot_.resize(static_cast<std::size_t>(dim_));
    std::vector<int> rowperm(static_cast<std::size_t>(dim_));
    std::iota(rowperm.begin(), rowperm.end(), 0);
    std::vector<BigRational> a = lu_;
    auto at = [&](int r, int c) -> BigRational& {
      return a[static_cast<std::size_t>(rowperm[static_cast<std::size_t>(r)]) *
                   static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(c)];
    };
    for (int k = 0; k < dim_; ++k) {
      int p = k;
      while (p < dim_ && at(p, k) == 0) ++p;
      if (p == dim_) throw std::logic_error("SEM change-of-basis matrix is singular");
      std::swap(rowperm[static_cast<std::size_t>(k)], rowperm[static_cast<std::size_t>(p)]);
      for (int r = k + 1; r < dim_; ++r) {
        BigRational m = at(r, k) / at(k, k);
        at(r, k) = m;
        if (m == 0) continue;
        for (int c = k + 1; c < dim_; ++c) at(r, c) -= m * at(k, c);
      }
    }
    for (int r = 0; r < dim_; ++r) {
      pivot_[static_cast<std::size_t>(r)] = rowperm[static_cast<std::size_t>(r)];
      for (int c = 0; c < dim_; ++c) lu(r, c) = at(r, c);
    }
  }

  BigRational& lu(int r, int c) {
    return lu_[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(c)];
  }
  const BigRational& lu(int r, int c) const {
    return lu_[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(c)];
  }

  int n_, degree_, dim_ = 0;
  std::vector<SemVector> basis_;
  std::vector<ExponentVector> monomials_;
  std::map<ExponentVector, int, TermOrder> row_of_;
  std::vector<IntPolynomial> products_;
  std::vector<BigRational> lu_;  // L below the diagonal, U on and above
  std::vector<int> pivot_;       // original row for permuted row r
};

struct SemExpansion {
  int n = 1;
  int degree = 0;
  std::map<SemVector, BigInt> terms;

  friend bool operator==(const SemExpansion&, const SemExpansion&) = default;
};

inline SemExpansion sem_expand(const IntPolynomial& f, int n) {
  if (n < 1) throw std::invalid_argument("ambient size must be >= 1");
  SemExpansion out;
  out.n = n;
  if (f.is_zero()) return out;
  const auto deg = f.homogeneous_degree();
  if (!deg) throw std::invalid_argument("sem_expand needs a homogeneous polynomial");
  out.degree = *deg;
  const SemSystem& sys = SemSystem::get(n, *deg);
  const std::vector<BigInt> coeffs = sys.solve(f);
  IntPolynomial check;
  for (int c = 0; c < sys.dimension(); ++c) {
    if (coeffs[static_cast<std::size_t>(c)] == 0) continue;
    out.terms.emplace(sys.basis()[static_cast<std::size_t>(c)], coeffs[static_cast<std::size_t>(c)]);
    check += coeffs[static_cast<std::size_t>(c)] * sys.basis_product(c);
  }
  if (check != f) throw std::logic_error("SEM expansion failed to reconstruct its input");
  return out;
}

// Direct SEM factorization from the Lehmer code, no linear algebra. Requires
// the shape rules to hold.
inline SemVector constructive_sem(const Permutation& w) {
  const LehmerCode code = lehmer_code(w);
  if (!lehmer_rules_check(code).all_ok())
    throw std::invalid_argument("constructive SEM needs a Lehmer code satisfying the shape rules");
  const int n = w.size();
  const auto& L = code.entries;

  // Column membership: row i sits in an outer column iff delta[i] = 1.
  std::vector<int> delta(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    const int prev = L[static_cast<std::size_t>(i) - 1], cur = L[static_cast<std::size_t>(i)];
    if (cur > prev)
      delta[static_cast<std::size_t>(i)] = 1;
    else if (cur == prev)
      delta[static_cast<std::size_t>(i)] = delta[static_cast<std::size_t>(i) - 1];
    else
      delta[static_cast<std::size_t>(i)] = 0;
  }

  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> core(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) core[static_cast<std::size_t>(i)] = L[static_cast<std::size_t>(i)] - delta[static_cast<std::size_t>(i)];

  // Maximal delta-runs: a run of length m ending at row i contributes e^i_m.
  for (int i = 0; i < n;) {
    if (delta[static_cast<std::size_t>(i)] == 0) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n && delta[static_cast<std::size_t>(j) + 1] == 1) ++j;
    a[static_cast<std::size_t>(j)] = j - i + 1;
    i = j + 1;
  }

  // The core must be dominant with unit drops; its strict descents i give e^i_i.
  for (int i = 0; i + 1 < n; ++i) {
    const int step = core[static_cast<std::size_t>(i)] - core[static_cast<std::size_t>(i + 1)];
    if (step < 0 || step > 1 || core[static_cast<std::size_t>(i)] < 0)
      throw std::logic_error("constructive SEM produced a non-dominant core");
    if (step == 1) {
      if (a[static_cast<std::size_t>(i)] != 0)
        throw std::logic_error("constructive SEM produced overlapping factors");
      a[static_cast<std::size_t>(i)] = i + 1;
    }
  }
  return SemVector(std::move(a));
}

inline std::optional<ExponentVector> single_monomial_of(const Permutation& w) {
  const IntPolynomial s = schubert_divdiff(w);
  if (s.term_count() != 1) return std::nullopt;
  const auto [ev, c] = leading_monomial(s);
  if (c != 1) throw std::logic_error("single-term Schubert polynomial with coefficient != 1");
  return ev;
}

inline std::optional<SemVector> single_sem_of(const Permutation& w) {
  const SemExpansion e = sem_expand(schubert_divdiff(w), w.size());
  if (e.terms.size() != 1 || e.terms.begin()->second != 1) return std::nullopt;
  return e.terms.begin()->first;
}

namespace detail {

// Equality f == chm_product(a) without always building the full product:
// h-products have positive coefficients, so term counts only grow as factors
// are multiplied in; once the partial product outgrows f it can never match.
inline bool equals_chm_product(const IntPolynomial& f, const ChmVector& a) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int i = 1; i <= static_cast<int>(a.a.size()); ++i) {
    if (a.entry(i) == 0) continue;
    p = p * homogeneous_poly(i, a.entry(i));
    if (p.term_count() > f.term_count()) return false;
  }
  return p == f;
}

}  // namespace detail

// S_w is a product of h's exactly when h_{L(w)} works, so only that one
// candidate needs testing.
inline std::optional<ChmVector> single_chm_of(const Permutation& w) {
  const ChmVector candidate{lehmer_code(w).entries};
  if (detail::equals_chm_product(schubert_divdiff(w), candidate)) return candidate;
  return std::nullopt;
}

}  // namespace schub
