#pragma once

// Multivariate polynomials in x_1, x_2, ... with exact integer coefficients.
//
// The term order compares exponent vectors at the largest index where they
// differ (so x_2 > x_1, and x_1*x_3 > x_1^2*x_2). Under this order the
// leading monomial of a Schubert polynomial is x^{L(w)} with coefficient 1,
// which is what the basis-expansion peeling relies on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schub {

using BigInt = boost::multiprecision::cpp_int;

class ExponentVector {
 public:
  ExponentVector() = default;

  explicit ExponentVector(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
    trim();
  }

  static ExponentVector unit(int var) {
    assert(var >= 1);
    std::vector<int> e(static_cast<std::size_t>(var), 0);
    e.back() = 1;
    return ExponentVector(std::move(e));
  }

  // 1-based; 0 beyond the stored length.
  int exponent(int var) const {
    assert(var >= 1);
    return var <= max_var() ? e_[static_cast<std::size_t>(var) - 1] : 0;
  }

  int max_var() const { return static_cast<int>(e_.size()); }
  int degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
  }
  bool is_constant() const { return e_.empty(); }
  const std::vector<int>& exponents() const { return e_; }

  ExponentVector times(const ExponentVector& o) const {
    std::vector<int> e(static_cast<std::size_t>(std::max(max_var(), o.max_var())), 0);
    for (int i = 1; i <= static_cast<int>(e.size()); ++i)
      e[static_cast<std::size_t>(i) - 1] = exponent(i) + o.exponent(i);
    return ExponentVector(std::move(e));
  }

  // Exchange the exponents of x_i and x_{i+1}.
  ExponentVector swapped(int i) const {
    assert(i >= 1);
    std::vector<int> e(static_cast<std::size_t>(std::max(max_var(), i + 1)), 0);
    for (int v = 1; v <= static_cast<int>(e.size()); ++v) e[static_cast<std::size_t>(v) - 1] = exponent(v);
    std::swap(e[static_cast<std::size_t>(i) - 1], e[static_cast<std::size_t>(i)]);
    return ExponentVector(std::move(e));
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }

  std::vector<int> e_;  // e_[i-1] = exponent of x_i; no trailing zeros
};

struct TermOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    for (int i = std::max(a.max_var(), b.max_var()); i >= 1; --i) {
      const int ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea < eb;
    }
    return false;
  }
};

class IntPolynomial {
 public:
  using TermMap = std::map<ExponentVector, BigInt, TermOrder>;

  IntPolynomial() = default;

  static IntPolynomial constant(BigInt c) {
    IntPolynomial p;
    p.add_term(ExponentVector{}, std::move(c));
    return p;
  }

  static IntPolynomial monomial(ExponentVector ev, BigInt c = 1) {
    IntPolynomial p;
    p.add_term(std::move(ev), std::move(c));
    return p;
  }

  static IntPolynomial variable(int i) { return monomial(ExponentVector::unit(i)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  BigInt coefficient(const ExponentVector& ev) const {
    auto it = terms_.find(ev);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  // Degree shared by all terms, or nullopt for an inhomogeneous polynomial.
  // The zero polynomial reports degree 0.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    const int d = terms_.begin()->first.degree();
    for (const auto& [ev, c] : terms_)
      if (ev.degree() != d) return std::nullopt;
    return d;
  }

  void add_term(ExponentVector ev, BigInt c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(ev), std::move(c));
    if (!inserted) {
      it->second += c;  // c was not moved in this branch
      if (it->second == 0) terms_.erase(it);
    }
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    for (const auto& [ev, c] : o.terms_) add_term(ev, c);
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    for (const auto& [ev, c] : o.terms_) add_term(ev, -c);
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea.times(eb), ca * cb);
    return r;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const BigInt& c) {
    IntPolynomial r;
    if (c == 0) return r;
    for (const auto& [ev, cv] : a.terms_) r.terms_.emplace(ev, cv * c);
    return r;
  }
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& a) { return a * c; }

  friend IntPolynomial operator-(const IntPolynomial& a) { return a * BigInt(-1); }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  TermMap terms_;  // invariant: no zero coefficients
};

// Substitute x_i <-> x_{i+1}.
inline IntPolynomial swap_action(const IntPolynomial& f, int i) {
  if (i < 1) throw std::invalid_argument("swap index must be >= 1");
  IntPolynomial r;
  for (const auto& [ev, c] : f.terms()) r.add_term(ev.swapped(i), c);
  return r;
}

// Greatest term under TermOrder.
inline std::pair<ExponentVector, BigInt> leading_monomial(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  const auto& [ev, c] = *f.terms().rbegin();
  return {ev, c};
}

// Divided difference: (f - s_i f) / (x_i - x_{i+1}), computed by synthetic
// division. g = f - s_i f is antisymmetric in x_i, x_{i+1}, so its leading
// term always has exponent(i+1) >= exponent(i) + 1 > 0; peeling
// -c * x^{a - e_{i+1}} per step strictly decreases the leading term, and the
// remainder is exactly zero when the input was a polynomial.
inline IntPolynomial divided_difference(const IntPolynomial& f, int i) {
  if (i < 1) throw std::invalid_argument("divided difference index must be >= 1");
  IntPolynomial g = f - swap_action(f, i);
  IntPolynomial q;
  while (!g.is_zero()) {
    const auto& [ev, c] = *g.terms().rbegin();
    if (ev.exponent(i + 1) == 0)
      throw std::logic_error("divided difference: remainder not divisible by x_i - x_{i+1}");
    std::vector<int> e(static_cast<std::size_t>(std::max(ev.max_var(), i + 1)), 0);
    for (int v = 1; v <= static_cast<int>(e.size()); ++v) e[static_cast<std::size_t>(v) - 1] = ev.exponent(v);
    e[static_cast<std::size_t>(i)] -= 1;
    ExponentVector qe{std::move(e)};
    const BigInt qc = -c;
    // g -= (qc * x^qe) * (x_i - x_{i+1})
    g.add_term(qe.times(ExponentVector::unit(i)), -qc);
    g.add_term(qe.times(ExponentVector::unit(i + 1)), qc);
    q.add_term(std::move(qe), qc);
  }
  return q;
}

}  // namespace schub
