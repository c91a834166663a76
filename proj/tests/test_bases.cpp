#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "schub/bases.hpp"

using namespace schub;

namespace {

Permutation W(std::vector<int> word) { return Permutation::from_word(std::move(word)); }

IntPolynomial mono(std::vector<int> exps) { return IntPolynomial::monomial(ExponentVector(std::move(exps))); }

SemVector SV(std::vector<int> a) { return SemVector(std::move(a)); }
ChmVector CV(std::vector<int> a) { return ChmVector(std::move(a)); }

bool code_nonincreasing(const Permutation& w) { return lehmer_code(w).nonincreasing(); }

// All ways to write total as n-1 nonnegative parts.
std::vector<std::vector<int>> compositions(int parts, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == parts) {
      if (left == 0) out.push_back(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
    a[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace

TEST_CASE("elementary polynomials") {
  CHECK(elementary_poly(2, 0) == IntPolynomial::constant(1));
  CHECK(elementary_poly(2, 1) == mono({1}) + mono({0, 1}));
  CHECK(elementary_poly(3, 2) == mono({1, 1}) + mono({1, 0, 1}) + mono({0, 1, 1}));
  CHECK(elementary_poly(3, 3) == mono({1, 1, 1}));
  CHECK(elementary_poly(2, 3).is_zero());
  CHECK(elementary_poly(0, 0) == IntPolynomial::constant(1));
  CHECK_THROWS_AS(elementary_poly(-1, 0), std::invalid_argument);
}

TEST_CASE("complete homogeneous polynomials") {
  CHECK(homogeneous_poly(2, 1) == mono({1}) + mono({0, 1}));
  CHECK(homogeneous_poly(1, 3) == mono({3}));
  CHECK(homogeneous_poly(2, 2) == mono({2}) + mono({1, 1}) + mono({0, 2}));
  CHECK(homogeneous_poly(3, 2).term_count() == 6);
  CHECK(homogeneous_poly(0, 2).is_zero());
  CHECK(homogeneous_poly(3, 0) == IntPolynomial::constant(1));
  CHECK_THROWS_AS(homogeneous_poly(2, -1), std::invalid_argument);
}

TEST_CASE("e and h satisfy the alternating convolution identity") {
  // sum_j (-1)^j e(i,j) h(i,d-j) = 0 for d >= 1
  for (int i = 1; i <= 4; ++i)
    for (int d = 1; d <= 5; ++d) {
      IntPolynomial sum;
      for (int j = 0; j <= d; ++j) {
        const IntPolynomial p = elementary_poly(i, j) * homogeneous_poly(i, d - j);
        sum += (j % 2 == 0) ? p : -p;
      }
      CHECK(sum.is_zero());
    }
}

TEST_CASE("divided differences act on e and h one column at a time") {
  for (int i = 1; i <= 4; ++i)
    for (int k = 1; k <= 4; ++k)
      for (int j = 0; j <= 5; ++j) {
        const IntPolynomial de = divided_difference(elementary_poly(k, j), i);
        const IntPolynomial dh = divided_difference(homogeneous_poly(k, j), i);
        if (i == k && j >= 1) {
          CHECK(de == elementary_poly(i - 1, j - 1));
          CHECK(dh == homogeneous_poly(i + 1, j - 1));
        } else {
          CHECK(de.is_zero());
          CHECK(dh.is_zero());
        }
      }
}

TEST_CASE("SEM and CHM vectors normalize and compare") {
  CHECK(SV({0, 1, 0}) == SV({0, 1}));
  CHECK(SV({0, 1}).entry(2) == 1);
  CHECK(SV({0, 1}).entry(5) == 0);
  CHECK(SV({1, 2, 3}).degree() == 6);
  CHECK(SV({}) == SemVector{});
  CHECK(SV({0, 1}) < SV({1}));
  CHECK_THROWS_AS(SV({1, -1}), std::invalid_argument);
  CHECK(CV({2, 0}) == CV({2}));
  CHECK_THROWS_AS(CV({-2}), std::invalid_argument);
}

TEST_CASE("product builders") {
  CHECK(sem_product(SV({})) == IntPolynomial::constant(1));
  CHECK(sem_product(SV({0, 1})) == mono({1}) + mono({0, 1}));
  CHECK(sem_product(SV({1, 1})) == mono({2}) + mono({1, 1}));
  CHECK(chm_product(CV({0, 1})) == mono({1}) + mono({0, 1}));
  CHECK(chm_product(CV({1, 1})) == mono({2}) + mono({1, 1}));
  CHECK(sem_product(SV({0, 1, 3, 0, 0, 2, 7})).homogeneous_degree() == 13);
}

TEST_CASE("SEM basis vectors per degree match the staircase monomial counts") {
  CHECK(sem_basis_vectors(3, 2) == std::vector<SemVector>{SV({0, 2}), SV({1, 1})});
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t total = 0;
    const int top = n * (n - 1) / 2;
    for (int d = 0; d <= top; ++d) {
      const auto vectors = sem_basis_vectors(n, d);
      CHECK(vectors.size() == staircase_monomials(n, d).size());
      CHECK(std::is_sorted(vectors.begin(), vectors.end()));
      total += vectors.size();
    }
    CHECK(total == factorial(n));
    CHECK(sem_basis_vectors(n, top + 1).empty());
  }
}

TEST_CASE("staircase monomials are listed in increasing term order") {
  const auto ms = staircase_monomials(3, 2);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0] == ExponentVector({2}));
  CHECK(ms[1] == ExponentVector({1, 1}));
  CHECK(staircase_monomials(3, 4).empty());
}

TEST_CASE("the change-of-basis system solves and round-trips") {
  const SemSystem& sys = SemSystem::get(4, 3);
  CHECK(sys.dimension() == static_cast<int>(sem_basis_vectors(4, 3).size()));
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= n * (n - 1) / 2; ++d)
      for (const SemVector& a : sem_basis_vectors(n, d)) {
        const SemExpansion e = sem_expand(sem_product(a), n);
        REQUIRE(e.terms.size() == 1);
        CHECK(e.terms.begin()->first == a);
        CHECK(e.terms.begin()->second == 1);
        CHECK(e.degree == d);
      }
}

TEST_CASE("integer combinations come back exactly") {
  const auto vectors = sem_basis_vectors(5, 4);
  REQUIRE(vectors.size() >= 3);
  IntPolynomial f = BigInt(7) * sem_product(vectors[0]) - BigInt(100000000000) * sem_product(vectors[2]);
  const SemExpansion e = sem_expand(f, 5);
  std::map<SemVector, BigInt> expected;
  expected.emplace(vectors[0], 7);
  expected.emplace(vectors[2], BigInt(-100000000000));
  CHECK(e.terms == expected);
}

TEST_CASE("pinned SEM expansions") {
  const SemExpansion e312 = sem_expand(schubert_divdiff(W({3, 1, 2})), 3);
  std::map<SemVector, BigInt> expected;
  expected.emplace(SV({0, 2}), -1);
  expected.emplace(SV({1, 1}), 1);
  CHECK(e312.terms == expected);

  const SemExpansion e132 = sem_expand(schubert_divdiff(W({1, 3, 2})), 3);
  REQUIRE(e132.terms.size() == 1);
  CHECK(e132.terms.begin()->first == SV({0, 1}));

  CHECK(sem_expand(IntPolynomial{}, 4).terms.empty());
  CHECK_THROWS_AS(sem_expand(mono({1}) + mono({2}), 3), std::invalid_argument);
  CHECK_THROWS_AS(sem_expand(mono({3}), 3), std::invalid_argument);
}

TEST_CASE("every Schubert polynomial of S_4 reconstructs from its SEM expansion") {
  for_each_permutation(4, [&](const Permutation& w) {
    const IntPolynomial s = schubert_divdiff(w);
    const SemExpansion e = sem_expand(s, 4);
    IntPolynomial back;
    for (const auto& [a, c] : e.terms) back += c * sem_product(a);
    CHECK(back == s);
  });
}

TEST_CASE("pinned constructive SEM vectors") {
  CHECK(constructive_sem(Permutation::identity(4)) == SemVector{});
  CHECK(constructive_sem(W({2, 1})) == SV({1}));
  CHECK(constructive_sem(W({1, 3, 2})) == SV({0, 1}));
  CHECK(constructive_sem(W({2, 3, 1})) == SV({0, 2}));
  CHECK(constructive_sem(W({1, 3, 4, 2})) == SV({0, 0, 2}));
  CHECK(constructive_sem(W({3, 5, 4, 2, 7, 8, 6, 1})) == SV({0, 1, 3, 0, 0, 2, 7}));
  CHECK(constructive_sem(W({3, 4, 5, 2, 6, 7, 8, 1})) == SV({0, 0, 3, 0, 0, 0, 7}));
  CHECK_THROWS_AS(constructive_sem(W({3, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(constructive_sem(W({1, 4, 3, 2})), std::invalid_argument);
}

TEST_CASE("constructive SEM matches the solver on every shape-rule permutation of S_5") {
  for_each_permutation(5, [&](const Permutation& w) {
    if (lehmer_rules_check(lehmer_code(w)).all_ok()) {
      const SemVector a = constructive_sem(w);
      CHECK(sem_product(a) == schubert_divdiff(w));
      const auto solved = single_sem_of(w);
      REQUIRE(solved.has_value());
      CHECK(*solved == a);
      // factor support reads off the descent set
      const std::vector<int> descents = descent_set(w);
      for (int i = 1; i < w.size(); ++i) {
        const bool descent = std::find(descents.begin(), descents.end(), i) != descents.end();
        CHECK((a.entry(i) != 0) == descent);
      }
    } else {
      CHECK_FALSE(single_sem_of(w).has_value());
    }
  });
}

TEST_CASE("single monomial detection") {
  CHECK(single_monomial_of(W({3, 1, 2})) == ExponentVector({2}));
  CHECK_FALSE(single_monomial_of(W({4, 1, 3, 2})).has_value());
  for_each_permutation(5, [&](const Permutation& w) {
    CHECK(single_monomial_of(w).has_value() == code_nonincreasing(w));
  });
}

TEST_CASE("single CHM detection with a brute-force oracle") {
  CHECK(single_chm_of(W({1, 3, 2})) == CV({0, 1}));
  CHECK(single_chm_of(W({2, 1, 3})) == CV({1}));
  CHECK_FALSE(single_chm_of(W({2, 3, 1})).has_value());
  CHECK_FALSE(single_chm_of(W({3, 2, 1})).has_value());
  for (int n = 1; n <= 4; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      const IntPolynomial s = schubert_divdiff(w);
      bool exists = false;
      for (const auto& a : compositions(n - 1, static_cast<int>(w.length())))
        if (chm_product(ChmVector(a)) == s) {
          exists = true;
          break;
        }
      CHECK(single_chm_of(w).has_value() == exists);
    });
}
