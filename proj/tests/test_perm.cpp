#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "schub/perm.hpp"

using namespace schub;

namespace {

Permutation W(std::vector<int> word) { return Permutation::from_word(std::move(word)); }

// Pattern of the values of w at the given 1-based positions.
Permutation standardize(const Permutation& w, const std::vector<int>& positions) {
  std::vector<int> vals;
  for (int p : positions) vals.push_back(w(p));
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> word;
  for (int v : vals)
    word.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return Permutation::from_word(std::move(word));
}

}  // namespace

TEST_CASE("word validation") {
  CHECK_THROWS_AS(Permutation::from_word({}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_word({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_word({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_word({1, 3}), std::invalid_argument);
  CHECK(W({2, 1, 3}).size() == 3);
  CHECK(W({2, 1, 3})(1) == 2);
  CHECK(Permutation::identity(4) == W({1, 2, 3, 4}));
}

TEST_CASE("length, inverse, embedding, trimming") {
  CHECK(Permutation::identity(5).length() == 0);
  CHECK(W({4, 1, 3, 2}).length() == 4);
  CHECK(W({3, 2, 1}).length() == 3);
  CHECK(W({4, 1, 3, 2}).inverse() == W({2, 4, 3, 1}));
  CHECK(W({2, 1}).embedded(4) == W({2, 1, 3, 4}));
  CHECK(W({2, 1, 3, 4}).trimmed() == W({2, 1}));
  CHECK(Permutation::identity(5).trimmed() == Permutation::identity(1));
  CHECK_THROWS_AS(W({2, 1, 3}).embedded(2), std::invalid_argument);
}

TEST_CASE("Lehmer codes of pinned examples") {
  CHECK(lehmer_code(W({4, 1, 3, 2})).entries == std::vector<int>{3, 0, 1, 0});
  CHECK(lehmer_code(W({3, 5, 4, 2, 7, 8, 6, 1})).entries == std::vector<int>{2, 3, 2, 1, 2, 2, 1, 0});
  CHECK(lehmer_code(W({3, 5, 4, 2, 7, 8, 6, 1})).sum() == 13);
  CHECK(lehmer_code(W({1, 4, 2, 7, 3, 5, 6})).entries == std::vector<int>{0, 2, 0, 3, 0, 0, 0});
  CHECK(lehmer_code(W({1, 3, 2})).entries == std::vector<int>{0, 1, 0});
  CHECK(lehmer_code(W({1, 3, 4, 2})).entries == std::vector<int>{0, 1, 1, 0});
  CHECK(lehmer_code(W({3, 1, 2})).entries == std::vector<int>{2, 0, 0});
}

TEST_CASE("code entries are bounded and length is recovered") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      const LehmerCode code = lehmer_code(w);
      for (int i = 1; i <= n; ++i) {
        CHECK(code.at(i) >= 0);
        CHECK(code.at(i) <= n - i);
      }
      CHECK(code.sum() == w.length());
    });
}

TEST_CASE("from_code inverts lehmer_code exhaustively") {
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      CHECK(Permutation::from_code(lehmer_code(w)) == w);
    });
}

TEST_CASE("from_code validation") {
  // entry 2 at position 3 of a length-4 code exceeds the bound n - i = 1
  CHECK_THROWS_AS(Permutation::from_code(LehmerCode({0, 1, 2, 0})), std::invalid_argument);
  CHECK_THROWS_AS(LehmerCode({0, -1}), std::invalid_argument);
  // the same entries padded into S_5 are a valid code, and decode to a
  // permutation containing 312 (consistent with the rule-3 violation below)
  const Permutation w = Permutation::from_code(LehmerCode({0, 1, 2, 0, 0}));
  CHECK(w == W({1, 3, 5, 2, 4}));
  CHECK(contains_pattern(w, W({3, 1, 2})));
}

TEST_CASE("descents of w match descents of its code") {
  CHECK(descent_set(W({4, 1, 3, 2})) == std::vector<int>{1, 3});
  CHECK(descent_set(W({3, 4, 5, 2, 6, 7, 8, 1})) == std::vector<int>{3, 7});
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      const LehmerCode code = lehmer_code(w);
      for (int i = 1; i < n; ++i) CHECK((w(i) > w(i + 1)) == (code.at(i) > code.at(i + 1)));
    });
}

TEST_CASE("pattern containment on pinned examples") {
  CHECK(contains_pattern(W({4, 1, 3, 2}), W({3, 1, 2})));
  CHECK(contains_pattern(W({3, 1, 2}), W({3, 1, 2})));
  CHECK(contains_pattern(W({1, 4, 2, 7, 3, 5, 6}), W({2, 3, 1})));  // subsequence 4, 7, 3
  CHECK_FALSE(contains_pattern(Permutation::identity(6), W({2, 1})));
  CHECK_FALSE(contains_pattern(W({1, 2}), W({1, 3, 2})));  // pattern longer than word
  CHECK(contains_pattern(W({1, 5, 4, 3, 2}), W({1, 4, 3, 2})));
  CHECK_FALSE(contains_pattern(W({2, 1, 3, 4}), W({3, 2, 1})));
}

TEST_CASE("containment is monotone under taking subpatterns") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 4);
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    const Permutation w = Permutation::from_word(word);

    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<int> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), 1);
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(static_cast<std::size_t>(k));
    std::sort(positions.begin(), positions.end());
    const Permutation p = standardize(w, positions);
    REQUIRE(contains_pattern(w, p));

    std::vector<int> sub(positions.size() - 1);
    std::iota(sub.begin(), sub.end(), 1);  // drop the last slot of p
    const Permutation q = standardize(p, sub);
    CHECK(contains_pattern(w, q));
  }
}

TEST_CASE("shape rules on pinned codes") {
  CHECK(lehmer_rules_check(LehmerCode({2, 2, 2, 1, 1, 1, 1, 0})).all_ok());

  const RuleReport drop = lehmer_rules_check(LehmerCode({2, 0, 0}));
  CHECK_FALSE(drop.rule1_ok);
  CHECK(drop.rule2_ok);
  REQUIRE_FALSE(drop.violations.empty());
  CHECK(drop.violations.front() == std::pair<int, int>{1, 1});

  const RuleReport double_rise = lehmer_rules_check(LehmerCode({0, 1, 2, 0}));
  CHECK_FALSE(double_rise.rule3_ok);  // rises at 1 and 2 with no fall between
  CHECK_FALSE(double_rise.rule1_ok);  // and the final drop is by 2
  CHECK(double_rise.rule2_ok);

  const RuleReport plateau = lehmer_rules_check(LehmerCode({0, 1, 1, 2, 1, 0}));
  CHECK(plateau.rule1_ok);
  CHECK(plateau.rule2_ok);
  CHECK_FALSE(plateau.rule3_ok);  // rises at 1 and 3 separated only by a plateau
}

TEST_CASE("shape rules hold exactly for {312, 1432}-avoiders") {
  const Permutation q312 = W({3, 1, 2});
  const Permutation q1432 = W({1, 4, 3, 2});
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      const bool avoids = !contains_pattern(w, q312) && !contains_pattern(w, q1432);
      CHECK(lehmer_rules_check(lehmer_code(w)).all_ok() == avoids);
    });
}

TEST_CASE("transpositions and length covers") {
  CHECK(transpose(W({2, 1, 3}), 1, 3) == W({3, 1, 2}));
  CHECK_THROWS_AS(transpose(W({2, 1, 3}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(transpose(W({2, 1, 3}), 0, 2), std::invalid_argument);

  CHECK_FALSE(is_length_cover(Permutation::identity(3), 1, 3));  // jumps by 3
  CHECK(is_length_cover(W({1, 3, 2}), 1, 2));

  for (int n = 2; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      for (int i1 = 1; i1 < n; ++i1)
        for (int i2 = i1 + 1; i2 <= n; ++i2)
          CHECK(is_length_cover(w, i1, i2) ==
                (transpose(w, i1, i2).length() == w.length() + 1));
    });
}

TEST_CASE("Motzkin paths of pinned codes") {
  const MeanderPath p = motzkin_path(LehmerCode({1, 1, 0}));
  CHECK(p.heights == std::vector<int>{0, 1, 1});
  CHECK(p.steps == std::vector<char>{'U', 'H'});
  CHECK(p.is_meander);
  CHECK(p.d_separated);

  const MeanderPath q = motzkin_path(lehmer_code(W({3, 2, 1})));
  CHECK(q.heights == std::vector<int>{0, 1, 2});
  CHECK(q.steps == std::vector<char>{'U', 'U'});

  CHECK_THROWS_AS(motzkin_path(LehmerCode({2, 0, 0})), std::invalid_argument);
  CHECK(motzkin_path(LehmerCode({0})).steps.empty());
}

TEST_CASE("D-separated meanders count the rule-abiding permutations") {
  int path_count = 0, rule_count = 0;
  for_each_permutation(4, [&](const Permutation& w) {
    const LehmerCode code = lehmer_code(w);
    if (lehmer_rules_check(code).all_ok()) ++rule_count;
    try {
      const MeanderPath p = motzkin_path(code);
      CHECK(p.is_meander);  // valid codes always start at 0 and stay nonnegative
      if (p.d_separated) ++path_count;
    } catch (const std::invalid_argument&) {
      // steps of size two: not representable, not counted
    }
  });
  CHECK(path_count == 13);
  CHECK(path_count == rule_count);
}

TEST_CASE("rank and unrank") {
  CHECK(perm_rank(Permutation::identity(4)) == 0);
  CHECK(perm_rank(W({4, 3, 2, 1})) == factorial(4) - 1);
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t expected = 0;
    for_each_permutation(n, [&](const Permutation& w) {
      CHECK(perm_rank(w) == expected);
      CHECK(perm_unrank(n, expected) == w);
      ++expected;
    });
  }
  CHECK_THROWS_AS(perm_unrank(3, 6), std::invalid_argument);
}
