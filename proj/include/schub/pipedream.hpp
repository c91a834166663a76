#pragma once

// Pipe dreams (rc-graphs) on the staircase grid. A dream for w in S_n is a
// set of crossing cells (r, c) with r + c <= n; every other cell holds a pair
// of elbows. Wire i enters at the left edge of row i and exits at the top
// edge of column w(i): through a crossing it runs straight, through an elbow
// it turns (rightward -> up, upward -> rightward).
//
// The bottom dream of w packs L_i crossings left-justified into row i. Its
// ladder-move closure is exactly the set of reduced dreams of w, and summing
// the row weights x^{weight(D)} over that set gives the Schubert polynomial.

#include <bit>
#include <cassert>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schub/perm.hpp"
#include "schub/poly.hpp"

namespace schub {

class PipeDream {
 public:
  explicit PipeDream(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > 64) throw std::invalid_argument("grid size out of range");
  }

  static PipeDream from_crossings(int n, const std::vector<std::pair<int, int>>& cells) {
    PipeDream d(n);
    for (auto [r, c] : cells) {
      d.check_cell(r, c);
      const std::uint64_t bit = std::uint64_t{1} << (c - 1);
      if (d.rows_[static_cast<std::size_t>(r) - 1] & bit)
        throw std::invalid_argument("duplicate crossing at (" + std::to_string(r) + "," + std::to_string(c) + ")");
      d.rows_[static_cast<std::size_t>(r) - 1] |= bit;
    }
    return d;
  }

  int size() const { return n_; }

  bool has_crossing(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_) return false;
    return (rows_[static_cast<std::size_t>(row) - 1] >> (col - 1)) & 1;
  }

  int crossing_count() const {
    int c = 0;
    for (std::uint64_t bits : rows_) c += std::popcount(bits);
    return c;
  }

  int row_crossing_count(int row) const {
    return std::popcount(rows_[static_cast<std::size_t>(row) - 1]);
  }

  std::vector<std::pair<int, int>> crossings() const {  // row-major order
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= n_; ++r)
      for (int c = 1; c <= n_; ++c)
        if (has_crossing(r, c)) cells.emplace_back(r, c);
    return cells;
  }

  PipeDream with_crossing(int r, int c) const {
    check_cell(r, c);
    if (has_crossing(r, c)) throw std::invalid_argument("cell already crossed");
    PipeDream d = *this;
    d.rows_[static_cast<std::size_t>(r) - 1] |= std::uint64_t{1} << (c - 1);
    return d;
  }

  PipeDream without_crossing(int r, int c) const {
    if (!has_crossing(r, c)) throw std::invalid_argument("cell not crossed");
    PipeDream d = *this;
    d.rows_[static_cast<std::size_t>(r) - 1] &= ~(std::uint64_t{1} << (c - 1));
    return d;
  }

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
  friend std::strong_ordering operator<=>(const PipeDream& a, const PipeDream& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  void check_cell(int r, int c) const {
    if (r < 1 || c < 1 || r > n_ || c > n_ || r + c > n_)
      throw std::invalid_argument("crossing (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") outside the staircase of size " + std::to_string(n_));
  }

  int n_;
  std::vector<std::uint64_t> rows_;  // bit c-1 of rows_[r-1] = crossing at (r, c)
};

namespace detail {

// Walks every wire. For each cell records which wire passes horizontally and
// which vertically; crossing cells are traversed straight, elbow cells turn.
struct WireTrace {
  std::vector<int> exit_col;                 // exit_col[i-1] = top column of wire i
  std::vector<std::vector<int>> h_wire;      // 0 = no horizontal occupant
  std::vector<std::vector<int>> v_wire;
};

inline WireTrace trace_wires(const PipeDream& d) {
  const int n = d.size();
  WireTrace t;
  t.exit_col.assign(static_cast<std::size_t>(n), 0);
  t.h_wire.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  t.v_wire.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int wire = 1; wire <= n; ++wire) {
    int r = wire, c = 1;
    bool rightward = true;  // enters from the left edge
    while (true) {
      if (r < 1) {  // left the grid through the top edge of column c
        t.exit_col[static_cast<std::size_t>(wire) - 1] = c;
        break;
      }
      if (c > n || r > n)
        throw std::logic_error("wire left the grid other than through the top");
      auto& occ = rightward ? t.h_wire : t.v_wire;
      int& slot = occ[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1];
      if (slot != 0) throw std::logic_error("two wires traversing one cell in the same direction");
      slot = wire;
      const bool straight = d.has_crossing(r, c);
      if (rightward) {
        if (straight) {
          ++c;
        } else {
          rightward = false;
          --r;
        }
      } else {
        if (straight) {
          --r;
        } else {
          rightward = true;
          ++c;
        }
      }
    }
  }
  return t;
}

}  // namespace detail

inline Permutation permutation_of(const PipeDream& d) {
  return Permutation::from_word(detail::trace_wires(d).exit_col);
}

// Reduced: no pair of wires crosses more than once.
inline bool is_reduced(const PipeDream& d) {
  const auto trace = detail::trace_wires(d);
  std::set<std::pair<int, int>> crossed;
  for (auto [r, c] : d.crossings()) {
    int a = trace.h_wire[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1];
    int b = trace.v_wire[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1];
    if (a == 0 || b == 0) throw std::logic_error("crossing cell missing a wire");
    if (a > b) std::swap(a, b);
    if (!crossed.emplace(a, b).second) return false;
  }
  return true;
}

// Row i carries L_i(w) crossings in columns 1..L_i.
inline PipeDream bottom_pipe_dream(const Permutation& w) {
  const int n = w.size();
  const LehmerCode code = lehmer_code(w);
  PipeDream d(n);
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int c = 1; c <= code.at(i); ++c) cells.emplace_back(i, c);
  PipeDream bottom = PipeDream::from_crossings(n, cells);
  assert(permutation_of(bottom) == w);
  return bottom;
}

// A ladder move takes the crossing at (row, col), requires elbows at
// (row, col+1) and, after k full rows of crossings in columns col, col+1,
// an elbow pair at (row-k-1, col) and (row-k-1, col+1); it then moves the
// crossing to (row-k-1, col+1). Each crossing admits at most one move.
struct LadderMove {
  int row = 0, col = 0;
  int order = 0;  // k = number of crossed rows climbed over

  std::pair<int, int> target() const { return {row - order - 1, col + 1}; }
  friend bool operator==(const LadderMove&, const LadderMove&) = default;
};

inline std::vector<LadderMove> ladder_moves(const PipeDream& d) {
  std::vector<LadderMove> moves;
  for (auto [r, c] : d.crossings()) {
    if (d.has_crossing(r, c + 1)) continue;  // needs an elbow to its right
    int top = r - 1;
    while (top >= 1 && d.has_crossing(top, c) && d.has_crossing(top, c + 1)) --top;
    if (top < 1) continue;
    if (d.has_crossing(top, c) || d.has_crossing(top, c + 1)) continue;
    // Target stays inside the staircase automatically: top + (c+1) <= r + c.
    moves.push_back({r, c, r - 1 - top});
  }
  return moves;
}

inline PipeDream apply_ladder_move(const PipeDream& d, const LadderMove& m) {
  auto [tr, tc] = m.target();
  return d.without_crossing(m.row, m.col).with_crossing(tr, tc);
}

inline constexpr std::size_t kDefaultDreamLimit = 1'000'000;

// Ladder-move closure of the bottom dream = all reduced dreams of w.
inline std::vector<PipeDream> enumerate_reduced(const Permutation& w,
                                                std::size_t limit = kDefaultDreamLimit) {
  std::set<PipeDream> seen;
  std::deque<PipeDream> queue;
  queue.push_back(bottom_pipe_dream(w));
  seen.insert(queue.front());
  while (!queue.empty()) {
    PipeDream d = std::move(queue.front());
    queue.pop_front();
    for (const LadderMove& m : ladder_moves(d)) {
      PipeDream next = apply_ladder_move(d, m);
      if (seen.insert(next).second) {
        if (seen.size() > limit)
          throw std::runtime_error("pipe dream enumeration exceeded the limit of " +
                                   std::to_string(limit) + " dreams");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// x_1^{a_1} ... x_n^{a_n} with a_i = crossings in row i.
inline ExponentVector weight(const PipeDream& d) {
  std::vector<int> e(static_cast<std::size_t>(d.size()));
  for (int r = 1; r <= d.size(); ++r) e[static_cast<std::size_t>(r) - 1] = d.row_crossing_count(r);
  return ExponentVector(std::move(e));
}

inline IntPolynomial schubert_from_pipedreams(const Permutation& w,
                                              std::size_t limit = kDefaultDreamLimit) {
  IntPolynomial p;
  for (const PipeDream& d : enumerate_reduced(w, limit)) p.add_term(weight(d), 1);
  return p;
}

inline bool is_left_justified(const PipeDream& d) {
  for (int r = 1; r <= d.size(); ++r) {
    const int k = d.row_crossing_count(r);
    for (int c = 1; c <= k; ++c)
      if (!d.has_crossing(r, c)) return false;
  }
  return true;
}

// For a bottom dream: from each nonempty row i, walk the diagonal (i-t, t+1),
// t = 1, 2, ...; neither it nor its left neighbor (i-t, t) may meet a
// crossing. Equivalent to w avoiding both 321 and 231.
inline bool diagonal_clearance(const PipeDream& d) {
  if (!is_left_justified(d))
    throw std::invalid_argument("diagonal clearance is defined for bottom (left-justified) dreams");
  for (int r = 1; r <= d.size(); ++r) {
    if (d.row_crossing_count(r) == 0) continue;
    for (int t = 1; r - t >= 1; ++t)
      if (d.has_crossing(r - t, t) || d.has_crossing(r - t, t + 1)) return false;
  }
  return true;
}

}  // namespace schub
