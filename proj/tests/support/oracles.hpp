#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the canonicalization code they are checking.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline char knit_inverse(char c) {
  switch (c) {
    case 'k': return 'K';
    case 'K': return 'k';
    case 'p': return 'P';
    case 'P': return 'p';
  }
  return '?';
}

/// Every irreducible word reachable by cancelling one adjacent inverse pair at
/// a time, in every possible order.
inline std::set<std::string> knit_normal_forms(const std::string& word) {
  std::set<std::string> seen{word};
  std::set<std::string> normal;
  std::deque<std::string> queue{word};
  while (!queue.empty()) {
    std::string w = queue.front();
    queue.pop_front();
    bool reducible = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] != knit_inverse(w[i])) continue;
      reducible = true;
      std::string next = w.substr(0, i) + w.substr(i + 2);
      if (seen.insert(next).second) queue.push_back(next);
    }
    if (!reducible) normal.insert(w);
  }
  return normal;
}

/// Cube move as (face index 0..5 in R L U D F B order, turns 1..3).
struct Move {
  int face;
  int turns;
  friend auto operator<=>(const Move&, const Move&) = default;
};
using Moves = std::vector<Move>;

inline int axis(int face) { return face / 2; }

/// Closure of the three textual rewrite rules applied one at a time at any
/// position:
///   rule 1: X followed by its inverse is deleted,
///   rule 2: two adjacent moves of one face merge (turns mod 4; 0 deletes),
///   rule 3: secondary face followed by its opposite primary face swap.
/// Returns every reachable sequence to which no rule applies.
inline std::set<Moves> cube_normal_forms(const Moves& start) {
  std::set<Moves> seen{start};
  std::set<Moves> normal;
  std::deque<Moves> queue{start};
  auto visit = [&](Moves m) {
    if (seen.insert(m).second) queue.push_back(std::move(m));
  };
  while (!queue.empty()) {
    Moves m = queue.front();
    queue.pop_front();
    bool reducible = false;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      const Move a = m[i];
      const Move b = m[i + 1];
      if (a.face == b.face && (a.turns + b.turns) % 4 == 0) {
        reducible = true;
        Moves next(m.begin(), m.begin() + static_cast<long>(i));
        next.insert(next.end(), m.begin() + static_cast<long>(i) + 2, m.end());
        visit(std::move(next));
      }
      if (a.face == b.face) {
        reducible = true;
        Moves next(m.begin(), m.begin() + static_cast<long>(i));
        const int t = (a.turns + b.turns) % 4;
        if (t) next.push_back({a.face, t});
        next.insert(next.end(), m.begin() + static_cast<long>(i) + 2, m.end());
        visit(std::move(next));
      }
      if (a.face != b.face && axis(a.face) == axis(b.face) && a.face % 2 == 1) {
        reducible = true;
        Moves next = m;
        std::swap(next[i], next[i + 1]);
        visit(std::move(next));
      }
    }
    if (!reducible) normal.insert(m);
  }
  return normal;
}

/// Average over all C(n, k) subsets of a pool with c successes of the
/// indicator "subset contains a success".
inline double pass_k_by_enumeration(int n, int c, int k) {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    ++total;
    // samples 0..c-1 are the successes
    if (mask & ((1u << c) - 1u)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

/// All ways to bracket a fold of xs with op, as a set of results.
template <typename T, typename Op>
std::vector<T> all_bracketings(const std::vector<T>& xs, std::size_t lo, std::size_t hi, Op op) {
  if (hi - lo == 1) return {xs[lo]};
  std::vector<T> out;
  for (std::size_t mid = lo + 1; mid < hi; ++mid) {
    for (const auto& l : all_bracketings(xs, lo, mid, op)) {
      for (const auto& r : all_bracketings(xs, mid, hi, op)) out.push_back(op(l, r));
    }
  }
  return out;
}

/// Enumerates every sequence of length len over `alphabet` symbols.
inline void for_each_sequence(int alphabet, int len, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  while (true) {
    fn(seq);
    int i = len - 1;
    while (i >= 0 && ++seq[static_cast<std::size_t>(i)] == alphabet) seq[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

}  // namespace oracle
