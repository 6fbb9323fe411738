#pragma once

// Independent reference model used only by tests: explicit game trees with
// value semantics and unmemoized exhaustive search. Nothing here touches the
// arena's sum, conjugate, adjoint or outcome code paths.

#include <algorithm>
#include <compare>
#include <vector>

#include "misere/arena.hpp"
#include "misere/outcome.hpp"

namespace oracle {

struct Tree {
  std::vector<Tree> left;
  std::vector<Tree> right;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (auto c = std::lexicographical_compare_three_way(a.left.begin(), a.left.end(),
                                                        b.left.begin(), b.left.end());
        c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(a.right.begin(), a.right.end(),
                                                  b.right.begin(), b.right.end());
  }
};

inline Tree make(std::vector<Tree> left, std::vector<Tree> right) {
  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  return Tree{std::move(left), std::move(right)};
}

inline Tree zero() { return {}; }
inline Tree star() { return make({zero()}, {zero()}); }
inline Tree one() { return make({zero()}, {}); }
inline Tree one_bar() { return make({}, {zero()}); }

inline Tree sum(const Tree& a, const Tree& b) {
  std::vector<Tree> left, right;
  for (const Tree& x : a.left) left.push_back(sum(x, b));
  for (const Tree& x : b.left) left.push_back(sum(a, x));
  for (const Tree& x : a.right) right.push_back(sum(x, b));
  for (const Tree& x : b.right) right.push_back(sum(a, x));
  return make(std::move(left), std::move(right));
}

inline Tree conjugate(const Tree& t) {
  std::vector<Tree> left, right;
  for (const Tree& x : t.right) left.push_back(conjugate(x));
  for (const Tree& x : t.left) right.push_back(conjugate(x));
  return make(std::move(left), std::move(right));
}

inline Tree adjoint(const Tree& t) {
  if (t.left.empty() && t.right.empty()) return star();
  std::vector<Tree> left, right;
  for (const Tree& x : t.right) left.push_back(adjoint(x));
  for (const Tree& x : t.left) right.push_back(adjoint(x));
  if (t.left.empty()) return make(std::move(left), {zero()});
  if (t.right.empty()) return make({zero()}, std::move(right));
  return make(std::move(left), std::move(right));
}

inline unsigned birthday(const Tree& t) {
  unsigned d = 0;
  for (const auto* side : {&t.left, &t.right}) {
    for (const Tree& x : *side) d = std::max(d, birthday(x) + 1);
  }
  return d;
}

// Exhaustive play of the sum of `parts`, with no memo. misere selects the
// convention: a player unable to move wins (misère) or loses (normal).
inline bool wins_moving_first(const std::vector<Tree>& parts, bool left_to_move, bool misere) {
  bool any_move = false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Tree& next : left_to_move ? parts[i].left : parts[i].right) {
      any_move = true;
      std::vector<Tree> after = parts;
      after[i] = next;
      if (!wins_moving_first(after, !left_to_move, misere)) return true;
    }
  }
  return any_move ? false : misere;
}

inline misere::Outcome outcome(const std::vector<Tree>& parts, bool misere = true) {
  return misere::outcome_from(wins_moving_first(parts, true, misere),
                              wins_moving_first(parts, false, misere));
}

inline misere::Outcome outcome(const Tree& t, bool misere = true) {
  return outcome(std::vector<Tree>{t}, misere);
}

inline Tree from_arena(const misere::Arena& arena, misere::GameId g) {
  std::vector<Tree> left, right;
  for (misere::GameId x : arena.left(g)) left.push_back(from_arena(arena, x));
  for (misere::GameId x : arena.right(g)) right.push_back(from_arena(arena, x));
  return make(std::move(left), std::move(right));
}

inline misere::GameId to_arena(misere::Arena& arena, const Tree& t) {
  std::vector<misere::GameId> left, right;
  for (const Tree& x : t.left) left.push_back(to_arena(arena, x));
  for (const Tree& x : t.right) right.push_back(to_arena(arena, x));
  return arena.intern(std::move(left), std::move(right));
}

// Every formal tree whose options are drawn from `ground`.
inline std::vector<Tree> all_over(const std::vector<Tree>& ground) {
  std::vector<Tree> out;
  const std::size_t subsets = std::size_t{1} << ground.size();
  for (std::size_t lm = 0; lm < subsets; ++lm) {
    for (std::size_t rm = 0; rm < subsets; ++rm) {
      std::vector<Tree> left, right;
      for (std::size_t i = 0; i < ground.size(); ++i) {
        if (lm >> i & 1) left.push_back(ground[i]);
        if (rm >> i & 1) right.push_back(ground[i]);
      }
      out.push_back(make(std::move(left), std::move(right)));
    }
  }
  return out;
}

inline std::vector<Tree> day1() { return {zero(), star(), one(), one_bar()}; }

}  // namespace oracle
