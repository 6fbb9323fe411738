#pragma once

// Game generators shared by the test binaries.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "misere/engine.hpp"

namespace support {

using misere::Arena;
using misere::GameId;

inline std::vector<GameId> day1(const Arena& a) {
  return {a.zero(), a.star(), a.one(), a.one_bar()};
}

// All 2^n x 2^n formal games whose option sets are drawn from `ground`.
inline std::vector<GameId> formal_over(Arena& arena, std::span<const GameId> ground) {
  std::vector<GameId> out;
  const std::uint32_t subsets = 1u << ground.size();
  for (std::uint32_t lm = 0; lm < subsets; ++lm) {
    for (std::uint32_t rm = 0; rm < subsets; ++rm) {
      std::vector<GameId> left, right;
      for (std::size_t i = 0; i < ground.size(); ++i) {
        if (lm >> i & 1) left.push_back(ground[i]);
        if (rm >> i & 1) right.push_back(ground[i]);
      }
      out.push_back(arena.intern(left, right));
    }
  }
  return out;
}

// The 256 formal games born by day 2 (every one of them has day-1 options).
inline std::vector<GameId> day2(Arena& arena) {
  const auto ground = day1(arena);
  return formal_over(arena, ground);
}

// Each element of `ground` becomes a Left option, independently, with
// probability p; likewise for Right.
inline GameId random_over(Arena& arena, std::span<const GameId> ground, std::mt19937_64& rng,
                          double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<GameId> left, right;
  for (GameId g : ground) {
    if (coin(rng)) left.push_back(g);
  }
  for (GameId g : ground) {
    if (coin(rng)) right.push_back(g);
  }
  return arena.intern(left, right);
}

// Uniform sample of formal day-3 trees: a uniformly random pair of subsets of
// the 256 day-2 games.
inline std::vector<GameId> day3_sample(Arena& arena, std::size_t count, std::uint64_t seed) {
  const auto ground = day2(arena);
  std::mt19937_64 rng(seed);
  std::vector<GameId> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_over(arena, ground, rng));
  return out;
}

// Sparse day-3 trees with a handful of options per side; these hit dominated
// and reversible options far more often than uniform samples.
inline GameId sparse_day3(Arena& arena, std::span<const GameId> day2_games, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, day2_games.size() - 1);
  std::vector<GameId> left, right;
  for (std::size_t k = count(rng); k > 0; --k) left.push_back(day2_games[pick(rng)]);
  for (std::size_t k = count(rng); k > 0; --k) right.push_back(day2_games[pick(rng)]);
  return arena.intern(left, right);
}

// Random formal game of birthday at most `day` with at most `width` options
// per side.
inline GameId random_game(Arena& arena, std::mt19937_64& rng, unsigned day, unsigned width = 3) {
  if (day == 0) return arena.zero();
  std::uniform_int_distribution<unsigned> count(0, width);
  std::vector<GameId> left, right;
  for (unsigned k = count(rng); k > 0; --k) left.push_back(random_game(arena, rng, day - 1, width));
  for (unsigned k = count(rng); k > 0; --k) right.push_back(random_game(arena, rng, day - 1, width));
  return arena.intern(left, right);
}

// Impartial formal trees (identical option sets on both sides) born by `day`.
// Each day is the power set of the previous one: 1, 2, 4, 16, 65536.
inline std::vector<GameId> impartial_by_day(Arena& arena, unsigned day) {
  std::vector<GameId> current{arena.zero()};
  for (unsigned d = 0; d < day; ++d) {
    std::vector<GameId> next;
    const std::size_t subsets = std::size_t{1} << current.size();
    next.reserve(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<GameId> options;
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (mask >> i & 1) options.push_back(current[i]);
      }
      next.push_back(arena.intern(options, options));
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace support
