#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "misere/arena.hpp"

namespace misere {

// L: Left wins whoever starts. R: Right wins whoever starts.
// P: the second player wins. N: the first player wins.
enum class Outcome : std::uint8_t { L, R, P, N };

// Partial order by favorability to Left: L >= P,N >= R; P and N incomparable.
constexpr bool outcome_ge(Outcome a, Outcome b) {
  if (a == b || a == Outcome::L || b == Outcome::R) return true;
  return false;
}

constexpr Outcome outcome_from(bool left_wins_moving_first,
                               bool right_wins_moving_first) {
  if (left_wins_moving_first) {
    return right_wins_moving_first ? Outcome::N : Outcome::L;
  }
  return right_wins_moving_first ? Outcome::R : Outcome::P;
}

// Left wins when Left moves first.
constexpr bool left_wins_first(Outcome o) { return o == Outcome::L || o == Outcome::N; }
// Right wins when Right moves first.
constexpr bool right_wins_first(Outcome o) { return o == Outcome::R || o == Outcome::N; }

// The outcome of the conjugate game.
constexpr Outcome mirror(Outcome o) {
  switch (o) {
    case Outcome::L: return Outcome::R;
    case Outcome::R: return Outcome::L;
    default: return o;
  }
}

char to_char(Outcome o);
std::string_view to_string(Outcome o);

/// Memoized outcome evaluation over an arena.
///
/// Misère: a player with no move on their turn wins. Normal: a player with no
/// move loses. Caches are indexed by GameId and grow with the arena.
class Outcomes {
 public:
  explicit Outcomes(const Arena& arena) : arena_(arena) {}

  Outcome misere(GameId g);
  Outcome normal(GameId g);

  // o⁻(g + h) without interning the sum. Memoized on the unordered pair, so
  // repeated queries against shared contexts are cheap.
  Outcome misere_sum(GameId g, GameId h);

  std::size_t sum_cache_size() const noexcept { return sum_cache_.size(); }

 private:
  // Bit 0: Left wins moving first, bit 1: Right wins moving first, bit 2: set.
  std::uint8_t misere_bits(GameId g);
  std::uint8_t normal_bits(GameId g);
  std::uint8_t misere_sum_bits(GameId g, GameId h);

  const Arena& arena_;
  std::vector<std::uint8_t> misere_;
  std::vector<std::uint8_t> normal_;
  std::unordered_map<std::uint64_t, std::uint8_t> sum_cache_;
};

/// Misère outcomes of every sum x + y with x drawn from the subpositions of one
/// root set and y from another, computed bottom-up into a dense table.
///
/// Nothing is interned, which keeps sums of large games (hundreds of options
/// on each side) affordable. Cost is O(|X| * edges(Y) + |Y| * edges(X)).
class SumOutcomeTable {
 public:
  SumOutcomeTable(const Arena& arena, std::span<const GameId> row_roots,
                  std::span<const GameId> column_roots);

  // Both arguments must lie in the respective subposition closures.
  Outcome at(GameId row, GameId column) const;

  std::size_t rows() const noexcept { return row_games_.size(); }
  std::size_t columns() const noexcept { return column_games_.size(); }

 private:
  std::size_t row_index(GameId g) const;
  std::size_t column_index(GameId g) const;

  std::vector<GameId> row_games_;
  std::vector<GameId> column_games_;
  std::unordered_map<GameId, std::uint32_t> row_pos_;
  std::unordered_map<GameId, std::uint32_t> column_pos_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace misere
