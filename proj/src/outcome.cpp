#include "misere/outcome.hpp"

#include <algorithm>
#include <string>

#include "misere/errors.hpp"

namespace misere {

namespace {

constexpr std::uint8_t kLeftWins = 1;
constexpr std::uint8_t kRightWins = 2;
constexpr std::uint8_t kKnown = 4;

Outcome from_bits(std::uint8_t b) {
  return outcome_from((b & kLeftWins) != 0, (b & kRightWins) != 0);
}

}  // namespace

char to_char(Outcome o) {
  switch (o) {
    case Outcome::L: return 'L';
    case Outcome::R: return 'R';
    case Outcome::P: return 'P';
    case Outcome::N: return 'N';
  }
  return '?';
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::L: return "L";
    case Outcome::R: return "R";
    case Outcome::P: return "P";
    case Outcome::N: return "N";
  }
  return "?";
}

std::uint8_t Outcomes::misere_bits(GameId g) {
  arena_.check(g);
  if (misere_.size() <= g.index) misere_.resize(arena_.size(), 0);
  if (misere_[g.index] & kKnown) return misere_[g.index];

  const GameNode& n = arena_.node(g);
  // Moving first with no move available is a misère win.
  bool left = n.left.empty();
  for (std::size_t i = 0; !left && i < n.left.size(); ++i) {
    left = (misere_bits(n.left[i]) & kRightWins) == 0;
  }
  bool right = n.right.empty();
  for (std::size_t i = 0; !right && i < n.right.size(); ++i) {
    right = (misere_bits(n.right[i]) & kLeftWins) == 0;
  }
  const std::uint8_t bits = kKnown | (left ? kLeftWins : 0) | (right ? kRightWins : 0);
  misere_[g.index] = bits;
  return bits;
}

std::uint8_t Outcomes::normal_bits(GameId g) {
  arena_.check(g);
  if (normal_.size() <= g.index) normal_.resize(arena_.size(), 0);
  if (normal_[g.index] & kKnown) return normal_[g.index];

  const GameNode& n = arena_.node(g);
  bool left = false;
  for (std::size_t i = 0; !left && i < n.left.size(); ++i) {
    left = (normal_bits(n.left[i]) & kRightWins) == 0;
  }
  bool right = false;
  for (std::size_t i = 0; !right && i < n.right.size(); ++i) {
    right = (normal_bits(n.right[i]) & kLeftWins) == 0;
  }
  const std::uint8_t bits = kKnown | (left ? kLeftWins : 0) | (right ? kRightWins : 0);
  normal_[g.index] = bits;
  return bits;
}

Outcome Outcomes::misere(GameId g) { return from_bits(misere_bits(g)); }

Outcome Outcomes::normal(GameId g) { return from_bits(normal_bits(g)); }

std::uint8_t Outcomes::misere_sum_bits(GameId g, GameId h) {
  if (arena_.is_zero(g)) return misere_bits(h);
  if (arena_.is_zero(h)) return misere_bits(g);
  if (h < g) std::swap(g, h);
  const auto key = pair_key(g, h);
  if (auto it = sum_cache_.find(key); it != sum_cache_.end()) return it->second;

  const GameNode& a = arena_.node(g);
  const GameNode& b = arena_.node(h);
  bool left = a.left.empty() && b.left.empty();
  for (std::size_t i = 0; !left && i < a.left.size(); ++i) {
    left = (misere_sum_bits(a.left[i], h) & kRightWins) == 0;
  }
  for (std::size_t i = 0; !left && i < b.left.size(); ++i) {
    left = (misere_sum_bits(g, b.left[i]) & kRightWins) == 0;
  }
  bool right = a.right.empty() && b.right.empty();
  for (std::size_t i = 0; !right && i < a.right.size(); ++i) {
    right = (misere_sum_bits(a.right[i], h) & kLeftWins) == 0;
  }
  for (std::size_t i = 0; !right && i < b.right.size(); ++i) {
    right = (misere_sum_bits(g, b.right[i]) & kLeftWins) == 0;
  }
  const std::uint8_t bits = kKnown | (left ? kLeftWins : 0) | (right ? kRightWins : 0);
  sum_cache_.emplace(key, bits);
  return bits;
}

Outcome Outcomes::misere_sum(GameId g, GameId h) {
  arena_.check(g);
  arena_.check(h);
  return from_bits(misere_sum_bits(g, h));
}

// ---------------------------------------------------------------------------

namespace {

struct LocalGraph {
  std::vector<std::vector<std::uint32_t>> left;
  std::vector<std::vector<std::uint32_t>> right;
};

LocalGraph localize(const Arena& arena, const std::vector<GameId>& games,
                    const std::unordered_map<GameId, std::uint32_t>& pos) {
  LocalGraph out;
  out.left.resize(games.size());
  out.right.resize(games.size());
  for (std::size_t i = 0; i < games.size(); ++i) {
    for (GameId o : arena.left(games[i])) out.left[i].push_back(pos.at(o));
    for (GameId o : arena.right(games[i])) out.right[i].push_back(pos.at(o));
  }
  return out;
}

}  // namespace

SumOutcomeTable::SumOutcomeTable(const Arena& arena,
                                 std::span<const GameId> row_roots,
                                 std::span<const GameId> column_roots)
    : row_games_(arena.subpositions(row_roots)),
      column_games_(arena.subpositions(column_roots)) {
  for (std::size_t i = 0; i < row_games_.size(); ++i) {
    row_pos_.emplace(row_games_[i], static_cast<std::uint32_t>(i));
  }
  for (std::size_t j = 0; j < column_games_.size(); ++j) {
    column_pos_.emplace(column_games_[j], static_cast<std::uint32_t>(j));
  }
  const LocalGraph rows = localize(arena, row_games_, row_pos_);
  const LocalGraph cols = localize(arena, column_games_, column_pos_);

  const std::size_t n = row_games_.size();
  const std::size_t m = column_games_.size();
  bits_.assign(n * m, 0);
  // Ids ascend topologically, so every option pair is filled before its parent.
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t* row = &bits_[i * m];
    for (std::size_t j = 0; j < m; ++j) {
      bool left = rows.left[i].empty() && cols.left[j].empty();
      for (std::size_t k = 0; !left && k < rows.left[i].size(); ++k) {
        left = (bits_[rows.left[i][k] * m + j] & kRightWins) == 0;
      }
      for (std::size_t k = 0; !left && k < cols.left[j].size(); ++k) {
        left = (row[cols.left[j][k]] & kRightWins) == 0;
      }
      bool right = rows.right[i].empty() && cols.right[j].empty();
      for (std::size_t k = 0; !right && k < rows.right[i].size(); ++k) {
        right = (bits_[rows.right[i][k] * m + j] & kLeftWins) == 0;
      }
      for (std::size_t k = 0; !right && k < cols.right[j].size(); ++k) {
        right = (row[cols.right[j][k]] & kLeftWins) == 0;
      }
      row[j] = static_cast<std::uint8_t>((left ? kLeftWins : 0) | (right ? kRightWins : 0));
    }
  }
}

std::size_t SumOutcomeTable::row_index(GameId g) const {
  auto it = row_pos_.find(g);
  if (it == row_pos_.end()) {
    throw MalformedReference("game " + std::to_string(g.index) +
                             " is not a row subposition of this table");
  }
  return it->second;
}

std::size_t SumOutcomeTable::column_index(GameId g) const {
  auto it = column_pos_.find(g);
  if (it == column_pos_.end()) {
    throw MalformedReference("game " + std::to_string(g.index) +
                             " is not a column subposition of this table");
  }
  return it->second;
}

Outcome SumOutcomeTable::at(GameId row, GameId column) const {
  return from_bits(bits_[row_index(row) * column_games_.size() + column_index(column)]);
}

}  // namespace misere
