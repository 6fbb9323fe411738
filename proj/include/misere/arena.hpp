#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

namespace misere {

// Handle to an interned game. Ids are only meaningful for the arena that
// issued them; options always carry smaller ids than their parents.
struct GameId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(GameId, GameId) = default;
};

struct GameNode {
  std::vector<GameId> left;
  std::vector<GameId> right;

  friend bool operator==(const GameNode&, const GameNode&) = default;
};

// Packs an ordered pair of ids into a single memo key.
constexpr std::uint64_t pair_key(GameId a, GameId b) {
  return (std::uint64_t{a.index} << 32) | b.index;
}

/// Append-only store of structurally interned, finite, loopfree games.
///
/// Every node is stored once: interning a structure that already exists
/// returns the existing id. Option lists are kept sorted under a total
/// structural order (birthday first, then the option lists compared
/// lexicographically, Left before Right), so the node layout does not depend
/// on the order in which games were built.
///
/// Not thread-safe for writers. Reads of already interned ids are pure.
class Arena {
 public:
  Arena();

  Arena(const Arena&) = delete;
  Arena& operator=(const Arena&) = delete;

  // Sorts and deduplicates both option sets. Throws MalformedReference if any
  // option is not a valid id of this arena.
  GameId intern(std::vector<GameId> left, std::vector<GameId> right);

  std::size_t size() const noexcept { return nodes_.size(); }
  bool valid(GameId g) const noexcept { return g.index < nodes_.size(); }
  void check(GameId g) const;

  const GameNode& node(GameId g) const;
  std::span<const GameId> left(GameId g) const { return node(g).left; }
  std::span<const GameId> right(GameId g) const { return node(g).right; }

  bool is_left_end(GameId g) const { return node(g).left.empty(); }
  bool is_right_end(GameId g) const { return node(g).right.empty(); }
  bool is_zero(GameId g) const { return is_left_end(g) && is_right_end(g); }

  std::uint32_t birthday(GameId g) const;
  // Number of nodes of the fully expanded game tree, saturating at 2^64-1.
  std::uint64_t tree_size(GameId g) const;

  GameId zero() const { return zero_; }
  GameId star() const { return star_; }
  GameId one() const { return one_; }
  GameId one_bar() const { return one_bar_; }

  // Formal disjunctive sum; memoized on the unordered pair.
  GameId sum(GameId g, GameId h);
  GameId sum(std::span<const GameId> terms);
  // Swaps Left and Right at every level.
  GameId conjugate(GameId g);
  // G° : {(G^R)° | (G^L)°} with the end cases patched so it is never a Right end.
  GameId adjoint(GameId g);
  std::vector<GameId> adjoints(std::span<const GameId> games);

  // Total structural order used for option lists.
  std::strong_ordering compare(GameId a, GameId b) const;
  bool structurally_less(GameId a, GameId b) const { return compare(a, b) < 0; }

  // g together with every game reachable from it, ascending by id (and hence
  // options before parents).
  std::vector<GameId> subpositions(GameId g) const;
  std::vector<GameId> subpositions(std::span<const GameId> roots) const;

 private:
  struct NodeHash {
    std::size_t operator()(const GameNode& n) const noexcept;
  };

  void sort_options(std::vector<GameId>& options) const;

  std::vector<GameNode> nodes_;
  std::vector<std::uint32_t> birthday_;
  std::vector<std::uint64_t> tree_size_;
  std::unordered_map<GameNode, GameId, NodeHash> intern_table_;

  std::unordered_map<std::uint64_t, GameId> sum_cache_;
  std::unordered_map<std::uint32_t, GameId> conjugate_cache_;
  std::unordered_map<std::uint32_t, GameId> adjoint_cache_;

  GameId zero_, star_, one_, one_bar_;
};

}  // namespace misere

template <>
struct std::hash<misere::GameId> {
  std::size_t operator()(misere::GameId g) const noexcept {
    return std::hash<std::uint32_t>{}(g.index);
  }
};
