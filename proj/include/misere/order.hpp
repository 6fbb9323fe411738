#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "misere/arena.hpp"
#include "misere/outcome.hpp"

namespace misere {

enum class WitnessKind : std::uint8_t {
  form_a,                  // o⁻(G+T) <= P and o⁻(H+T) >= N
  form_b,                  // o⁻(G+T) <= N and o⁻(H+T) >= P
  distinguishing_context,  // o⁻(G+T) is not >= o⁻(H+T)
  downlink_context,        // o⁻(G+T) <= P and o⁻(H+T) >= P
};

std::string_view to_string(WitnessKind kind);

/// A context together with the two outcomes it produces. `game` is always the
/// G of the certified statement and `other` the H.
struct Witness {
  WitnessKind kind;
  GameId context;
  GameId game;
  GameId other;
  Outcome game_outcome;
  Outcome other_outcome;

  // Whether the recorded outcomes satisfy the bounds of `kind`.
  bool holds() const;
};

// Which clause of the recursive comparison test rejected G >= H.
enum class FailedCondition : std::uint8_t {
  left_option_downlink,   // G is downlinked to some H^L
  right_option_downlink,  // some G^R is downlinked to H
  left_end_mismatch,      // H is a Left end but G is not
  right_end_mismatch,     // G is a Right end but H is not
};

struct ComparisonFailure {
  FailedCondition condition;
  // The H^L or G^R involved for the two downlink conditions.
  std::optional<GameId> option;
};

struct OrderStats {
  std::uint64_t ge_evaluations = 0;
  std::uint64_t downlink_evaluations = 0;
  std::uint32_t max_depth = 0;
  // Recursive calls whose combined birthday did not drop below the caller's.
  std::uint64_t measure_violations = 0;
};

/// Misère order via downlinks, normal-play order, the trivial order, and
/// verified constructive witnesses for failed comparisons.
///
/// G >= H iff
///   (i)   G is downlinked to no H^L,
///   (ii)  no G^R is downlinked to H,
///   (iii) if H is a Left end then so is G,
///   (iv)  if G is a Right end then so is H;
/// and G is downlinked to H iff no G^L >= H and G >= no H^R.
class Order {
 public:
  Order(Arena& arena, Outcomes& outcomes) : arena_(arena), outcomes_(outcomes) {}

  bool ge_misere(GameId g, GameId h);
  bool downlinked(GameId g, GameId h);
  bool eq_misere(GameId g, GameId h) { return ge_misere(g, h) && ge_misere(h, g); }

  bool ge_normal(GameId g, GameId h);
  bool eq_normal(GameId g, GameId h) { return ge_normal(g, h) && ge_normal(h, g); }

  // Left options of g contain those of h, Right options of g are contained in
  // those of h, and both end flags agree. No recursion.
  bool ge_trivial(GameId g, GameId h) const;

  // First failing clause in the order (i), (ii), (iii), (iv); nullopt when
  // ge_misere(g, h) holds.
  std::optional<ComparisonFailure> first_failure(GameId g, GameId h);

  // The following throw ContractError when g >= h (respectively when g is not
  // downlinked to h) and VerificationError if a constructed context does not
  // produce the promised outcomes.
  Witness witness_a(GameId g, GameId h);
  Witness witness_b(GameId g, GameId h);
  Witness downlink_witness(GameId g, GameId h);
  Witness distinguish(GameId g, GameId h);

  // {(H^R)° | {· | (G^L)°}}: when H is a Left end and G is not, this context
  // gives o⁻(G+T) <= N and o⁻(H+T) >= P.
  GameId end_mismatch_context(GameId g, GameId h);
  // Given T with o⁻(G+T) <= P, o⁻(H+T) >= N: {(H^R)° | T}.
  GameId form_a_to_b(GameId h, GameId t);
  // Given U with o⁻(G+U) <= N, o⁻(H+U) >= P: {U | (G^L)°}.
  GameId form_b_to_a(GameId g, GameId u);

  Witness certify(WitnessKind kind, GameId context, GameId g, GameId h);

  const OrderStats& stats() const noexcept { return stats_; }
  void reset_stats() { stats_ = {}; }

  Arena& arena() noexcept { return arena_; }
  Outcomes& outcomes() noexcept { return outcomes_; }

 private:
  bool ge_impl(GameId g, GameId h, std::uint32_t parent_measure, std::uint32_t depth);
  bool down_impl(GameId g, GameId h, std::uint32_t parent_measure, std::uint32_t depth);
  void note_call(GameId g, GameId h, std::uint32_t parent_measure, std::uint32_t depth);
  Witness checked(Witness w) const;

  Arena& arena_;
  Outcomes& outcomes_;
  std::unordered_map<std::uint64_t, bool> ge_cache_;
  std::unordered_map<std::uint64_t, bool> down_cache_;
  std::unordered_map<std::uint64_t, bool> normal_cache_;
  std::unordered_map<std::uint64_t, Witness> witness_a_cache_;
  std::unordered_map<std::uint64_t, Witness> witness_b_cache_;
  std::unordered_map<std::uint64_t, Witness> downlink_cache_;
  OrderStats stats_;
};

}  // namespace misere
