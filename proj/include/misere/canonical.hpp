#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "misere/arena.hpp"
#include "misere/order.hpp"

namespace misere {

enum class StepKind : std::uint8_t {
  removed_dominated_left,
  removed_dominated_right,
  bypassed_left,
  bypassed_right,
};

std::string_view to_string(StepKind kind);

struct SimplificationStep {
  StepKind kind;
  GameId target;  // the option removed or bypassed
  GameId via;     // the dominating option, or the reversing option bypassed through
};

// Top-level audit log of a canonicalization. `start` is the input with each
// option replaced by its canonical form; replaying `steps` from `start`
// reproduces the output.
struct SimplificationTrace {
  GameId input;
  GameId start;
  std::vector<SimplificationStep> steps;
};

struct Reversal {
  GameId option;
  GameId through;

  friend bool operator==(const Reversal&, const Reversal&) = default;
};

/// Canonical forms: eliminate dominated options and bypass reversible ones
/// until neither remains.
class Canonicalizer {
 public:
  explicit Canonicalizer(Order& order) : order_(order), arena_(order.arena()) {}

  // Left options g^L with some other g^L' >= g^L (ascending by id).
  std::vector<GameId> dominated_left(GameId g);
  // Right options g^R with some other g^R' <= g^R.
  std::vector<GameId> dominated_right(GameId g);
  // (g^L, g^LR) with g >= g^LR.
  std::vector<Reversal> reversible_left(GameId g);
  // (g^R, g^RL) with g^RL >= g.
  std::vector<Reversal> reversible_right(GameId g);

  // Replace `option` by the Left options of `through`. Throws ContractError
  // unless (option, through) is a Left reversal of g.
  GameId bypass_left(GameId g, GameId option, GameId through);
  GameId bypass_right(GameId g, GameId option, GameId through);

  // Memoized. Canonicalizes the options, then bypasses reversible Left
  // options, then Right ones, then removes dominated options, repeating until
  // nothing applies.
  const std::pair<GameId, SimplificationTrace>& canonicalize(GameId g);
  GameId canonical(GameId g) { return canonicalize(g).first; }

  // Same fixpoint, but each round applies one simplification chosen uniformly
  // among all applicable ones. Options still go through the memoized path.
  std::pair<GameId, SimplificationTrace> canonicalize_shuffled(GameId g, std::mt19937_64& rng);

  // Applies a trace's steps starting from trace.start.
  GameId replay(const SimplificationTrace& trace);

  bool is_simplification_free(GameId g);

 private:
  GameId remove_left(GameId g, GameId option);
  GameId remove_right(GameId g, GameId option);
  GameId with_canonical_options(GameId g);
  GameId apply(GameId g, const SimplificationStep& step);
  std::optional<SimplificationStep> next_step(GameId g);
  std::vector<SimplificationStep> all_steps(GameId g);

  Order& order_;
  Arena& arena_;
  std::unordered_map<std::uint32_t, std::pair<GameId, SimplificationTrace>> cache_;
};

}  // namespace misere
