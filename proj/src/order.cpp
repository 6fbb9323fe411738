#include "misere/order.hpp"

#include <algorithm>
#include <string>

#include "misere/errors.hpp"

namespace misere {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::form_a: return "form_a";
    case WitnessKind::form_b: return "form_b";
    case WitnessKind::distinguishing_context: return "distinguishing_context";
    case WitnessKind::downlink_context: return "downlink_context";
  }
  return "?";
}

bool Witness::holds() const {
  switch (kind) {
    case WitnessKind::form_a:
      return outcome_ge(Outcome::P, game_outcome) && outcome_ge(other_outcome, Outcome::N);
    case WitnessKind::form_b:
      return outcome_ge(Outcome::N, game_outcome) && outcome_ge(other_outcome, Outcome::P);
    case WitnessKind::distinguishing_context:
      return !outcome_ge(game_outcome, other_outcome);
    case WitnessKind::downlink_context:
      return outcome_ge(Outcome::P, game_outcome) && outcome_ge(other_outcome, Outcome::P);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Relations

void Order::note_call(GameId g, GameId h, std::uint32_t parent_measure,
                      std::uint32_t depth) {
  const std::uint32_t measure = arena_.birthday(g) + arena_.birthday(h);
  if (measure >= parent_measure) ++stats_.measure_violations;
  stats_.max_depth = std::max(stats_.max_depth, depth);
}

bool Order::ge_misere(GameId g, GameId h) {
  arena_.check(g);
  arena_.check(h);
  return ge_impl(g, h, UINT32_MAX, 0);
}

bool Order::downlinked(GameId g, GameId h) {
  arena_.check(g);
  arena_.check(h);
  return down_impl(g, h, UINT32_MAX, 0);
}

bool Order::ge_impl(GameId g, GameId h, std::uint32_t parent_measure,
                    std::uint32_t depth) {
  const auto key = pair_key(g, h);
  if (auto it = ge_cache_.find(key); it != ge_cache_.end()) return it->second;
  ++stats_.ge_evaluations;
  note_call(g, h, parent_measure, depth);
  const std::uint32_t measure = arena_.birthday(g) + arena_.birthday(h);

  bool result = true;
  if (arena_.is_left_end(h) && !arena_.is_left_end(g)) result = false;
  if (result && arena_.is_right_end(g) && !arena_.is_right_end(h)) result = false;
  if (result) {
    for (GameId hl : arena_.left(h)) {
      if (down_impl(g, hl, measure, depth + 1)) {
        result = false;
        break;
      }
    }
  }
  if (result) {
    for (GameId gr : arena_.right(g)) {
      if (down_impl(gr, h, measure, depth + 1)) {
        result = false;
        break;
      }
    }
  }
  ge_cache_.emplace(key, result);
  return result;
}

bool Order::down_impl(GameId g, GameId h, std::uint32_t parent_measure,
                      std::uint32_t depth) {
  const auto key = pair_key(g, h);
  if (auto it = down_cache_.find(key); it != down_cache_.end()) return it->second;
  ++stats_.downlink_evaluations;
  note_call(g, h, parent_measure, depth);
  const std::uint32_t measure = arena_.birthday(g) + arena_.birthday(h);

  bool result = true;
  for (GameId gl : arena_.left(g)) {
    if (ge_impl(gl, h, measure, depth + 1)) {
      result = false;
      break;
    }
  }
  if (result) {
    for (GameId hr : arena_.right(h)) {
      if (ge_impl(g, hr, measure, depth + 1)) {
        result = false;
        break;
      }
    }
  }
  down_cache_.emplace(key, result);
  return result;
}

bool Order::ge_normal(GameId g, GameId h) {
  arena_.check(g);
  arena_.check(h);
  const auto key = pair_key(g, h);
  if (auto it = normal_cache_.find(key); it != normal_cache_.end()) return it->second;
  bool result = true;
  // No G^R <= H and no H^L >= G.
  for (GameId gr : arena_.right(g)) {
    if (ge_normal(h, gr)) {
      result = false;
      break;
    }
  }
  if (result) {
    for (GameId hl : arena_.left(h)) {
      if (ge_normal(hl, g)) {
        result = false;
        break;
      }
    }
  }
  normal_cache_.emplace(key, result);
  return result;
}

bool Order::ge_trivial(GameId g, GameId h) const {
  auto sorted = [](std::span<const GameId> s) {
    std::vector<GameId> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto gl = sorted(arena_.left(g)), hl = sorted(arena_.left(h));
  const auto gr = sorted(arena_.right(g)), hr = sorted(arena_.right(h));
  return std::includes(gl.begin(), gl.end(), hl.begin(), hl.end()) &&
         std::includes(hr.begin(), hr.end(), gr.begin(), gr.end()) &&
         gl.empty() == hl.empty() && gr.empty() == hr.empty();
}

std::optional<ComparisonFailure> Order::first_failure(GameId g, GameId h) {
  for (GameId hl : arena_.left(h)) {
    if (downlinked(g, hl)) return ComparisonFailure{FailedCondition::left_option_downlink, hl};
  }
  for (GameId gr : arena_.right(g)) {
    if (downlinked(gr, h)) return ComparisonFailure{FailedCondition::right_option_downlink, gr};
  }
  if (arena_.is_left_end(h) && !arena_.is_left_end(g)) {
    return ComparisonFailure{FailedCondition::left_end_mismatch, std::nullopt};
  }
  if (arena_.is_right_end(g) && !arena_.is_right_end(h)) {
    return ComparisonFailure{FailedCondition::right_end_mismatch, std::nullopt};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Contexts

GameId Order::end_mismatch_context(GameId g, GameId h) {
  std::vector<GameId> h_right(arena_.right(h).begin(), arena_.right(h).end());
  std::vector<GameId> g_left(arena_.left(g).begin(), arena_.left(g).end());
  const GameId inner = arena_.intern({}, arena_.adjoints(g_left));
  return arena_.intern(arena_.adjoints(h_right), {inner});
}

GameId Order::form_a_to_b(GameId h, GameId t) {
  std::vector<GameId> h_right(arena_.right(h).begin(), arena_.right(h).end());
  return arena_.intern(arena_.adjoints(h_right), {t});
}

GameId Order::form_b_to_a(GameId g, GameId u) {
  std::vector<GameId> g_left(arena_.left(g).begin(), arena_.left(g).end());
  return arena_.intern({u}, arena_.adjoints(g_left));
}

Witness Order::certify(WitnessKind kind, GameId context, GameId g, GameId h) {
  return Witness{kind,
                 context,
                 g,
                 h,
                 outcomes_.misere_sum(g, context),
                 outcomes_.misere_sum(h, context)};
}

Witness Order::checked(Witness w) const {
  if (!w.holds()) {
    throw VerificationError(std::string("constructed ") + std::string(to_string(w.kind)) +
                            " context " + std::to_string(w.context.index) +
                            " does not certify games " + std::to_string(w.game.index) +
                            ", " + std::to_string(w.other.index) + " (outcomes " +
                            to_char(w.game_outcome) + ", " + to_char(w.other_outcome) + ")");
  }
  return w;
}

Witness Order::witness_a(GameId g, GameId h) {
  const auto key = pair_key(g, h);
  if (auto it = witness_a_cache_.find(key); it != witness_a_cache_.end()) return it->second;
  const auto failure = first_failure(g, h);
  if (!failure) throw ContractError("witness_a: the first game is >= the second");

  GameId t;
  switch (failure->condition) {
    case FailedCondition::left_option_downlink:
      t = downlink_witness(g, *failure->option).context;
      break;
    case FailedCondition::right_option_downlink:
      t = form_b_to_a(g, downlink_witness(*failure->option, h).context);
      break;
    case FailedCondition::left_end_mismatch:
      t = form_b_to_a(g, end_mismatch_context(g, h));
      break;
    case FailedCondition::right_end_mismatch: {
      // Mirror image of the Left-end construction.
      const GameId mirrored =
          end_mismatch_context(arena_.conjugate(h), arena_.conjugate(g));
      t = arena_.conjugate(mirrored);
      break;
    }
  }
  const Witness w = checked(certify(WitnessKind::form_a, t, g, h));
  witness_a_cache_.emplace(key, w);
  return w;
}

Witness Order::witness_b(GameId g, GameId h) {
  const auto key = pair_key(g, h);
  if (auto it = witness_b_cache_.find(key); it != witness_b_cache_.end()) return it->second;
  const auto failure = first_failure(g, h);
  if (!failure) throw ContractError("witness_b: the first game is >= the second");

  GameId u;
  switch (failure->condition) {
    case FailedCondition::left_option_downlink:
      u = form_a_to_b(h, downlink_witness(g, *failure->option).context);
      break;
    case FailedCondition::right_option_downlink:
      u = downlink_witness(*failure->option, h).context;
      break;
    case FailedCondition::left_end_mismatch:
      u = end_mismatch_context(g, h);
      break;
    case FailedCondition::right_end_mismatch: {
      const GameId mirrored =
          end_mismatch_context(arena_.conjugate(h), arena_.conjugate(g));
      u = form_a_to_b(h, arena_.conjugate(mirrored));
      break;
    }
  }
  const Witness w = checked(certify(WitnessKind::form_b, u, g, h));
  witness_b_cache_.emplace(key, w);
  return w;
}

Witness Order::downlink_witness(GameId g, GameId h) {
  const auto key = pair_key(g, h);
  if (auto it = downlink_cache_.find(key); it != downlink_cache_.end()) return it->second;
  if (!downlinked(g, h)) {
    throw ContractError("downlink_witness: the first game is not downlinked to the second");
  }

  const GameNode gn = arena_.node(g);
  const GameNode hn = arena_.node(h);
  const bool g_zero = arena_.is_zero(g);
  const bool h_zero = arena_.is_zero(h);

  GameId t;
  if (g_zero && h_zero) {
    t = arena_.star();
  } else if (g_zero && hn.right.empty()) {
    t = arena_.intern({arena_.zero()}, arena_.adjoints(hn.left));
  } else if (h_zero && gn.left.empty()) {
    t = arena_.intern(arena_.adjoints(gn.right), {arena_.zero()});
  } else {
    // {Y_j, (G^R)° | X_i, (H^L)°}
    std::vector<GameId> left = arena_.adjoints(gn.right);
    std::vector<GameId> right = arena_.adjoints(hn.left);
    for (GameId gl : gn.left) right.push_back(witness_a(gl, h).context);
    for (GameId hr : hn.right) left.push_back(witness_b(g, hr).context);
    t = arena_.intern(std::move(left), std::move(right));
  }
  const Witness w = checked(certify(WitnessKind::downlink_context, t, g, h));
  downlink_cache_.emplace(key, w);
  return w;
}

Witness Order::distinguish(GameId g, GameId h) {
  const Witness a = witness_a(g, h);
  return checked(certify(WitnessKind::distinguishing_context, a.context, g, h));
}

}  // namespace misere
