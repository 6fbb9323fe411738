#include "misere/canonical.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "misere/errors.hpp"

namespace misere {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::removed_dominated_left: return "removed_dominated_left";
    case StepKind::removed_dominated_right: return "removed_dominated_right";
    case StepKind::bypassed_left: return "bypassed_left";
    case StepKind::bypassed_right: return "bypassed_right";
  }
  return "?";
}

namespace {

std::vector<GameId> copy_of(std::span<const GameId> s) { return {s.begin(), s.end()}; }

bool contains(std::span<const GameId> s, GameId g) {
  return std::find(s.begin(), s.end(), g) != s.end();
}

}  // namespace

std::vector<GameId> Canonicalizer::dominated_left(GameId g) {
  const auto options = copy_of(arena_.left(g));
  std::vector<GameId> out;
  for (GameId a : options) {
    for (GameId b : options) {
      if (a != b && order_.ge_misere(b, a)) {
        out.push_back(a);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GameId> Canonicalizer::dominated_right(GameId g) {
  const auto options = copy_of(arena_.right(g));
  std::vector<GameId> out;
  for (GameId a : options) {
    for (GameId b : options) {
      if (a != b && order_.ge_misere(a, b)) {
        out.push_back(a);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Reversal> Canonicalizer::reversible_left(GameId g) {
  std::vector<Reversal> out;
  for (GameId gl : copy_of(arena_.left(g))) {
    for (GameId glr : copy_of(arena_.right(gl))) {
      if (order_.ge_misere(g, glr)) out.push_back({gl, glr});
    }
  }
  return out;
}

std::vector<Reversal> Canonicalizer::reversible_right(GameId g) {
  std::vector<Reversal> out;
  for (GameId gr : copy_of(arena_.right(g))) {
    for (GameId grl : copy_of(arena_.left(gr))) {
      if (order_.ge_misere(grl, g)) out.push_back({gr, grl});
    }
  }
  return out;
}

GameId Canonicalizer::bypass_left(GameId g, GameId option, GameId through) {
  if (!contains(arena_.left(g), option) || !contains(arena_.right(option), through) ||
      !order_.ge_misere(g, through)) {
    throw ContractError("bypass_left: option is not reversible through the given game");
  }
  std::vector<GameId> left;
  for (GameId gl : copy_of(arena_.left(g))) {
    if (gl != option) left.push_back(gl);
  }
  for (GameId x : copy_of(arena_.left(through))) left.push_back(x);
  return arena_.intern(std::move(left), copy_of(arena_.right(g)));
}

GameId Canonicalizer::bypass_right(GameId g, GameId option, GameId through) {
  if (!contains(arena_.right(g), option) || !contains(arena_.left(option), through) ||
      !order_.ge_misere(through, g)) {
    throw ContractError("bypass_right: option is not reversible through the given game");
  }
  std::vector<GameId> right;
  for (GameId gr : copy_of(arena_.right(g))) {
    if (gr != option) right.push_back(gr);
  }
  for (GameId x : copy_of(arena_.right(through))) right.push_back(x);
  return arena_.intern(copy_of(arena_.left(g)), std::move(right));
}

GameId Canonicalizer::remove_left(GameId g, GameId option) {
  std::vector<GameId> left;
  for (GameId gl : copy_of(arena_.left(g))) {
    if (gl != option) left.push_back(gl);
  }
  return arena_.intern(std::move(left), copy_of(arena_.right(g)));
}

GameId Canonicalizer::remove_right(GameId g, GameId option) {
  std::vector<GameId> right;
  for (GameId gr : copy_of(arena_.right(g))) {
    if (gr != option) right.push_back(gr);
  }
  return arena_.intern(copy_of(arena_.left(g)), std::move(right));
}

GameId Canonicalizer::apply(GameId g, const SimplificationStep& step) {
  switch (step.kind) {
    case StepKind::bypassed_left: return bypass_left(g, step.target, step.via);
    case StepKind::bypassed_right: return bypass_right(g, step.target, step.via);
    case StepKind::removed_dominated_left:
      if (!contains(arena_.left(g), step.target) || !contains(arena_.left(g), step.via) ||
          step.target == step.via || !order_.ge_misere(step.via, step.target)) {
        throw ContractError("removal of a Left option that is not dominated");
      }
      return remove_left(g, step.target);
    case StepKind::removed_dominated_right:
      if (!contains(arena_.right(g), step.target) || !contains(arena_.right(g), step.via) ||
          step.target == step.via || !order_.ge_misere(step.target, step.via)) {
        throw ContractError("removal of a Right option that is not dominated");
      }
      return remove_right(g, step.target);
  }
  return g;
}

std::optional<SimplificationStep> Canonicalizer::next_step(GameId g) {
  if (auto r = reversible_left(g); !r.empty()) {
    return SimplificationStep{StepKind::bypassed_left, r.front().option, r.front().through};
  }
  if (auto r = reversible_right(g); !r.empty()) {
    return SimplificationStep{StepKind::bypassed_right, r.front().option, r.front().through};
  }
  const auto left = copy_of(arena_.left(g));
  for (GameId a : left) {
    for (GameId b : left) {
      if (a != b && order_.ge_misere(b, a)) {
        return SimplificationStep{StepKind::removed_dominated_left, a, b};
      }
    }
  }
  const auto right = copy_of(arena_.right(g));
  for (GameId a : right) {
    for (GameId b : right) {
      if (a != b && order_.ge_misere(a, b)) {
        return SimplificationStep{StepKind::removed_dominated_right, a, b};
      }
    }
  }
  return std::nullopt;
}

std::vector<SimplificationStep> Canonicalizer::all_steps(GameId g) {
  std::vector<SimplificationStep> out;
  for (const Reversal& r : reversible_left(g)) {
    out.push_back({StepKind::bypassed_left, r.option, r.through});
  }
  for (const Reversal& r : reversible_right(g)) {
    out.push_back({StepKind::bypassed_right, r.option, r.through});
  }
  const auto left = copy_of(arena_.left(g));
  for (GameId a : left) {
    for (GameId b : left) {
      if (a != b && order_.ge_misere(b, a)) out.push_back({StepKind::removed_dominated_left, a, b});
    }
  }
  const auto right = copy_of(arena_.right(g));
  for (GameId a : right) {
    for (GameId b : right) {
      if (a != b && order_.ge_misere(a, b)) out.push_back({StepKind::removed_dominated_right, a, b});
    }
  }
  return out;
}

GameId Canonicalizer::with_canonical_options(GameId g) {
  const GameNode n = arena_.node(g);
  std::vector<GameId> left, right;
  for (GameId x : n.left) left.push_back(canonical(x));
  for (GameId x : n.right) right.push_back(canonical(x));
  return arena_.intern(std::move(left), std::move(right));
}

namespace {

// Each bypass shrinks the formal tree; each removal shrinks the option count.
void check_progress(const Arena& arena, GameId before, GameId after, StepKind kind) {
  constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();
  const bool bypass = kind == StepKind::bypassed_left || kind == StepKind::bypassed_right;
  if (bypass) {
    if (arena.tree_size(before) != saturated && arena.tree_size(after) >= arena.tree_size(before)) {
      throw std::logic_error("bypass did not shrink the game tree");
    }
  } else {
    const auto count = [&](GameId g) { return arena.left(g).size() + arena.right(g).size(); };
    if (count(after) >= count(before)) {
      throw std::logic_error("removing a dominated option did not shrink the option count");
    }
  }
}

}  // namespace

const std::pair<GameId, SimplificationTrace>& Canonicalizer::canonicalize(GameId g) {
  arena_.check(g);
  if (auto it = cache_.find(g.index); it != cache_.end()) return it->second;

  SimplificationTrace trace{g, with_canonical_options(g), {}};
  GameId current = trace.start;
  while (auto step = next_step(current)) {
    const GameId next = apply(current, *step);
    check_progress(arena_, current, next, step->kind);
    trace.steps.push_back(*step);
    current = next;
  }
  return cache_.emplace(g.index, std::pair{current, std::move(trace)}).first->second;
}

std::pair<GameId, SimplificationTrace> Canonicalizer::canonicalize_shuffled(GameId g,
                                                                           std::mt19937_64& rng) {
  arena_.check(g);
  SimplificationTrace trace{g, with_canonical_options(g), {}};
  GameId current = trace.start;
  for (auto steps = all_steps(current); !steps.empty(); steps = all_steps(current)) {
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    const SimplificationStep step = steps[pick(rng)];
    const GameId next = apply(current, step);
    check_progress(arena_, current, next, step.kind);
    trace.steps.push_back(step);
    current = next;
  }
  return {current, std::move(trace)};
}

GameId Canonicalizer::replay(const SimplificationTrace& trace) {
  GameId current = trace.start;
  for (const SimplificationStep& step : trace.steps) current = apply(current, step);
  return current;
}

bool Canonicalizer::is_simplification_free(GameId g) {
  for (GameId x : arena_.subpositions(g)) {
    if (!dominated_left(x).empty() || !dominated_right(x).empty() ||
        !reversible_left(x).empty() || !reversible_right(x).empty()) {
      return false;
    }
  }
  return true;
}

}  // namespace misere
