#include "misere/arena.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "misere/errors.hpp"

namespace misere {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

}  // namespace

std::size_t Arena::NodeHash::operator()(const GameNode& n) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ n.left.size();
  auto mix = [&h](std::uint32_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (GameId g : n.left) mix(g.index);
  mix(0xffffffffu);
  for (GameId g : n.right) mix(g.index);
  return h;
}

Arena::Arena() {
  zero_ = intern({}, {});
  star_ = intern({zero_}, {zero_});
  one_ = intern({zero_}, {});
  one_bar_ = intern({}, {zero_});
}

void Arena::check(GameId g) const {
  if (!valid(g)) {
    throw MalformedReference("game id " + std::to_string(g.index) +
                             " is not interned (arena holds " +
                             std::to_string(nodes_.size()) + " nodes)");
  }
}

const GameNode& Arena::node(GameId g) const {
  check(g);
  return nodes_[g.index];
}

std::uint32_t Arena::birthday(GameId g) const {
  check(g);
  return birthday_[g.index];
}

std::uint64_t Arena::tree_size(GameId g) const {
  check(g);
  return tree_size_[g.index];
}

std::strong_ordering Arena::compare(GameId a, GameId b) const {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = birthday(a) <=> birthday(b); c != 0) return c;
  const GameNode& x = nodes_[a.index];
  const GameNode& y = nodes_[b.index];
  auto lex = [this](const std::vector<GameId>& p, const std::vector<GameId>& q) {
    const std::size_t n = std::min(p.size(), q.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = compare(p[i], q[i]); c != 0) return c;
    }
    return p.size() <=> q.size();
  };
  if (auto c = lex(x.left, y.left); c != 0) return c;
  return lex(x.right, y.right);
}

void Arena::sort_options(std::vector<GameId>& options) const {
  for (GameId g : options) check(g);
  std::sort(options.begin(), options.end());
  options.erase(std::unique(options.begin(), options.end()), options.end());
  std::sort(options.begin(), options.end(),
            [this](GameId a, GameId b) { return structurally_less(a, b); });
}

GameId Arena::intern(std::vector<GameId> left, std::vector<GameId> right) {
  sort_options(left);
  sort_options(right);
  GameNode key{std::move(left), std::move(right)};
  if (auto it = intern_table_.find(key); it != intern_table_.end()) {
    return it->second;
  }

  std::uint32_t day = 0;
  std::uint64_t size = 1;
  for (const auto* side : {&key.left, &key.right}) {
    for (GameId o : *side) {
      day = std::max(day, birthday_[o.index] + 1);
      size = saturating_add(size, tree_size_[o.index]);
    }
  }

  const GameId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(key);
  birthday_.push_back(day);
  tree_size_.push_back(size);
  intern_table_.emplace(std::move(key), id);
  return id;
}

GameId Arena::sum(GameId g, GameId h) {
  check(g);
  check(h);
  if (is_zero(g)) return h;
  if (is_zero(h)) return g;
  const auto key = pair_key(std::min(g, h), std::max(g, h));
  if (auto it = sum_cache_.find(key); it != sum_cache_.end()) return it->second;

  // Copies: recursive interning may reallocate nodes_.
  const GameNode a = nodes_[g.index];
  const GameNode b = nodes_[h.index];
  std::vector<GameId> left, right;
  left.reserve(a.left.size() + b.left.size());
  right.reserve(a.right.size() + b.right.size());
  for (GameId x : a.left) left.push_back(sum(x, h));
  for (GameId x : b.left) left.push_back(sum(g, x));
  for (GameId x : a.right) right.push_back(sum(x, h));
  for (GameId x : b.right) right.push_back(sum(g, x));

  const GameId result = intern(std::move(left), std::move(right));
  sum_cache_.emplace(key, result);
  return result;
}

GameId Arena::sum(std::span<const GameId> terms) {
  GameId total = zero_;
  for (GameId t : terms) total = sum(total, t);
  return total;
}

GameId Arena::conjugate(GameId g) {
  check(g);
  if (auto it = conjugate_cache_.find(g.index); it != conjugate_cache_.end()) {
    return it->second;
  }
  const GameNode n = nodes_[g.index];
  std::vector<GameId> left, right;
  for (GameId x : n.right) left.push_back(conjugate(x));
  for (GameId x : n.left) right.push_back(conjugate(x));
  const GameId result = intern(std::move(left), std::move(right));
  conjugate_cache_.emplace(g.index, result);
  conjugate_cache_.emplace(result.index, g);
  return result;
}

std::vector<GameId> Arena::adjoints(std::span<const GameId> games) {
  const std::vector<GameId> copy(games.begin(), games.end());
  std::vector<GameId> out;
  out.reserve(copy.size());
  for (GameId x : copy) out.push_back(adjoint(x));
  return out;
}

GameId Arena::adjoint(GameId g) {
  check(g);
  if (auto it = adjoint_cache_.find(g.index); it != adjoint_cache_.end()) {
    return it->second;
  }
  GameId result;
  if (is_zero(g)) {
    result = star_;
  } else {
    const GameNode n = nodes_[g.index];
    std::vector<GameId> left = adjoints(n.right);
    std::vector<GameId> right = adjoints(n.left);
    if (n.left.empty()) right = {zero_};
    if (n.right.empty()) left = {zero_};
    result = intern(std::move(left), std::move(right));
  }
  adjoint_cache_.emplace(g.index, result);
  return result;
}

std::vector<GameId> Arena::subpositions(GameId g) const {
  return subpositions(std::span<const GameId>(&g, 1));
}

std::vector<GameId> Arena::subpositions(std::span<const GameId> roots) const {
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<GameId> stack;
  for (GameId r : roots) {
    check(r);
    if (!seen[r.index]) {
      seen[r.index] = 1;
      stack.push_back(r);
    }
  }
  std::vector<GameId> out;
  while (!stack.empty()) {
    const GameId g = stack.back();
    stack.pop_back();
    out.push_back(g);
    for (const auto* side : {&nodes_[g.index].left, &nodes_[g.index].right}) {
      for (GameId o : *side) {
        if (!seen[o.index]) {
          seen[o.index] = 1;
          stack.push_back(o);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace misere
