#include "misere/census.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_set>

#include "misere/errors.hpp"

namespace misere {

namespace {

std::vector<GameId> subset(std::span<const GameId> ground, std::uint64_t mask) {
  std::vector<GameId> out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (mask >> i & 1) out.push_back(ground[i]);
  }
  return out;
}

void structural_sort(const Arena& arena, std::vector<GameId>& games) {
  std::sort(games.begin(), games.end(),
            [&arena](GameId a, GameId b) { return arena.structurally_less(a, b); });
}

}  // namespace

Census games_born_by(Engine& engine, unsigned day, CensusOptions options) {
  if (day > options.max_day) {
    throw InfeasibleError("census of day " + std::to_string(day) +
                          " exceeds the enumeration cap (day " +
                          std::to_string(options.max_day) + ")");
  }
  Arena& arena = engine.arena;
  Census census;
  census.per_day.push_back({arena.zero()});
  for (unsigned k = 1; k <= day; ++k) {
    const std::vector<GameId> previous = census.per_day.back();
    if (previous.size() > 16) {
      throw InfeasibleError("census: " + std::to_string(previous.size()) +
                            " games on the previous day is too many to enumerate subsets of");
    }
    const std::uint64_t subsets = std::uint64_t{1} << previous.size();
    std::unordered_set<GameId> seen;
    std::vector<GameId> current;
    for (std::uint64_t lm = 0; lm < subsets; ++lm) {
      for (std::uint64_t rm = 0; rm < subsets; ++rm) {
        const GameId formal = arena.intern(subset(previous, lm), subset(previous, rm));
        const GameId canonical = engine.canon.canonical(formal);
        if (canonical != formal) ++census.noncanonical_formal;
        if (seen.insert(canonical).second) current.push_back(canonical);
      }
    }
    structural_sort(arena, current);
    census.per_day.push_back(std::move(current));
  }
  return census;
}

Day2Partition classify_day2(const Arena& arena, const Census& census) {
  if (census.per_day.size() < 3) {
    throw ContractError("classify_day2 needs a census through day 2");
  }
  Day2Partition p{{}, {}, {}, arena.zero()};
  for (GameId g : census.per_day[2]) {
    const bool le = arena.is_left_end(g), re = arena.is_right_end(g);
    if (le && re) continue;
    if (le) p.plus.push_back(g);
    else if (re) p.minus.push_back(g);
    else p.zero_part.push_back(g);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Finite posets

std::size_t FinitePoset::relation_pairs() const {
  return static_cast<std::size_t>(std::count(rel_.begin(), rel_.end(), 1));
}

bool FinitePoset::reflexive() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!ge(i, i)) return false;
  }
  return true;
}

bool FinitePoset::antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (ge(i, j) && ge(j, i)) return false;
    }
  }
  return true;
}

bool FinitePoset::transitive() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!ge(i, j)) continue;
      for (std::size_t k = 0; k < n_; ++k) {
        if (ge(j, k) && !ge(i, k)) return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j || !ge(i, j) || ge(j, i)) continue;
      bool cover = true;
      for (std::size_t k = 0; cover && k < n_; ++k) {
        if (k == i || k == j) continue;
        if (ge(i, k) && !ge(k, i) && ge(k, j) && !ge(j, k)) cover = false;
      }
      if (cover) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t GamePoset::index_of(GameId g) const {
  auto it = std::find(elements.begin(), elements.end(), g);
  if (it == elements.end()) {
    throw ContractError("game " + std::to_string(g.index) + " is not an element of the poset");
  }
  return static_cast<std::size_t>(it - elements.begin());
}

GamePoset build_poset(Engine& engine, std::span<const GameId> elements) {
  GamePoset p{{elements.begin(), elements.end()}, FinitePoset(elements.size())};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      p.order.set(i, j, engine.order.ge_misere(elements[i], elements[j]));
    }
  }
  return p;
}

GamePoset restrict_poset(const GamePoset& poset, std::span<const GameId> elements) {
  GamePoset p{{elements.begin(), elements.end()}, FinitePoset(elements.size())};
  std::vector<std::size_t> idx;
  for (GameId g : elements) idx.push_back(poset.index_of(g));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      p.order.set(i, j, poset.order.ge(idx[i], idx[j]));
    }
  }
  return p;
}

FinitePoset BooleanLattice::poset() const {
  FinitePoset p(size());
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      p.set(a, b, (a & b) == b);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Component isomorphisms

bool StructureReport::pass() const {
  return std::all_of(components.begin(), components.end(),
                     [](const IsomorphismCheck& c) { return c.pass(); });
}

namespace {

constexpr unsigned kFull = 0xF;

// Bitmask over the ground set {0, *, 1, ~1}; nullopt if some option is not a
// day-1 game.
std::optional<unsigned> day1_mask(const Arena& arena, std::span<const GameId> options) {
  const std::array<GameId, 4> ground{arena.zero(), arena.star(), arena.one(), arena.one_bar()};
  unsigned mask = 0;
  for (GameId o : options) {
    auto it = std::find(ground.begin(), ground.end(), o);
    if (it == ground.end()) return std::nullopt;
    mask |= 1u << (it - ground.begin());
  }
  return mask;
}

bool superset(unsigned a, unsigned b) { return (a & b) == b; }

// `image(g)` gives the lattice point (encoded as an integer) or nullopt;
// `lattice_ge` orders encoded points; `expected` lists the target set.
template <class Image, class LatticeGe>
IsomorphismCheck check_component(std::string name, const std::vector<GameId>& games,
                                 const GamePoset& poset, const std::vector<unsigned>& expected,
                                 Image image, LatticeGe lattice_ge) {
  IsomorphismCheck check;
  check.component = std::move(name);
  check.size = games.size();
  check.expected_size = expected.size();

  std::vector<unsigned> points;
  bool all_mapped = true;
  for (GameId g : games) {
    const auto p = image(g);
    if (!p) {
      all_mapped = false;
      points.push_back(~0u);
    } else {
      points.push_back(*p);
    }
  }
  std::vector<unsigned> sorted_points = points;
  std::sort(sorted_points.begin(), sorted_points.end());
  std::vector<unsigned> sorted_expected = expected;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  check.bijective = all_mapped && sorted_points == sorted_expected;

  for (std::size_t i = 0; i < games.size(); ++i) {
    for (std::size_t j = 0; j < games.size(); ++j) {
      const bool game_ge = poset.ge(games[i], games[j]);
      const bool lattice = all_mapped && lattice_ge(points[i], points[j]);
      if (game_ge != lattice) check.violations.emplace_back(games[i], games[j]);
    }
  }
  return check;
}

}  // namespace

StructureReport check_component_isomorphisms(const Arena& arena, const Day2Partition& partition,
                                             const GamePoset& poset) {
  std::vector<unsigned> b4_minus_top, b4_minus_bottom, product;
  for (unsigned s = 0; s <= kFull; ++s) {
    if (s != kFull) b4_minus_top.push_back(s);
    if (s != 0) b4_minus_bottom.push_back(s);
  }
  for (unsigned a : b4_minus_top) {
    for (unsigned b : b4_minus_bottom) product.push_back(a << 4 | b);
  }

  StructureReport report;
  report.components.push_back(check_component(
      "plus", partition.plus, poset, b4_minus_top,
      [&](GameId g) -> std::optional<unsigned> {
        const auto r = day1_mask(arena, arena.right(g));
        if (!r || !arena.is_left_end(g)) return std::nullopt;
        return kFull & ~*r;
      },
      superset));
  report.components.push_back(check_component(
      "minus", partition.minus, poset, b4_minus_bottom,
      [&](GameId g) -> std::optional<unsigned> {
        if (!arena.is_right_end(g)) return std::nullopt;
        return day1_mask(arena, arena.left(g));
      },
      superset));
  report.components.push_back(check_component(
      "zero", partition.zero_part, poset, product,
      [&](GameId g) -> std::optional<unsigned> {
        const auto l = day1_mask(arena, arena.left(g));
        const auto r = day1_mask(arena, arena.right(g));
        if (!l || !r) return std::nullopt;
        return (kFull & ~*r) << 4 | *l;
      },
      [](unsigned a, unsigned b) { return superset(a >> 4, b >> 4) && superset(a & kFull, b & kFull); }));
  return report;
}

// ---------------------------------------------------------------------------
// Generation of the day-2 order

std::vector<std::pair<GameId, GameId>> cross_component_relations(Arena& arena) {
  const GameId zero = arena.zero(), star = arena.star(), one = arena.one(), bar = arena.one_bar();
  return {
      {arena.intern({}, {star, one}), zero},
      {arena.intern({star}, {star, one}), arena.intern({star}, {})},
      {arena.intern({bar}, {star, one}), arena.intern({bar}, {})},
      {arena.intern({star, bar}, {star, one}), arena.intern({star, bar}, {})},
  };
}

GenerationReport check_generation(Arena& arena, const Day2Partition& partition,
                                  const GamePoset& poset,
                                  std::span<const std::pair<GameId, GameId>> cross_relations) {
  const std::size_t n = poset.elements.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> closure(n, std::vector<std::uint64_t>(words, 0));
  auto add = [&](std::size_t i, std::size_t j) { closure[i][j / 64] |= std::uint64_t{1} << (j % 64); };
  auto has = [&](std::size_t i, std::size_t j) { return (closure[i][j / 64] >> (j % 64) & 1) != 0; };

  GenerationReport report;
  for (std::size_t i = 0; i < n; ++i) add(i, i);

  const std::vector<GameId> origin{partition.origin};
  for (const auto* component : {&partition.plus, &partition.minus, &partition.zero_part, &origin}) {
    for (GameId g : *component) {
      for (GameId h : *component) {
        if (poset.ge(g, h)) {
          add(poset.index_of(g), poset.index_of(h));
          ++report.generator_pairs;
        }
      }
    }
  }
  for (const auto& [g, h] : cross_relations) {
    const std::pair<GameId, GameId> both[] = {{g, h}, {arena.conjugate(h), arena.conjugate(g)}};
    for (const auto& [a, b] : both) {
      if (!poset.ge(a, b)) report.false_generators.emplace_back(a, b);
      add(poset.index_of(a), poset.index_of(b));
      ++report.generator_pairs;
    }
  }

  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!has(i, k)) continue;
      for (std::size_t w = 0; w < words; ++w) closure[i][w] |= closure[k][w];
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool generated = has(i, j);
      const bool related = poset.order.ge(i, j);
      report.closure_pairs += generated;
      report.relation_pairs += related;
      if (related && !generated) report.missing.emplace_back(poset.elements[i], poset.elements[j]);
      if (generated && !related) report.extra.emplace_back(poset.elements[i], poset.elements[j]);
    }
  }
  return report;
}

GenerationReport check_generation(Arena& arena, const Day2Partition& partition,
                                  const GamePoset& poset) {
  const auto relations = cross_component_relations(arena);
  return check_generation(arena, partition, poset, relations);
}

// ---------------------------------------------------------------------------
// Antichains

namespace {

std::uint64_t count_from(std::uint32_t allowed, const std::vector<std::uint32_t>& comparable) {
  if (allowed == 0) return 1;
  const unsigned i = static_cast<unsigned>(__builtin_ctz(allowed));
  const std::uint32_t rest = allowed & (allowed - 1);
  // Antichains without i, plus those containing i (drop everything comparable to it).
  return count_from(rest, comparable) + count_from(rest & ~comparable[i], comparable);
}

}  // namespace

std::uint64_t count_antichains(const FinitePoset& poset, std::size_t max_elements) {
  const std::size_t n = poset.size();
  if (n > max_elements || n > 31) {
    throw InfeasibleError("antichain count over " + std::to_string(n) +
                          " elements exceeds the brute-force cap of " +
                          std::to_string(std::min<std::size_t>(max_elements, 31)));
  }
  std::vector<std::uint32_t> comparable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && poset.comparable(i, j)) comparable[i] |= std::uint32_t{1} << j;
    }
  }
  const std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  return count_from(all, comparable);
}

Day3Bound day3_bound() {
  using boost::multiprecision::cpp_int;
  Day3Bound b;
  b.m = cpp_int(2) * 167 * 167 * cpp_int(kAntichainsB8);
  b.m_squared = b.m * b.m;
  b.log2_m_squared = static_cast<unsigned>(boost::multiprecision::msb(b.m_squared));
  return b;
}

}  // namespace misere
