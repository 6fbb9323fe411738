#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "misere/engine.hpp"

namespace misere {

/// Canonical games born by each day, in structural order.
struct Census {
  std::vector<std::vector<GameId>> per_day;
  // Formal games met during enumeration whose canonical form was not the
  // formal game itself. Every formal game born by day 2 is canonical, so this
  // stays zero through day 2.
  std::size_t noncanonical_formal = 0;

  const std::vector<GameId>& latest() const { return per_day.back(); }
};

struct CensusOptions {
  // Day 3 has up to 2^512 formal trees; refuse anything past the cap.
  unsigned max_day = 2;
};

Census games_born_by(Engine& engine, unsigned day, CensusOptions options = {});

// The day-2 games split by end flags.
struct Day2Partition {
  std::vector<GameId> plus;       // nonzero Left ends
  std::vector<GameId> minus;      // nonzero Right ends
  std::vector<GameId> zero_part;  // not an end
  GameId origin;                  // 0
};

Day2Partition classify_day2(const Arena& arena, const Census& census);

/// Reflexive relation matrix over 0..size()-1; ge(i, j) means element i is
/// at least element j.
class FinitePoset {
 public:
  explicit FinitePoset(std::size_t n = 0) : n_(n), rel_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool ge(std::size_t i, std::size_t j) const { return rel_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { rel_[i * n_ + j] = v ? 1 : 0; }
  bool comparable(std::size_t i, std::size_t j) const { return ge(i, j) || ge(j, i); }
  std::size_t relation_pairs() const;

  bool reflexive() const;
  bool antisymmetric() const;
  bool transitive() const;

  // Pairs (i, j), i != j, with i > j and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> rel_;
};

struct GamePoset {
  std::vector<GameId> elements;
  FinitePoset order;

  // Throws ContractError if g is not an element.
  std::size_t index_of(GameId g) const;
  bool ge(GameId g, GameId h) const { return order.ge(index_of(g), index_of(h)); }
};

GamePoset build_poset(Engine& engine, std::span<const GameId> elements);
// The induced sub-order on a subset of an existing poset's elements.
GamePoset restrict_poset(const GamePoset& poset, std::span<const GameId> elements);

/// Subsets of a `dimension`-element ground set ordered by inclusion, indexed by
/// bitmask.
struct BooleanLattice {
  unsigned dimension;

  std::size_t size() const { return std::size_t{1} << dimension; }
  FinitePoset poset() const;
};

struct IsomorphismCheck {
  std::string component;
  std::size_t size = 0;
  std::size_t expected_size = 0;
  // The explicit map is injective with exactly the expected image.
  bool bijective = false;
  // Pairs on which the game order and the lattice order disagree.
  std::vector<std::pair<GameId, GameId>> violations;

  bool pass() const { return bijective && size == expected_size && violations.empty(); }
};

struct StructureReport {
  std::vector<IsomorphismCheck> components;
  bool pass() const;
};

// Checks, with the day-1 games {0, *, 1, ~1} as the ground set of B4:
//   plus  ~ B4 minus its top, via G -> complement of G's Right options;
//   minus ~ B4 minus its bottom, via G -> G's Left options;
//   zero  ~ their product, via G -> (complement of Right options, Left options).
StructureReport check_component_isomorphisms(const Arena& arena, const Day2Partition& partition,
                                             const GamePoset& poset);

struct GenerationReport {
  std::size_t generator_pairs = 0;
  std::size_t closure_pairs = 0;
  std::size_t relation_pairs = 0;
  std::vector<std::pair<GameId, GameId>> missing;  // related but not generated
  std::vector<std::pair<GameId, GameId>> extra;    // generated but not related
  // Listed cross-component relations that ge_misere rejects.
  std::vector<std::pair<GameId, GameId>> false_generators;

  bool pass() const { return missing.empty() && extra.empty() && false_generators.empty(); }
};

// {·|*,1} >= 0,  {*|*,1} >= {*|·},  {~1|*,1} >= {~1|·},  {*,~1|*,1} >= {*,~1|·}
std::vector<std::pair<GameId, GameId>> cross_component_relations(Arena& arena);

// Reflexive-transitive closure of the within-component relations, the given
// cross relations and their conjugate mirrors, compared against the poset.
GenerationReport check_generation(Arena& arena, const Day2Partition& partition,
                                  const GamePoset& poset,
                                  std::span<const std::pair<GameId, GameId>> cross_relations);
GenerationReport check_generation(Arena& arena, const Day2Partition& partition,
                                  const GamePoset& poset);

// Exact number of antichains, including the empty one. Throws InfeasibleError
// above max_elements.
std::uint64_t count_antichains(const FinitePoset& poset, std::size_t max_elements = 24);

struct Day3Bound {
  boost::multiprecision::cpp_int m;
  boost::multiprecision::cpp_int m_squared;
  unsigned log2_m_squared = 0;  // floor(log2(M^2))
};

// Antichains of B8 (Dedekind number for n = 8), used as input data.
inline constexpr const char* kAntichainsB8 = "56130437228687557907788";

// M = 2 * 167 * 167 * a(B8) bounds the antichains of the day-2 poset, and M^2
// bounds the games born by day 3.
Day3Bound day3_bound();

}  // namespace misere
