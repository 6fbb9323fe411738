#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "misere/census.hpp"
#include "misere/engine.hpp"

namespace misere {

// A sum of generators: multiplicities[i] copies of generator i.
struct MonoidElement {
  std::vector<unsigned> multiplicities;

  friend auto operator<=>(const MonoidElement&, const MonoidElement&) = default;
};

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b);

// The formal (not canonicalized) sum of the generators with the given
// multiplicities. Throws ContractError on a length mismatch.
GameId element_game(Arena& arena, std::span<const GameId> generators, const MonoidElement& m);

struct QuotientOptions {
  // Largest number of multiplicity vectors (entries up to 2B) that will be
  // evaluated.
  std::size_t max_elements = 200000;
};

/// Classes of sums with every multiplicity at most `bound` that no context
/// from the same window distinguishes, with the order those contexts induce.
///
/// This is a certificate about the window only: two elements sharing a class
/// are indistinguishable by the contexts tried, not proven equal in the full
/// quotient.
struct QuotientPresentation {
  std::vector<GameId> generators;
  unsigned bound = 0;
  // Members of each class, ascending; classes ordered by smallest member.
  std::vector<std::vector<MonoidElement>> classes;
  std::vector<Outcome> outcome_of_class;
  // order.ge(i, j): Pi(x z) >= Pi(y z) for x in class i, y in class j and
  // every z in the window.
  FinitePoset order;

  // Throws ContractError if m is outside the window.
  std::size_t class_of(const MonoidElement& m) const;
  std::string caveat() const;
};

using ElementOutcome = std::function<Outcome(const MonoidElement&)>;

QuotientPresentation bounded_quotient(Engine& engine, std::span<const GameId> generators,
                                      unsigned bound, QuotientOptions options = {});

// Same construction from an arbitrary outcome function over multiplicity
// vectors with entries up to 2 * bound.
QuotientPresentation bounded_quotient_from(std::size_t generator_count, unsigned bound,
                                           const ElementOutcome& outcome,
                                           QuotientOptions options = {});

// All multiplicity vectors of the given length with entries <= bound,
// lexicographically ascending.
std::vector<MonoidElement> window(std::size_t generator_count, unsigned bound);

struct ZPresentationReport {
  unsigned bound = 0;
  bool difference_indexed = false;  // classes <-> values of m[1] - m[0]
  bool product_law = false;         // class(x + y) depends only on the classes, additively
  bool integer_order = false;       // class order is the integer order of differences
  std::vector<std::string> failures;

  bool pass() const { return difference_indexed && product_law && integer_order; }
};

// For a presentation over two generators (such as 1 and ~1).
ZPresentationReport verify_z_presentation(const QuotientPresentation& presentation);

// True iff every pair separated by `coarse` is still separated by `fine`, on
// the elements of the smaller window.
bool refines(const QuotientPresentation& fine, const QuotientPresentation& coarse);

}  // namespace misere
