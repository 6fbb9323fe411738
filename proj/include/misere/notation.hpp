#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "misere/arena.hpp"
#include "misere/census.hpp"
#include "misere/quotient.hpp"

namespace misere {

/// Parse tree of the game notation.
///
///   expr := term ('+' term)*
///   term := '~' term | atom
///   atom := '0' | '*' | '1' | '{' list '|' list '}' | '(' expr ')'
///   list := <empty> | '.' | '·' | expr (',' expr)*
///
/// '~' is the conjugate (Left and Right swapped), so "~1" is {·|0}.
struct GameExpression {
  enum class Kind { zero, star, one, braces, conjugate, sum };

  Kind kind = Kind::zero;
  std::size_t position = 1;  // 1-based character offset of the first token
  std::vector<GameExpression> left;      // braces
  std::vector<GameExpression> right;     // braces
  std::vector<GameExpression> operands;  // conjugate: one, sum: two or more
};

// Throws ParseError carrying a 1-based character offset.
GameExpression parse(std::string_view text);
GameId elaborate(Arena& arena, const GameExpression& expression);
GameId parse_game(Arena& arena, std::string_view text);

// 0, *, 1 and ~1 print as constants; anything else prints as {L|R} with
// options in the arena's structural order. parse_game(print(g)) == g.
std::string print(const Arena& arena, GameId g);

// {"nodes":[{"id":k,"left":[...],"right":[...]},...],"elements":[...],"relation":[[0,1,...],...]}
// Node ids are renumbered 0.. in structural order, so options precede parents
// and the text does not depend on arena history.
std::string export_json(const Arena& arena, const GamePoset& poset);
std::string export_json(Engine& engine, const Census& census);
std::string export_json(const Arena& arena, const QuotientPresentation& presentation);

struct ImportedPoset {
  std::vector<GameId> nodes;  // by exported node id
  GamePoset poset;
};

// Reads the poset schema back, interning every node into `arena`. Throws
// ContractError on schema violations.
ImportedPoset import_json(Arena& arena, std::string_view text);

// Hasse diagram (cover relation, edges from greater to lesser), labelled by print().
std::string export_dot(const Arena& arena, const GamePoset& poset);

}  // namespace misere
