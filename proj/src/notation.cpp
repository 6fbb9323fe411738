#include "misere/notation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "misere/errors.hpp"

namespace misere {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

std::string format_parse_error(std::size_t position, const std::string& message,
                               const std::vector<std::string>& expected) {
  std::string s = "at character " + std::to_string(position) + ": " + message;
  if (!expected.empty()) s += " (expected " + join(expected) + ")";
  return s;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::string message, std::vector<std::string> expected)
    : std::runtime_error(format_parse_error(position, message, expected)),
      position_(position),
      detail_(std::move(message)),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Lexing

namespace {

enum class Tok { zero, star, one, tilde, lbrace, rbrace, bar, comma, lparen, rparen, plus, dot, end };

struct Token {
  Tok kind;
  std::size_t position;
  std::string text;
};

std::string describe(const Token& t) {
  return t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t position = 0;  // in code points
  for (std::size_t i = 0; i < text.size();) {
    ++position;
    const auto c = static_cast<unsigned char>(text[i]);
    // UTF-8 sequences: U+00B7 middle dot, U+2217 asterisk operator.
    if (text.substr(i, 2) == "\xC2\xB7") {
      out.push_back({Tok::dot, position, "\xC2\xB7"});
      i += 2;
      continue;
    }
    if (text.substr(i, 3) == "\xE2\x88\x97") {
      out.push_back({Tok::star, position, "\xE2\x88\x97"});
      i += 3;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    Tok kind;
    switch (c) {
      case '0': kind = Tok::zero; break;
      case '*': kind = Tok::star; break;
      case '1': kind = Tok::one; break;
      case '~': kind = Tok::tilde; break;
      case '{': kind = Tok::lbrace; break;
      case '}': kind = Tok::rbrace; break;
      case '|': kind = Tok::bar; break;
      case ',': kind = Tok::comma; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '+': kind = Tok::plus; break;
      case '.': kind = Tok::dot; break;
      default: {
        // Report the whole code point.
        std::size_t len = 1;
        if (c >= 0xF0) len = 4;
        else if (c >= 0xE0) len = 3;
        else if (c >= 0xC0) len = 2;
        throw ParseError(position, "unexpected character '" + std::string(text.substr(i, len)) + "'",
                         {"'0'", "'*'", "'1'", "'~'", "'{'", "'('"});
      }
    }
    out.push_back({kind, position, std::string(1, static_cast<char>(c))});
    ++i;
  }
  out.push_back({Tok::end, position + 1, ""});
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

const std::vector<std::string> kAtomStart{"'0'", "'*'", "'1'", "'~'", "'{'", "'('"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  GameExpression parse_all() {
    GameExpression e = expr();
    if (peek().kind != Tok::end) unexpected({"'+'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  static bool starts_expr(Tok k) {
    return k == Tok::zero || k == Tok::star || k == Tok::one || k == Tok::tilde ||
           k == Tok::lbrace || k == Tok::lparen;
  }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    const Token& t = peek();
    if (t.kind == Tok::bar && open_braces_.empty()) {
      throw ParseError(t.position, "stray '|' outside braces", std::move(expected));
    }
    if (t.kind == Tok::rbrace && open_braces_.empty()) {
      throw ParseError(t.position, "unbalanced braces: '}' has no matching '{'",
                       std::move(expected));
    }
    if (t.kind == Tok::end && !open_braces_.empty()) {
      throw ParseError(t.position,
                       "unbalanced braces: '{' at character " +
                           std::to_string(open_braces_.back()) + " is never closed",
                       std::move(expected));
    }
    throw ParseError(t.position, "syntax error: unexpected " + describe(t), std::move(expected));
  }

  GameExpression expr() {
    GameExpression first = term();
    if (peek().kind != Tok::plus) return first;
    GameExpression sum;
    sum.kind = GameExpression::Kind::sum;
    sum.position = first.position;
    sum.operands.push_back(std::move(first));
    while (peek().kind == Tok::plus) {
      take();
      sum.operands.push_back(term());
    }
    return sum;
  }

  GameExpression term() {
    if (peek().kind == Tok::tilde) {
      GameExpression e;
      e.kind = GameExpression::Kind::conjugate;
      e.position = take().position;
      e.operands.push_back(term());
      return e;
    }
    return atom();
  }

  GameExpression atom() {
    GameExpression e;
    e.position = peek().position;
    switch (peek().kind) {
      case Tok::zero: take(); e.kind = GameExpression::Kind::zero; return e;
      case Tok::star: take(); e.kind = GameExpression::Kind::star; return e;
      case Tok::one: take(); e.kind = GameExpression::Kind::one; return e;
      case Tok::lparen: {
        take();
        GameExpression inner = expr();
        if (peek().kind != Tok::rparen) unexpected({"'+'", "')'"});
        take();
        return inner;
      }
      case Tok::lbrace: {
        open_braces_.push_back(take().position);
        e.kind = GameExpression::Kind::braces;
        e.left = list({"'|'"});
        if (peek().kind != Tok::bar) unexpected({"','", "'+'", "'|'"});
        take();
        e.right = list({"'}'"});
        if (peek().kind != Tok::rbrace) unexpected({"','", "'+'", "'}'"});
        take();
        open_braces_.pop_back();
        return e;
      }
      default:
        unexpected(kAtomStart);
    }
  }

  std::vector<GameExpression> list(const std::vector<std::string>& closer) {
    std::vector<GameExpression> out;
    if (peek().kind == Tok::dot) {
      take();
      return out;
    }
    if (!starts_expr(peek().kind)) {
      if (peek().kind == Tok::end || peek().kind == Tok::comma) {
        std::vector<std::string> expected = kAtomStart;
        expected.push_back("'.'");
        expected.insert(expected.end(), closer.begin(), closer.end());
        unexpected(expected);
      }
      return out;
    }
    out.push_back(expr());
    while (peek().kind == Tok::comma) {
      take();
      if (!starts_expr(peek().kind)) unexpected(kAtomStart);
      out.push_back(expr());
    }
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> open_braces_;
};

}  // namespace

GameExpression parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

GameId elaborate(Arena& arena, const GameExpression& e) {
  switch (e.kind) {
    case GameExpression::Kind::zero: return arena.zero();
    case GameExpression::Kind::star: return arena.star();
    case GameExpression::Kind::one: return arena.one();
    case GameExpression::Kind::conjugate: return arena.conjugate(elaborate(arena, e.operands.front()));
    case GameExpression::Kind::sum: {
      GameId total = arena.zero();
      for (const GameExpression& t : e.operands) total = arena.sum(total, elaborate(arena, t));
      return total;
    }
    case GameExpression::Kind::braces: {
      std::vector<GameId> left, right;
      for (const GameExpression& x : e.left) left.push_back(elaborate(arena, x));
      for (const GameExpression& x : e.right) right.push_back(elaborate(arena, x));
      return arena.intern(std::move(left), std::move(right));
    }
  }
  return arena.zero();
}

GameId parse_game(Arena& arena, std::string_view text) { return elaborate(arena, parse(text)); }

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_into(const Arena& arena, GameId g, std::string& out) {
  if (g == arena.zero()) { out += '0'; return; }
  if (g == arena.star()) { out += '*'; return; }
  if (g == arena.one()) { out += '1'; return; }
  if (g == arena.one_bar()) { out += "~1"; return; }
  out += '{';
  bool first = true;
  for (GameId x : arena.left(g)) {
    if (!first) out += ',';
    first = false;
    print_into(arena, x, out);
  }
  out += '|';
  first = true;
  for (GameId x : arena.right(g)) {
    if (!first) out += ',';
    first = false;
    print_into(arena, x, out);
  }
  out += '}';
}

}  // namespace

std::string print(const Arena& arena, GameId g) {
  arena.check(g);
  std::string out;
  print_into(arena, g, out);
  return out;
}

// ---------------------------------------------------------------------------
// JSON / DOT

namespace {

using ordered_json = nlohmann::ordered_json;

// Structural order of all subpositions, and each game's position in it.
struct Renumbering {
  std::vector<GameId> nodes;
  std::map<GameId, std::size_t> id;
};

Renumbering renumber(const Arena& arena, std::span<const GameId> roots) {
  Renumbering r;
  r.nodes = arena.subpositions(roots);
  std::sort(r.nodes.begin(), r.nodes.end(),
            [&arena](GameId a, GameId b) { return arena.structurally_less(a, b); });
  for (std::size_t i = 0; i < r.nodes.size(); ++i) r.id.emplace(r.nodes[i], i);
  return r;
}

ordered_json nodes_json(const Arena& arena, const Renumbering& r) {
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    ordered_json left = ordered_json::array(), right = ordered_json::array();
    for (GameId x : arena.left(r.nodes[i])) left.push_back(r.id.at(x));
    for (GameId x : arena.right(r.nodes[i])) right.push_back(r.id.at(x));
    ordered_json node;
    node["id"] = i;
    node["left"] = std::move(left);
    node["right"] = std::move(right);
    nodes.push_back(std::move(node));
  }
  return nodes;
}

ordered_json relation_json(const FinitePoset& order) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < order.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < order.size(); ++j) row.push_back(order.ge(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string export_json(const Arena& arena, const GamePoset& poset) {
  const Renumbering r = renumber(arena, poset.elements);
  ordered_json doc;
  doc["nodes"] = nodes_json(arena, r);
  ordered_json elements = ordered_json::array();
  for (GameId g : poset.elements) elements.push_back(r.id.at(g));
  doc["elements"] = std::move(elements);
  doc["relation"] = relation_json(poset.order);
  return doc.dump();
}

std::string export_json(Engine& engine, const Census& census) {
  const GamePoset poset = build_poset(engine, census.latest());
  return export_json(engine.arena, poset);
}

std::string export_json(const Arena& arena, const QuotientPresentation& q) {
  const Renumbering r = renumber(arena, q.generators);
  ordered_json doc;
  doc["nodes"] = nodes_json(arena, r);
  ordered_json generators = ordered_json::array();
  for (GameId g : q.generators) generators.push_back(r.id.at(g));
  doc["generators"] = std::move(generators);
  doc["bound"] = q.bound;
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    ordered_json members = ordered_json::array();
    for (const MonoidElement& m : q.classes[c]) members.push_back(m.multiplicities);
    ordered_json entry;
    entry["outcome"] = std::string(to_string(q.outcome_of_class[c]));
    entry["members"] = std::move(members);
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  doc["order"] = relation_json(q.order);
  doc["caveat"] = q.caveat();
  return doc.dump();
}

ImportedPoset import_json(Arena& arena, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed poset JSON: ") + e.what());
  }
  ImportedPoset out;
  try {
    const auto& nodes = doc.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& n = nodes[i];
      if (n.at("id").get<std::size_t>() != i) {
        throw ContractError("node ids must be consecutive from 0");
      }
      std::vector<GameId> left, right;
      for (std::size_t k : n.at("left").get<std::vector<std::size_t>>()) {
        if (k >= i) throw ContractError("node " + std::to_string(i) + " references a later node");
        left.push_back(out.nodes[k]);
      }
      for (std::size_t k : n.at("right").get<std::vector<std::size_t>>()) {
        if (k >= i) throw ContractError("node " + std::to_string(i) + " references a later node");
        right.push_back(out.nodes[k]);
      }
      out.nodes.push_back(arena.intern(std::move(left), std::move(right)));
    }
    for (std::size_t k : doc.at("elements").get<std::vector<std::size_t>>()) {
      if (k >= out.nodes.size()) throw ContractError("element references a missing node");
      out.poset.elements.push_back(out.nodes[k]);
    }
    const auto rows = doc.at("relation").get<std::vector<std::vector<int>>>();
    const std::size_t n = out.poset.elements.size();
    if (rows.size() != n) throw ContractError("relation has the wrong number of rows");
    out.poset.order = FinitePoset(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw ContractError("relation row has the wrong length");
      for (std::size_t j = 0; j < n; ++j) out.poset.order.set(i, j, rows[i][j] != 0);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("poset JSON does not match the schema: ") + e.what());
  }
  return out;
}

std::string export_dot(const Arena& arena, const GamePoset& poset) {
  std::ostringstream out;
  out << "digraph poset {\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    out << "  n" << i << " [label=\"" << print(arena, poset.elements[i]) << "\"];\n";
  }
  for (const auto& [hi, lo] : poset.order.covers()) {
    out << "  n" << hi << " -> n" << lo << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace misere
