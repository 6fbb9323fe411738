#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "misere/census.hpp"
#include "misere/engine.hpp"
#include "misere/errors.hpp"
#include "misere/notation.hpp"
#include "misere/quotient.hpp"

namespace misere::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw IoError("failed writing " + path);
}

// Splits at commas that are not nested inside braces or parentheses.
std::vector<std::string> split_top_level(const std::string& list) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : list) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

std::string relation_symbol(bool ge, bool le) {
  if (ge && le) return "=";
  if (ge) return ">";
  if (le) return "<";
  return "||";
}

struct Options {
  std::string expr1, expr2;
  bool normal = false;
  bool trace = false;
  unsigned day = 0;
  std::string json_path, dot_path;
  bool check_structure = false;
  bool b4 = false;
  std::string component;
  bool day3 = false;
  std::string generators;
  unsigned bound = 0;
};

std::string describe_day2(Engine& engine, const std::string& name, std::vector<GameId>& out) {
  const Census census = games_born_by(engine, 2);
  const Day2Partition p = classify_day2(engine.arena, census);
  if (name == "plus") out = p.plus;
  else if (name == "minus") out = p.minus;
  else throw ContractError("unknown component '" + name + "' (expected plus or minus)");
  return name;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact misère-play evaluation of partizan games", "misere"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> action;
  Engine engine;

  auto game = [&](const std::string& text) { return parse_game(engine.arena, text); };

  auto* outcome = app.add_subcommand("outcome", "Print the outcome class (L, R, P or N)");
  outcome->add_option("EXPR", o.expr1, "Game expression")->required();
  outcome->add_flag("--normal", o.normal, "Use normal play instead of misère play");
  outcome->callback([&] {
    action = [&] {
      const GameId g = game(o.expr1);
      out << to_string(o.normal ? engine.outcomes.normal(g) : engine.outcomes.misere(g)) << "\n";
    };
  });

  auto* compare = app.add_subcommand("compare", "Compare two games: >, <, = or || (incomparable)");
  compare->add_option("G", o.expr1, "First game")->required();
  compare->add_option("H", o.expr2, "Second game")->required();
  compare->add_flag("--normal", o.normal, "Use the normal-play order");
  compare->callback([&] {
    action = [&] {
      const GameId g = game(o.expr1), h = game(o.expr2);
      const bool ge = o.normal ? engine.order.ge_normal(g, h) : engine.order.ge_misere(g, h);
      const bool le = o.normal ? engine.order.ge_normal(h, g) : engine.order.ge_misere(h, g);
      out << relation_symbol(ge, le) << "\n";
    };
  });

  auto* canonize = app.add_subcommand("canonize", "Print the misère canonical form");
  canonize->add_option("EXPR", o.expr1, "Game expression")->required();
  canonize->add_flag("--trace", o.trace, "Also print the top-level simplification steps");
  canonize->callback([&] {
    action = [&] {
      const auto& [result, trace] = engine.canon.canonicalize(game(o.expr1));
      out << print(engine.arena, result) << "\n";
      if (o.trace) {
        out << "start " << print(engine.arena, trace.start) << "\n";
        for (const SimplificationStep& s : trace.steps) {
          out << to_string(s.kind) << " " << print(engine.arena, s.target) << " via "
              << print(engine.arena, s.via) << "\n";
        }
      }
    };
  });

  auto* adjoint = app.add_subcommand("adjoint", "Print the adjoint G°");
  adjoint->add_option("EXPR", o.expr1, "Game expression")->required();
  adjoint->callback([&] {
    action = [&] { out << print(engine.arena, engine.arena.adjoint(game(o.expr1))) << "\n"; };
  });

  auto* witness = app.add_subcommand("witness", "Print verified contexts showing G is not >= H");
  witness->add_option("G", o.expr1, "First game")->required();
  witness->add_option("H", o.expr2, "Second game")->required();
  witness->callback([&] {
    action = [&] {
      const GameId g = game(o.expr1), h = game(o.expr2);
      if (engine.order.ge_misere(g, h)) {
        throw ContractError("the first game is >= the second; no witness exists");
      }
      for (const Witness& w : {engine.order.witness_a(g, h), engine.order.witness_b(g, h)}) {
        out << to_string(w.kind) << " " << print(engine.arena, w.context) << "  o(G+T)="
            << to_string(w.game_outcome) << " o(H+T)=" << to_string(w.other_outcome) << "\n";
      }
    };
  });

  auto* census = app.add_subcommand("census", "Count canonical games born by each day");
  census->add_option("--day", o.day, "Last day to enumerate")->required();
  census->add_option("--json", o.json_path, "Write nodes and order relation as JSON");
  census->callback([&] {
    action = [&] {
      const Census c = games_born_by(engine, o.day);
      for (std::size_t d = 0; d < c.per_day.size(); ++d) {
        out << "day " << d << ": " << c.per_day[d].size() << "\n";
      }
      if (!o.json_path.empty()) write_file(o.json_path, export_json(engine, c));
    };
  });

  auto* poset = app.add_subcommand("poset", "Build the order on the games born by a day");
  poset->add_option("--day", o.day, "Day (at most 2)")->required();
  poset->add_option("--dot", o.dot_path, "Write the Hasse diagram as DOT");
  poset->add_flag("--check-structure", o.check_structure,
                  "Verify the component isomorphisms and the generating relations (day 2)");
  poset->callback([&] {
    action = [&] {
      const Census c = games_born_by(engine, o.day);
      const GamePoset p = build_poset(engine, c.latest());
      out << "elements: " << p.elements.size() << "\n";
      out << "relations: " << p.order.relation_pairs() << "\n";
      out << "covers: " << p.order.covers().size() << "\n";
      if (!o.dot_path.empty()) write_file(o.dot_path, export_dot(engine.arena, p));
      if (o.check_structure) {
        if (o.day != 2) throw ContractError("--check-structure needs --day 2");
        const Day2Partition part = classify_day2(engine.arena, c);
        const StructureReport iso = check_component_isomorphisms(engine.arena, part, p);
        for (const IsomorphismCheck& ch : iso.components) {
          out << "isomorphism " << ch.component << ": " << (ch.pass() ? "pass" : "FAIL") << " ("
              << ch.size << " elements, " << ch.violations.size() << " violations)\n";
        }
        const GenerationReport gen = check_generation(engine.arena, part, p);
        out << "generation: " << (gen.pass() ? "pass" : "FAIL") << " (" << gen.closure_pairs
            << " generated, " << gen.relation_pairs << " related)\n";
        if (!iso.pass() || !gen.pass()) throw CheckFailed("day-2 structure check failed");
      }
    };
  });

  auto* antichains = app.add_subcommand("antichains", "Count antichains");
  auto* b4 = antichains->add_flag("--b4", o.b4, "Of the Boolean lattice of dimension 4");
  auto* comp = antichains->add_option("--component", o.component, "Of a day-2 component")
                   ->check(CLI::IsMember({"plus", "minus"}));
  b4->excludes(comp);
  antichains->callback([&] {
    action = [&] {
      if (o.b4) {
        out << count_antichains(BooleanLattice{4}.poset()) << "\n";
        return;
      }
      if (o.component.empty()) throw ContractError("antichains needs --b4 or --component");
      std::vector<GameId> elements;
      describe_day2(engine, o.component, elements);
      out << count_antichains(build_poset(engine, elements).order) << "\n";
    };
  });

  auto* bound = app.add_subcommand("bound", "Upper bound on the games born by day 3");
  bound->add_flag("--day3", o.day3, "Print M, M^2 and floor(log2(M^2))")->required();
  bound->callback([&] {
    action = [&] {
      const Day3Bound b = day3_bound();
      out << "M = " << b.m << "\n";
      out << "M^2 = " << b.m_squared << "\n";
      out << "floor(log2(M^2)) = " << b.log2_m_squared << "\n";
    };
  });

  auto* quotient = app.add_subcommand("quotient", "Bounded misère quotient of a generator set");
  quotient->add_option("--generators", o.generators, "Comma-separated game expressions")
      ->required();
  quotient->add_option("--bound", o.bound, "Largest multiplicity of each generator")->required();
  quotient->add_option("--json", o.json_path, "Write the presentation as JSON");
  quotient->callback([&] {
    action = [&] {
      std::vector<GameId> gens;
      for (const std::string& text : split_top_level(o.generators)) gens.push_back(game(text));
      const QuotientPresentation q = bounded_quotient(engine, gens, o.bound);
      out << "classes: " << q.classes.size() << "\n";
      for (std::size_t c = 0; c < q.classes.size(); ++c) {
        out << "class " << c << " [" << to_string(q.outcome_of_class[c]) << "]:";
        for (const MonoidElement& m : q.classes[c]) {
          out << " (";
          for (std::size_t i = 0; i < m.multiplicities.size(); ++i) {
            out << (i ? "," : "") << m.multiplicities[i];
          }
          out << ")";
        }
        out << "\n";
      }
      for (const auto& [hi, lo] : q.order.covers()) out << "cover " << hi << " > " << lo << "\n";
      out << q.caveat() << "\n";
      if (!o.json_path.empty()) write_file(o.json_path, export_json(engine.arena, q));
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "usage: " << e.what() << "\n";
    return usage_error;
  }

  try {
    if (action) action();
    return ok;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return infeasible;
  } catch (const ContractError& e) {
    err << "precondition: " << e.what() << "\n";
    return precondition;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return io_failure;
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << "\n";
    return check_failed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_failure;
  }
}

}  // namespace misere::cli
