#include <random>
#include <set>

#include "doctest.h"
#include "misere/engine.hpp"
#include "misere/errors.hpp"
#include "misere/notation.hpp"
#include "oracle.hpp"
#include "support.hpp"

using misere::FailedCondition;
using misere::GameId;
using misere::Outcome;
using misere::WitnessKind;

namespace {

bool outcome_le(Outcome a, Outcome b) { return misere::outcome_ge(b, a); }

// Checks the bounds of `kind` with the oracle's exhaustive search.
bool oracle_holds(misere::Engine& e, WitnessKind kind, GameId t, GameId g, GameId h) {
  const auto tt = oracle::from_arena(e.arena, t);
  const Outcome og = oracle::outcome({oracle::from_arena(e.arena, g), tt});
  const Outcome oh = oracle::outcome({oracle::from_arena(e.arena, h), tt});
  switch (kind) {
    case WitnessKind::form_a:
      return outcome_le(og, Outcome::P) && misere::outcome_ge(oh, Outcome::N);
    case WitnessKind::form_b:
      return outcome_le(og, Outcome::N) && misere::outcome_ge(oh, Outcome::P);
    case WitnessKind::downlink_context:
      return outcome_le(og, Outcome::P) && misere::outcome_ge(oh, Outcome::P);
    case WitnessKind::distinguishing_context:
      return !misere::outcome_ge(og, oh);
  }
  return false;
}

}  // namespace

struct Day2Fixture {
  misere::Engine e;
  misere::Arena& a = e.arena;
  misere::Order& order = e.order;
  std::vector<GameId> games = support::day2(a);
  GameId game(const char* text) { return misere::parse_game(a, text); }
};

TEST_CASE_FIXTURE(Day2Fixture, "ge_misere examples") {
  CHECK(order.ge_misere(a.star(), a.star()));
  CHECK_FALSE(order.ge_misere(a.one(), a.zero()));
  CHECK(order.ge_misere(game("{|*,1}"), a.zero()));
  CHECK(order.ge_misere(game("{*|*,1}"), game("{*|}")));
  CHECK(order.ge_misere(game("{~1|*,1}"), game("{~1|}")));
  CHECK(order.ge_misere(game("{*,~1|*,1}"), game("{*,~1|}")));
}

TEST_CASE_FIXTURE(Day2Fixture, "downlinked examples") {
  CHECK(order.downlinked(a.zero(), a.zero()));
  CHECK(order.downlinked(a.zero(), a.one()));
  CHECK(order.downlinked(a.star(), a.one()));
  CHECK(order.downlinked(a.one_bar(), a.zero()));
  CHECK_FALSE(order.downlinked(a.one(), a.zero()));
}

TEST_CASE_FIXTURE(Day2Fixture, "eq_misere") {
  for (GameId g : games) CHECK(order.eq_misere(g, g));
  CHECK_FALSE(order.eq_misere(a.sum(a.star(), a.star()), a.zero()));
  for (GameId g : games) {
    if (g != a.zero()) CHECK_FALSE(order.eq_misere(g, a.zero()));
  }
}

TEST_CASE_FIXTURE(Day2Fixture, "ge_normal") {
  CHECK(order.ge_normal(a.one(), a.zero()));
  CHECK_FALSE(order.ge_normal(a.zero(), a.one()));
  CHECK(order.ge_normal(a.star(), a.star()));
  CHECK(order.eq_normal(a.sum(a.star(), a.star()), a.zero()));
  CHECK(order.eq_normal(a.sum(a.one(), a.one_bar()), a.zero()));
}

TEST_CASE_FIXTURE(Day2Fixture, "ge_normal agrees with the difference game's outcome") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, games.size() - 1);
  for (int i = 0; i < 600; ++i) {
    const GameId g = games[pick(rng)], h = games[pick(rng)];
    const auto diff = oracle::sum(oracle::from_arena(a, g),
                                  oracle::conjugate(oracle::from_arena(a, h)));
    const Outcome o = oracle::outcome(diff, false);
    CHECK(order.ge_normal(g, h) == (o == Outcome::L || o == Outcome::P));
  }
}

TEST_CASE_FIXTURE(Day2Fixture, "ge_trivial") {
  CHECK(order.ge_trivial(game("{0,*|1}"), game("{0|1,*}")));
  CHECK_FALSE(order.ge_trivial(game("{*|*,1}"), game("{*|}")));
  CHECK_FALSE(order.ge_trivial(game("{|*,1}"), a.zero()));
  for (GameId g : games) CHECK(order.ge_trivial(g, g));
}

TEST_CASE_FIXTURE(Day2Fixture, "order axioms on day 2") {
  std::vector<std::vector<bool>> rel(games.size(), std::vector<bool>(games.size()));
  for (std::size_t i = 0; i < games.size(); ++i) {
    for (std::size_t j = 0; j < games.size(); ++j) rel[i][j] = order.ge_misere(games[i], games[j]);
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < games.size(); ++i) {
    bad += !rel[i][i];
    for (std::size_t j = 0; j < games.size(); ++j) {
      if (!rel[i][j]) continue;
      if (i != j && rel[j][i]) ++bad;  // distinct canonical games are never equal
      for (std::size_t k = 0; k < games.size(); ++k) {
        if (rel[j][k] && !rel[i][k]) ++bad;
      }
    }
  }
  CHECK(bad == 0);
}

TEST_CASE_FIXTURE(Day2Fixture, "conjugation reverses the order") {
  for (GameId g : games) {
    for (GameId h : games) {
      if (order.ge_misere(g, h) != order.ge_misere(a.conjugate(h), a.conjugate(g))) {
        FAIL_CHECK("antitonicity fails");
      }
    }
  }
}

TEST_CASE_FIXTURE(Day2Fixture, "trivial order, end flags and coarsening on day 2") {
  std::size_t trivial_not_ge = 0, ge_not_trivial = 0, end_violations = 0, not_normal = 0;
  for (GameId g : games) {
    for (GameId h : games) {
      const bool ge = order.ge_misere(g, h);
      const bool flags_match =
          a.is_left_end(g) == a.is_left_end(h) && a.is_right_end(g) == a.is_right_end(h);
      if (order.ge_trivial(g, h) && !ge) ++trivial_not_ge;
      if (flags_match && ge && !order.ge_trivial(g, h)) ++ge_not_trivial;
      if (a.is_left_end(h) && !a.is_left_end(g) && ge) ++end_violations;
      if (a.is_right_end(g) && !a.is_right_end(h) && ge) ++end_violations;
      if (ge && !order.ge_normal(g, h)) ++not_normal;
    }
  }
  CHECK(trivial_not_ge == 0);
  CHECK(ge_not_trivial == 0);
  CHECK(end_violations == 0);
  CHECK(not_normal == 0);
}

TEST_CASE_FIXTURE(Day2Fixture, "related games are ordered in every day-2 context") {
  const misere::SumOutcomeTable table(a, games, games);
  std::size_t failures = 0, pairs = 0;
  for (GameId g : games) {
    for (GameId h : games) {
      if (!order.ge_misere(g, h)) continue;
      ++pairs;
      for (GameId x : games) {
        const Outcome og = table.at(g, x), oh = table.at(h, x);
        if (!misere::outcome_ge(og, oh)) ++failures;
        // In the form "o(h+x) >= P implies o(g+x) >= P", likewise for N.
        if (misere::outcome_ge(oh, Outcome::P) && !misere::outcome_ge(og, Outcome::P)) ++failures;
        if (misere::outcome_ge(oh, Outcome::N) && !misere::outcome_ge(og, Outcome::N)) ++failures;
      }
    }
  }
  CHECK(pairs > games.size());
  CHECK(failures == 0);
}

TEST_CASE_FIXTURE(Day2Fixture, "recursion measure decreases") {
  order.reset_stats();
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    order.ge_misere(support::random_game(a, rng, 3), support::random_game(a, rng, 3));
  }
  CHECK(order.stats().ge_evaluations > 0);
  CHECK(order.stats().downlink_evaluations > 0);
  CHECK(order.stats().measure_violations == 0);
}

TEST_CASE_FIXTURE(Day2Fixture, "first failing condition") {
  // 0 >= * fails (i): 0 is downlinked to *'s Left option 0.
  auto f = order.first_failure(a.zero(), a.star());
  REQUIRE(f);
  CHECK(f->condition == FailedCondition::left_option_downlink);
  CHECK(f->option == a.zero());
  // * >= 0 fails (ii): *'s Right option 0 is downlinked to 0.
  f = order.first_failure(a.star(), a.zero());
  REQUIRE(f);
  CHECK(f->condition == FailedCondition::right_option_downlink);
  // 1 >= ~1 fails (iii): ~1 is a Left end and 1 is not.
  f = order.first_failure(a.one(), a.one_bar());
  REQUIRE(f);
  CHECK(f->condition == FailedCondition::left_end_mismatch);
  CHECK_FALSE(order.first_failure(a.star(), a.star()));
}

TEST_CASE_FIXTURE(Day2Fixture, "witness examples") {
  const auto wa = order.witness_a(a.star(), a.zero());
  CHECK(wa.kind == WitnessKind::form_a);
  CHECK(wa.holds());
  CHECK(oracle_holds(e, WitnessKind::form_a, wa.context, a.star(), a.zero()));

  const auto wb = order.witness_b(a.star(), a.zero());
  CHECK(wb.kind == WitnessKind::form_b);
  CHECK(oracle_holds(e, WitnessKind::form_b, wb.context, a.star(), a.zero()));

  // The two-stage end context {(H^R)° | {· | (G^L)°}} for G = *, H = 0.
  const GameId t = order.end_mismatch_context(a.star(), a.zero());
  CHECK(t == game("{|{|*}}"));
  CHECK(e.outcomes.misere_sum(a.star(), t) == Outcome::N);
  CHECK(e.outcomes.misere_sum(a.zero(), t) == Outcome::L);
  CHECK(order.certify(WitnessKind::form_b, t, a.star(), a.zero()).holds());
  CHECK_FALSE(order.certify(WitnessKind::form_a, t, a.star(), a.zero()).holds());

  const auto w01 = order.witness_a(a.zero(), a.one());
  CHECK(oracle_holds(e, WitnessKind::form_a, w01.context, a.zero(), a.one()));
  const auto w10 = order.witness_b(a.one(), a.zero());
  CHECK(misere::outcome_ge(Outcome::N, e.outcomes.misere_sum(a.one(), w10.context)));
  CHECK(misere::outcome_ge(e.outcomes.misere_sum(a.zero(), w10.context), Outcome::P));
}

TEST_CASE_FIXTURE(Day2Fixture, "downlink witness examples") {
  CHECK(order.downlink_witness(a.zero(), a.zero()).context == a.star());
  const auto w = order.downlink_witness(a.zero(), a.one());
  CHECK(w.kind == WitnessKind::downlink_context);
  CHECK(oracle_holds(e, WitnessKind::downlink_context, w.context, a.zero(), a.one()));
  const auto w2 = order.downlink_witness(a.one_bar(), a.zero());
  CHECK(w2.context == game("{*|0}"));
  CHECK(oracle_holds(e, WitnessKind::downlink_context, w2.context, a.one_bar(), a.zero()));
  // 0 to the nonzero Right end 1: {0 | (1^L)°}.
  CHECK(w.context == game("{0|*}"));
}

TEST_CASE_FIXTURE(Day2Fixture, "witness preconditions") {
  CHECK_THROWS_AS(order.witness_a(a.star(), a.star()), misere::ContractError);
  CHECK_THROWS_AS(order.witness_b(game("{|*,1}"), a.zero()), misere::ContractError);
  CHECK_THROWS_AS(order.distinguish(a.zero(), a.zero()), misere::ContractError);
  CHECK_THROWS_AS(order.downlink_witness(a.one(), a.zero()), misere::ContractError);
}

TEST_CASE_FIXTURE(Day2Fixture, "day-1 pairs are distinguished") {
  const auto d1 = support::day1(a);
  for (GameId g : d1) {
    for (GameId h : d1) {
      if (g == h) continue;
      CHECK_FALSE(order.ge_misere(g, h));
      for (const auto& w : {order.witness_a(g, h), order.witness_b(g, h), order.distinguish(g, h)}) {
        CHECK(w.holds());
        CHECK(oracle_holds(e, w.kind, w.context, g, h));
      }
    }
  }
}

TEST_CASE_FIXTURE(Day2Fixture, "witnesses cover every failing condition") {
  std::set<FailedCondition> seen;
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, games.size() - 1);
  std::size_t checked = 0;
  for (int i = 0; i < 3000; ++i) {
    const GameId g = games[pick(rng)], h = games[pick(rng)];
    const auto failure = order.first_failure(g, h);
    CHECK(failure.has_value() == !order.ge_misere(g, h));
    if (!failure) continue;
    seen.insert(failure->condition);
    const auto wa = order.witness_a(g, h);
    const auto wb = order.witness_b(g, h);
    const auto wd = order.distinguish(g, h);
    CHECK(wa.holds());
    CHECK(wb.holds());
    CHECK(wd.holds());
    CHECK(wd.context == wa.context);
    if (checked < 40 && a.tree_size(wa.context) < 200) {
      CHECK(oracle_holds(e, WitnessKind::form_a, wa.context, g, h));
      ++checked;
    }
  }
  CHECK(seen.size() == 4);
  CHECK(checked > 0);
}

TEST_CASE_FIXTURE(Day2Fixture, "downlink witnesses for every downlinked day-2 pair sample") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<std::size_t> pick(0, games.size() - 1);
  std::size_t found = 0;
  for (int i = 0; i < 2000; ++i) {
    const GameId g = games[pick(rng)], h = games[pick(rng)];
    if (!order.downlinked(g, h)) {
      CHECK_THROWS_AS(order.downlink_witness(g, h), misere::ContractError);
      continue;
    }
    ++found;
    CHECK(order.downlink_witness(g, h).holds());
  }
  CHECK(found > 0);
}

TEST_CASE_FIXTURE(Day2Fixture, "form conversions") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<std::size_t> pick(0, games.size() - 1);
  int converted = 0;
  for (int i = 0; i < 500; ++i) {
    const GameId g = games[pick(rng)], h = games[pick(rng)];
    if (order.ge_misere(g, h)) continue;
    const auto wa = order.witness_a(g, h);
    CHECK(order.certify(WitnessKind::form_b, order.form_a_to_b(h, wa.context), g, h).holds());
    const auto wb = order.witness_b(g, h);
    CHECK(order.certify(WitnessKind::form_a, order.form_b_to_a(g, wb.context), g, h).holds());
    ++converted;
  }
  CHECK(converted > 100);
}

TEST_CASE_FIXTURE(Day2Fixture, "witnesses for deeper games") {
  std::mt19937_64 rng(34);
  int done = 0;
  for (int i = 0; i < 150; ++i) {
    const GameId g = support::random_game(a, rng, 3, 2);
    const GameId h = support::random_game(a, rng, 3, 2);
    if (order.ge_misere(g, h)) continue;
    CHECK(order.witness_a(g, h).holds());
    CHECK(order.witness_b(g, h).holds());
    ++done;
  }
  CHECK(done > 50);
}
