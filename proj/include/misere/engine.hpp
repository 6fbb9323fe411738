#pragma once

#include "misere/arena.hpp"
#include "misere/canonical.hpp"
#include "misere/order.hpp"
#include "misere/outcome.hpp"

namespace misere {

// One arena with every cache keyed on its ids. All memo tables assume id
// stability, so everything that shares ids shares an Engine.
struct Engine {
  Arena arena;
  Outcomes outcomes{arena};
  Order order{arena, outcomes};
  Canonicalizer canon{order};

  Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;
};

}  // namespace misere
