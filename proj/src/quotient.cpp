#include "misere/quotient.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "misere/errors.hpp"

namespace misere {

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
  if (a.multiplicities.size() != b.multiplicities.size()) {
    throw ContractError("adding monoid elements of different lengths");
  }
  MonoidElement out = a;
  for (std::size_t i = 0; i < out.multiplicities.size(); ++i) {
    out.multiplicities[i] += b.multiplicities[i];
  }
  return out;
}

GameId element_game(Arena& arena, std::span<const GameId> generators, const MonoidElement& m) {
  if (m.multiplicities.size() != generators.size()) {
    throw ContractError("multiplicity vector has " + std::to_string(m.multiplicities.size()) +
                        " entries for " + std::to_string(generators.size()) + " generators");
  }
  GameId total = arena.zero();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (unsigned k = 0; k < m.multiplicities[i]; ++k) total = arena.sum(total, generators[i]);
  }
  return total;
}

std::vector<MonoidElement> window(std::size_t generator_count, unsigned bound) {
  std::vector<MonoidElement> out;
  MonoidElement m{std::vector<unsigned>(generator_count, 0)};
  while (true) {
    out.push_back(m);
    std::size_t i = generator_count;
    while (i > 0 && m.multiplicities[i - 1] == bound) m.multiplicities[--i] = 0;
    if (i == 0) break;
    ++m.multiplicities[i - 1];
  }
  return out;
}

namespace {

std::size_t window_size(std::size_t generator_count, unsigned radix, std::size_t cap) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < generator_count; ++i) {
    if (size > cap / radix) return cap + 1;
    size *= radix;
  }
  return size;
}

std::string render(const MonoidElement& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.multiplicities.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m.multiplicities[i]);
  }
  return s + ")";
}

}  // namespace

std::size_t QuotientPresentation::class_of(const MonoidElement& m) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::binary_search(classes[c].begin(), classes[c].end(), m)) return c;
  }
  throw ContractError("element " + render(m) + " lies outside the explored window");
}

std::string QuotientPresentation::caveat() const {
  return "bounded certificate: multiplicities and contexts limited to " + std::to_string(bound) +
         " copies of each generator";
}

QuotientPresentation bounded_quotient_from(std::size_t generator_count, unsigned bound,
                                           const ElementOutcome& outcome,
                                           QuotientOptions options) {
  if (bound < 1) throw ContractError("bounded_quotient needs a bound of at least 1");
  if (window_size(generator_count, 2 * bound + 1, options.max_elements) > options.max_elements) {
    throw InfeasibleError("quotient window with bound " + std::to_string(bound) + " over " +
                          std::to_string(generator_count) + " generators exceeds " +
                          std::to_string(options.max_elements) + " elements");
  }

  const std::vector<MonoidElement> elements = window(generator_count, bound);
  // Outcomes over the doubled window, indexed in mixed radix 2B+1.
  const unsigned radix = 2 * bound + 1;
  const std::vector<MonoidElement> doubled = window(generator_count, 2 * bound);
  std::vector<Outcome> table;
  table.reserve(doubled.size());
  for (const MonoidElement& m : doubled) table.push_back(outcome(m));
  auto outcome_of = [&](const MonoidElement& m) {
    std::size_t index = 0;
    for (unsigned v : m.multiplicities) index = index * radix + v;
    return table[index];
  };

  // Signature: outcome against every context of the window.
  std::map<std::vector<Outcome>, std::size_t> by_signature;
  std::vector<std::vector<Outcome>> signatures;
  QuotientPresentation q;
  q.bound = bound;
  for (const MonoidElement& x : elements) {
    std::vector<Outcome> sig;
    sig.reserve(elements.size());
    for (const MonoidElement& z : elements) sig.push_back(outcome_of(x + z));
    auto [it, fresh] = by_signature.emplace(sig, q.classes.size());
    if (fresh) {
      q.classes.emplace_back();
      q.outcome_of_class.push_back(outcome_of(x));
      signatures.push_back(std::move(sig));
    }
    q.classes[it->second].push_back(x);
  }

  const std::size_t n = q.classes.size();
  q.order = FinitePoset(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool ge = true;
      for (std::size_t z = 0; ge && z < elements.size(); ++z) {
        ge = outcome_ge(signatures[i][z], signatures[j][z]);
      }
      q.order.set(i, j, ge);
    }
  }
  return q;
}

QuotientPresentation bounded_quotient(Engine& engine, std::span<const GameId> generators,
                                      unsigned bound, QuotientOptions options) {
  QuotientPresentation q = bounded_quotient_from(
      generators.size(), bound,
      [&](const MonoidElement& m) {
        return engine.outcomes.misere(element_game(engine.arena, generators, m));
      },
      options);
  q.generators.assign(generators.begin(), generators.end());
  return q;
}

ZPresentationReport verify_z_presentation(const QuotientPresentation& q) {
  ZPresentationReport r;
  r.bound = q.bound;
  if (q.classes.empty() || q.classes.front().front().multiplicities.size() != 2) {
    r.failures.push_back("presentation is not over two generators");
    return r;
  }
  const int bound = static_cast<int>(q.bound);
  auto diff = [](const MonoidElement& m) {
    return static_cast<int>(m.multiplicities[1]) - static_cast<int>(m.multiplicities[0]);
  };

  // Difference indexing.
  std::vector<int> class_diff(q.classes.size());
  std::map<int, std::size_t> class_by_diff;
  r.difference_indexed = true;
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    class_diff[c] = diff(q.classes[c].front());
    for (const MonoidElement& m : q.classes[c]) {
      if (diff(m) != class_diff[c]) {
        r.difference_indexed = false;
        r.failures.push_back("class " + std::to_string(c) + " mixes differences " +
                             std::to_string(class_diff[c]) + " and " + std::to_string(diff(m)));
        break;
      }
    }
    if (!class_by_diff.emplace(class_diff[c], c).second) {
      r.difference_indexed = false;
      r.failures.push_back("difference " + std::to_string(class_diff[c]) +
                           " is split over several classes");
    }
  }
  if (static_cast<int>(class_by_diff.size()) != 2 * bound + 1) {
    r.difference_indexed = false;
    r.failures.push_back("expected " + std::to_string(2 * bound + 1) + " classes, found " +
                         std::to_string(class_by_diff.size()));
  }

  // Product law: the class of a sum is a function of the operands' classes,
  // and it is the class of the summed differences.
  r.product_law = true;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> product;
  const auto elements = window(2, q.bound);
  for (const MonoidElement& x : elements) {
    for (const MonoidElement& y : elements) {
      const MonoidElement s = x + y;
      if (s.multiplicities[0] > q.bound || s.multiplicities[1] > q.bound) continue;
      const std::size_t cx = q.class_of(x), cy = q.class_of(y), cs = q.class_of(s);
      auto [it, fresh] = product.emplace(std::pair{cx, cy}, cs);
      bool ok = it->second == cs;
      if (r.difference_indexed) ok = ok && class_diff[cs] == class_diff[cx] + class_diff[cy];
      if (!ok && r.product_law) {
        r.failures.push_back("product law fails at " + render(x) + " + " + render(y));
      }
      r.product_law = r.product_law && ok;
    }
  }

  // Induced order against the integer order.
  r.integer_order = r.difference_indexed;
  for (std::size_t i = 0; r.difference_indexed && i < q.classes.size(); ++i) {
    for (std::size_t j = 0; j < q.classes.size(); ++j) {
      if (q.order.ge(i, j) != (class_diff[i] >= class_diff[j])) {
        if (r.integer_order) {
          r.failures.push_back("order between differences " + std::to_string(class_diff[i]) +
                               " and " + std::to_string(class_diff[j]) +
                               " disagrees with the integers");
        }
        r.integer_order = false;
      }
    }
  }
  return r;
}

bool refines(const QuotientPresentation& fine, const QuotientPresentation& coarse) {
  const std::size_t arity = coarse.classes.front().front().multiplicities.size();
  const auto elements = window(arity, std::min(fine.bound, coarse.bound));
  for (const MonoidElement& x : elements) {
    for (const MonoidElement& y : elements) {
      if (coarse.class_of(x) != coarse.class_of(y) && fine.class_of(x) == fine.class_of(y)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace misere
