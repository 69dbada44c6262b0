#pragma once

// Fully tabulated left and right group actions on the elements of a group N.
// Transitivity is a predicate here, not a construction requirement.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bracoid/error.hpp"
#include "bracoid/group.hpp"

namespace bracoid {

namespace detail {

inline void check_table_shape(std::span<const Elem> table, std::size_t rows, std::size_t cols,
                              std::size_t bound, std::string_view what) {
  if (table.size() != rows * cols) {
    throw Error(ErrorKind::Shape, std::string(what) + " has " + std::to_string(table.size()) +
                                      " entries, expected " + std::to_string(rows) + "x" +
                                      std::to_string(cols));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= bound) {
      throw Error(ErrorKind::IndexOutOfRange,
                  std::string(what) + "[" + std::to_string(i / cols) + "][" +
                      std::to_string(i % cols) + "] = " + std::to_string(table[i]) +
                      " is out of range (|N| = " + std::to_string(bound) + ")");
    }
  }
}

inline std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& rows, std::size_t cols,
                                 std::string_view what) {
  std::vector<Elem> flat;
  flat.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::Shape, std::string(what) + " row " + std::to_string(r) + " has " +
                                        std::to_string(rows[r].size()) + " entries, expected " +
                                        std::to_string(cols));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return flat;
}

}  // namespace detail

/// g ⊙ η for g in G, η in N, stored as table[g * |N| + η].
class LeftAction {
 public:
  /// Checks only shape and index range; the action laws are not verified.
  static LeftAction unchecked(FiniteGroup actor, FiniteGroup space, std::vector<Elem> table) {
    detail::check_table_shape(table, actor.order(), space.order(), space.order(), "left_action");
    return LeftAction(std::move(actor), std::move(space), std::move(table));
  }

  const FiniteGroup& actor() const noexcept { return actor_; }
  const FiniteGroup& space() const noexcept { return space_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  Elem operator()(Elem g, Elem eta) const noexcept { return table_[g * space_.order() + eta]; }

  std::span<const Elem> row(Elem g) const noexcept {
    return std::span<const Elem>(table_).subspan(g * space_.order(), space_.order());
  }

  friend bool operator==(const LeftAction& a, const LeftAction& b) {
    return a.table_ == b.table_ && a.actor_.same_structure(b.actor_) &&
           a.space_.same_structure(b.space_);
  }

 private:
  LeftAction(FiniteGroup actor, FiniteGroup space, std::vector<Elem> table)
      : actor_(std::move(actor)), space_(std::move(space)), table_(std::move(table)) {}

  FiniteGroup actor_;
  FiniteGroup space_;
  std::vector<Elem> table_;
};

/// η ⊡ h for η in N, h in H, stored as table[η * |H| + h].
class RightAction {
 public:
  static RightAction unchecked(FiniteGroup space, FiniteGroup actor, std::vector<Elem> table) {
    detail::check_table_shape(table, space.order(), actor.order(), space.order(), "right_action");
    return RightAction(std::move(space), std::move(actor), std::move(table));
  }

  const FiniteGroup& space() const noexcept { return space_; }
  const FiniteGroup& actor() const noexcept { return actor_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  Elem operator()(Elem eta, Elem h) const noexcept { return table_[eta * actor_.order() + h]; }

  friend bool operator==(const RightAction& a, const RightAction& b) {
    return a.table_ == b.table_ && a.actor_.same_structure(b.actor_) &&
           a.space_.same_structure(b.space_);
  }

 private:
  RightAction(FiniteGroup space, FiniteGroup actor, std::vector<Elem> table)
      : space_(std::move(space)), actor_(std::move(actor)), table_(std::move(table)) {}

  FiniteGroup space_;
  FiniteGroup actor_;
  std::vector<Elem> table_;
};

/// First failure of e⊙η = η or (g·h)⊙η = g⊙(h⊙η).
inline std::optional<Violation> find_action_violation(const LeftAction& act) {
  const auto& g = act.actor();
  const auto& n = act.space();
  for (Elem eta = 0; eta < n.order(); ++eta) {
    if (act(g.identity(), eta) != eta) {
      return Violation{ErrorKind::IdentityLawViolated, {named("η", n, eta)}};
    }
  }
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      const Elem ab = g.mul(a, b);
      for (Elem eta = 0; eta < n.order(); ++eta) {
        if (act(ab, eta) != act(a, act(b, eta))) {
          return Violation{ErrorKind::CompatibilityViolated,
                           {named("g", g, a), named("h", g, b), named("η", n, eta)}};
        }
      }
    }
  }
  return std::nullopt;
}

/// First failure of η⊡e = η or η⊡(g∘h) = (η⊡g)⊡h.
inline std::optional<Violation> find_action_violation(const RightAction& act) {
  const auto& h = act.actor();
  const auto& n = act.space();
  for (Elem eta = 0; eta < n.order(); ++eta) {
    if (act(eta, h.identity()) != eta) {
      return Violation{ErrorKind::IdentityLawViolated, {named("η", n, eta)}};
    }
  }
  for (Elem a = 0; a < h.order(); ++a) {
    for (Elem b = 0; b < h.order(); ++b) {
      const Elem ab = h.mul(a, b);
      for (Elem eta = 0; eta < n.order(); ++eta) {
        if (act(eta, ab) != act(act(eta, a), b)) {
          return Violation{ErrorKind::CompatibilityViolated,
                           {named("g", h, a), named("h", h, b), named("η", n, eta)}};
        }
      }
    }
  }
  return std::nullopt;
}

inline LeftAction make_left_action(FiniteGroup actor, FiniteGroup space, std::vector<Elem> table) {
  auto act = LeftAction::unchecked(std::move(actor), std::move(space), std::move(table));
  if (auto v = find_action_violation(act)) throw Error(*v, "left action");
  return act;
}

inline LeftAction make_left_action(FiniteGroup actor, FiniteGroup space,
                                   const std::vector<std::vector<Elem>>& rows) {
  if (rows.size() != actor.order()) {
    throw Error(ErrorKind::Shape, "left_action has " + std::to_string(rows.size()) +
                                      " rows, expected |G| = " + std::to_string(actor.order()));
  }
  auto flat = detail::flatten(rows, space.order(), "left_action");
  return make_left_action(std::move(actor), std::move(space), std::move(flat));
}

inline RightAction make_right_action(FiniteGroup space, FiniteGroup actor, std::vector<Elem> table) {
  auto act = RightAction::unchecked(std::move(space), std::move(actor), std::move(table));
  if (auto v = find_action_violation(act)) throw Error(*v, "right action");
  return act;
}

inline RightAction make_right_action(FiniteGroup space, FiniteGroup actor,
                                     const std::vector<std::vector<Elem>>& rows) {
  if (rows.size() != space.order()) {
    throw Error(ErrorKind::Shape, "right_action has " + std::to_string(rows.size()) +
                                      " rows, expected |N| = " + std::to_string(space.order()));
  }
  auto flat = detail::flatten(rows, actor.order(), "right_action");
  return make_right_action(std::move(space), std::move(actor), std::move(flat));
}

inline Elem act_left(const LeftAction& act, Elem g, Elem eta) {
  if (g >= act.actor().order() || eta >= act.space().order()) {
    throw Error(ErrorKind::IndexOutOfRange, "act_left(" + std::to_string(g) + ", " +
                                                std::to_string(eta) + ")");
  }
  return act(g, eta);
}

inline Elem act_right(const RightAction& act, Elem eta, Elem h) {
  if (eta >= act.space().order() || h >= act.actor().order()) {
    throw Error(ErrorKind::IndexOutOfRange, "act_right(" + std::to_string(eta) + ", " +
                                                std::to_string(h) + ")");
  }
  return act(eta, h);
}

namespace detail {

template <class Step>
std::vector<Elem> closure(std::size_t space_order, std::size_t actor_order, Elem start, Step&& step) {
  std::vector<char> in(space_order, 0);
  std::vector<Elem> found{start};
  in[start] = 1;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Elem a = 0; a < actor_order; ++a) {
      const Elem y = step(a, found[head]);
      if (!in[y]) {
        in[y] = 1;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace detail

/// Sorted orbit of η: closure under every actor.
inline std::vector<Elem> orbit(const LeftAction& act, Elem eta) {
  return detail::closure(act.space().order(), act.actor().order(), eta,
                         [&](Elem g, Elem x) { return act(g, x); });
}

inline std::vector<Elem> orbit(const RightAction& act, Elem eta) {
  return detail::closure(act.space().order(), act.actor().order(), eta,
                         [&](Elem h, Elem x) { return act(x, h); });
}

inline bool is_transitive(const LeftAction& act) {
  return orbit(act, act.space().identity()).size() == act.space().order();
}

inline bool is_transitive(const RightAction& act) {
  return orbit(act, act.space().identity()).size() == act.space().order();
}

/// g ⊙ η = g·η on G itself.
inline LeftAction left_translation(const FiniteGroup& g) {
  return LeftAction::unchecked(g, g, g.flat_table());
}

/// η ⊡ h = η·h on G itself.
inline RightAction right_translation(const FiniteGroup& g) {
  return RightAction::unchecked(g, g, g.flat_table());
}

}  // namespace bracoid
