#pragma once

#include <ostream>

#include "doctest.h"
#include "topo/continuity.hpp"
#include "topo/error.hpp"
#include "topo/finite_space.hpp"

namespace topo {

inline std::ostream& operator<<(std::ostream& os, Errc c) {
  return os << errc_name(c);
}

inline std::ostream& operator<<(std::ostream& os, const PointSet& a) {
  return os << a.to_string();
}

}  // namespace topo

// Asserts that evaluating `expr` raises topo::Error carrying `expected`.
#define CHECK_ERRC(expr, expected)                      \
  do {                                                  \
    try {                                               \
      (void)(expr);                                     \
      FAIL("expected an error, none raised: " #expr);   \
    } catch (const topo::Error& e_) {                   \
      CHECK(e_.code() == (expected));                   \
    }                                                   \
  } while (0)

namespace fixtures {

// Three points a=0, b=1, c=2; opens {}, {a}, {b}, {a,b}, {a,b,c}.
// a and b are open points, c is closed and only sees the whole space.
inline topo::FiniteSpace y3() {
  return topo::make_space_from_masks(3, {0, 1, 2, 3, 7});
}

// Two points p=0, q=1; opens {}, {q}, {p,q}. q is the open point.
inline topo::FiniteSpace x2() {
  return topo::make_space_from_masks(2, {0, 2, 3});
}

// p -> a, q -> b.
inline topo::SpaceMap example_map() {
  return topo::SpaceMap(x2(), y3(), {0, 1});
}

}  // namespace fixtures
