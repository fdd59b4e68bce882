#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "gptr/effect.hpp"
#include "gptr/extreme_value.hpp"
#include "gptr/meter.hpp"
#include "gptr/rational.hpp"
#include "gptr/state_space.hpp"

namespace gptr {

inline void PrintTo(const ExtremeValue& v, std::ostream* os) { *os << v.exact_string(); }
inline void PrintTo(const Effect& e, std::ostream* os) { *os << to_string(e); }
inline void PrintTo(const Meter& m, std::ostream* os) { *os << to_string(m); }

}  // namespace gptr

namespace gptr::test {

inline Rational q(const char* text) { return parse_rational(text); }

inline Vector vec(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(q(x));
  return v;
}

/// Effect (c, v) from decimal or fraction strings.
inline Effect eff(const char* c, std::initializer_list<const char*> v) { return Effect(q(c), vec(v)); }

/// Square gbit with vertices (±1, ±1).
inline StateSpace gbit() { return StateSpace::polytope({vec({"1", "1"}), vec({"1", "-1"}), vec({"-1", "-1"}), vec({"-1", "1"})}); }

/// Sharp edge meters of the gbit along x₁ and x₂.
inline Meter gbit_x() { return Meter({eff("1/2", {"1/2", "0"}), eff("1/2", {"-1/2", "0"})}); }
inline Meter gbit_y() { return Meter({eff("1/2", {"0", "1/2"}), eff("1/2", {"0", "-1/2"})}); }

/// Octahedron inscribed in the Bloch ball (vertices ±e_i).
inline StateSpace octahedron() {
  std::vector<Vector> vs;
  for (int axis = 0; axis < 3; ++axis) {
    for (int sign : {1, -1}) {
      Vector v(3);
      v[axis] = sign;
      vs.push_back(v);
    }
  }
  return StateSpace::polytope(vs);
}

/// Cube circumscribing the Bloch ball (vertices (±1, ±1, ±1)).
inline StateSpace cube() {
  std::vector<Vector> vs;
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      for (int c : {1, -1}) vs.push_back({Rational(a), Rational(b), Rational(c)});
    }
  }
  return StateSpace::polytope(vs);
}

/// Segment [−1, 1]: the classical bit.
inline StateSpace classical_bit() { return StateSpace::polytope({vec({"1"}), vec({"-1"})}); }

/// Values of e at every vertex, computed directly from the coordinates.
inline std::vector<Rational> vertex_values(const Effect& e, const StateSpace& s) {
  std::vector<Rational> out;
  for (const auto& v : s.vertices()) {
    Rational acc = e.constant();
    for (std::size_t i = 0; i < v.size(); ++i) acc += e.linear()[i] * v[i];
    out.push_back(acc);
  }
  return out;
}

}  // namespace gptr::test
