#pragma once

#include <vector>

#include "gptr/effect.hpp"
#include "gptr/matrix.hpp"
#include "gptr/state_space.hpp"

namespace gptr {

/// Default cap on the dimension handled by vertex enumeration.
inline constexpr std::size_t kDefaultDimensionCap = 6;

/// kDefaultDimensionCap, or the value of GPT_RESTRICT_DIM_CAP when set to a positive integer.
std::size_t dimension_cap();

/// Vertices of the bounded polytope {x : G·x <= h} by the double description method
/// on the homogenized cone {(x, τ) : h·τ − G·x >= 0, τ >= 0}. Adjacency of rays is
/// the algebraic rank test. Throws UnsupportedError when the dimension exceeds
/// dimension_cap(), DomainError when the polytope is unbounded.
std::vector<Vector> enumerate_vertices(const Matrix& g, const Vector& h);

/// Vertices of E(S) = {f : 0 <= f(v_k) <= 1 for every vertex v_k}, i.e. the extreme effects.
std::vector<Effect> effect_space_vertices(const StateSpace& s);

}  // namespace gptr
