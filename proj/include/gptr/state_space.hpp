#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gptr/effect.hpp"
#include "gptr/extreme_value.hpp"

namespace gptr {

/// Compact convex state space S of affine dimension d. Every state x is embedded as
/// (1, x) ∈ V = R^{d+1}, so the unit functional u is the first coordinate.
///
/// Two backends: a polytope given by its vertex list (exact rational), and the unit
/// ball {‖x‖ <= 1} of dimension n, which is never enumerated. The n = 3 ball is the
/// Bloch ball of a qubit.
class StateSpace {
 public:
  /// Validates: nonempty, equal lengths, vertices affinely span R^d, and no vertex is a
  /// convex combination of the others (one LP per vertex). Throws ValidationError.
  static StateSpace polytope(std::vector<Vector> vertices);
  static StateSpace ball(std::size_t n);

  bool is_polytope() const { return std::holds_alternative<Polytope>(backend_); }
  bool is_ball() const { return std::holds_alternative<Ball>(backend_); }

  std::size_t dimension() const;
  /// d + 1, the dimension of V and of the effect coordinates.
  std::size_t embedding_dimension() const { return dimension() + 1; }

  /// Throws UnsupportedError for the ball backend.
  const std::vector<Vector>& vertices() const;
  /// (1, x_k).
  Vector embedded_vertex(std::size_t k) const;

  /// Exact membership (LP for polytopes, ‖x‖² <= 1 for balls).
  bool contains(std::span<const Rational> x) const;

  std::string describe() const;

 private:
  struct Polytope {
    std::vector<Vector> vertices;
  };
  struct Ball {
    std::size_t n;
  };
  explicit StateSpace(std::variant<Polytope, Ball> b) : backend_(std::move(b)) {}

  std::variant<Polytope, Ball> backend_;
};

/// e(x) for a state x ∈ S. Throws DomainError when x ∉ S.
Rational evaluate(const Effect& e, const StateSpace& s, std::span<const Rational> x);

/// inf / sup of e over S: attained at a vertex for polytopes, c ∓ √‖v‖² on the ball.
ExtremeValue lambda_min(const Effect& e, const StateSpace& s);
ExtremeValue lambda_max(const Effect& e, const StateSpace& s);

struct EffectCheck {
  bool valid = true;
  std::string reason;
  /// Polytope only: index of a vertex where e < 0 or e > 1.
  std::optional<std::size_t> violating_vertex;
  std::optional<Rational> violating_value;
};

/// 0 <= e <= u on S. Ball checks use the squared forms c >= 0 ∧ c² >= ‖v‖² and
/// (1−c) >= 0 ∧ (1−c)² >= ‖v‖², exactly.
EffectCheck check_effect(const Effect& e, const StateSpace& s);
bool is_valid_effect(const Effect& e, const StateSpace& s);
/// e >= o on S (the dual cone V*₊).
bool in_positive_cone(const Effect& e, const StateSpace& s);

/// True iff e lies on an extreme ray of V*₊. Polytope: the embedded vertices where e
/// vanishes span a d-dimensional subspace. Ball: c² = ‖v‖² with c > 0.
/// Throws DomainError for e = o or e outside the cone.
bool is_indecomposable(const Effect& e, const StateSpace& s);

/// An effect constant + scale·(direction·x) whose coefficients may be irrational.
/// Produced by ball decompositions when ‖v‖ is not rational.
struct SurdEffect {
  ExtremeValue constant;
  ExtremeValue scale;
  Vector direction;

  /// The exact Effect when both coefficients are rational.
  std::optional<Effect> exact() const;
};

/// Splits e into indecomposable effects summing to e (not unique).
/// Polytope: greedy peeling along extreme rays of the face containing e; each step
/// raises the rank of the active vertex set. Ball: e = α(1, v̂) + β(1, −v̂) with
/// α = (c+‖v‖)/2, β = (c−‖v‖)/2 (axis x_d when v = 0).
std::vector<SurdEffect> decompose_indecomposable(const Effect& e, const StateSpace& s);
/// Same, requiring a rational result. Throws UnsupportedError otherwise.
std::vector<Effect> decompose_indecomposable_exact(const Effect& e, const StateSpace& s);

/// Indices of the vertices where e vanishes.
std::vector<std::size_t> active_vertices(const Effect& e, const StateSpace& s);

}  // namespace gptr
