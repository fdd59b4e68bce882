#pragma once

#include <optional>

#include "gptr/extreme_value.hpp"
#include "gptr/meter.hpp"
#include "gptr/simulation.hpp"

namespace gptr {

/// Pure qubit state given by its Bloch vector n, ‖n‖² = 1 exactly.
class PureQubitState {
 public:
  /// Throws ValidationError unless the vector has 3 components and unit norm.
  explicit PureQubitState(Vector bloch);
  const Vector& bloch() const { return bloch_; }
  /// Rank-one effect |ψ⟩⟨ψ| in ball coordinates: (1/2, n/2).
  Effect projector() const;

 private:
  Vector bloch_;
};

/// |⟨ψ₁|ψ₂⟩|² = (1 + n₁·n₂)/2.
Rational overlap_sq(const PureQubitState& a, const PureQubitState& b);

/// Unambiguous discrimination meter A₁ = q₁(u − P₂), A₂ = q₂(u − P₁), A_? = u − A₁ − A₂.
/// Every quantity depends on the states only through κ = n₁·n₂, which is how the
/// meter is stored; explicit effects are available when Bloch vectors are attached.
class UdMeter {
 public:
  /// Throws DomainError unless 0 < q_i <= 1, −1 <= κ <= 1 and A_? is a valid effect.
  UdMeter(Rational q1, Rational q2, Rational kappa);
  UdMeter(Rational q1, Rational q2, const PureQubitState& s1, const PureQubitState& s2);

  const Rational& q1() const { return q1_; }
  const Rational& q2() const { return q2_; }
  const Rational& kappa() const { return kappa_; }
  /// λmax(A₁), λmax(A₂), λmax(A_?).
  std::vector<ExtremeValue> lambda_max() const;
  /// Constant part and squared norm of the linear part of A_?.
  Rational inconclusive_constant() const;
  Rational inconclusive_norm_sq() const;
  /// The three effects on the Bloch ball, when the states were given.
  std::optional<Meter> meter() const;

 private:
  Rational q1_, q2_, kappa_;
  std::optional<Vector> n1_, n2_;
};

/// A_? >= 0 for the given parameters: c >= 0 and c² >= ‖v‖².
bool ud_parameters_valid(const Rational& q1, const Rational& q2, const Rational& kappa);

/// ½tr[ϱ₁A₁] + ½tr[ϱ₂A₂] = ((q₁+q₂)/2)(1 − (1+κ)/2).
Rational ud_success(const UdMeter& m);
/// ½(1 − (1+κ)/2): the best success of an effectively dichotomic UD meter.
Rational ud_dichotomic_bound(const Rational& kappa);
/// 1 − √((1+κ)/2).
ExtremeValue ud_unrestricted_optimum(const Rational& kappa);

enum class UdConstraint { None, SumAtMostOne };

struct UdOptimum {
  Rational q1;
  Rational q2;
  Rational success;
  bool operator==(const UdOptimum&) const = default;
};

/// Maximizes ud_success over valid (q₁, q₂), optionally with q₁ + q₂ <= 1: a rational
/// grid over q₁, bisection for the largest valid q₂, and zoomed re-gridding around the
/// best cell. On the constrained problem the boundary q₁ + q₂ = 1 is tested exactly.
UdOptimum ud_max_valid_q(const Rational& kappa, UdConstraint constraint);

/// Largest q with (q, q) valid, as an exact surd: 1/(1 + √((1+κ)/2)).
ExtremeValue ud_max_symmetric_q(const Rational& kappa);

/// Certified-not-2-tomic via the indecomposable-family criterion applied to A₁, A₂:
/// rank one, non-proportional (κ ≠ 1), no positive combination equal to u (κ ≠ −1),
/// and q₁ + q₂ > 1. Throws DomainError when a hypothesis fails.
NTomicCertificate ud_not_2tomic_certificate(const UdMeter& m);

/// Φ*_t(c, v) = (c, t·v).
Effect depolarize_effect(const Effect& e, const Rational& t);
/// Ψ*_{t,ξ}(c, v) = (t·c + (1−t)·e(ξ), t·v) for a Bloch vector ξ with ‖ξ‖ <= 1.
Effect shifted_depolarize_effect(const Effect& e, const Rational& t, std::span<const Rational> xi);

/// Operator commutation of two qubit effects: linear parts parallel or one of them zero.
bool commutes_sharp(const Effect& e, const Effect& f);

/// Best UD success over a polytope state space containing the two states as points:
/// maximize ½A₁(n₁) + ½A₂(n₂) subject to A₁(n₂) = A₂(n₁) = 0 and A₁, A₂, u − A₁ − A₂ >= 0
/// at every vertex. Throws DomainError if a state lies outside S.
Rational ud_polytope_optimum(const StateSpace& s, std::span<const Rational> n1, std::span<const Rational> n2);

}  // namespace gptr
