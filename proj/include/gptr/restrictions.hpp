#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gptr/lp.hpp"
#include "gptr/meter.hpp"
#include "gptr/simulation.hpp"

namespace gptr {

/// Effect restriction R_E given as the convex hull of finitely many generators.
struct EffectRestriction {
  std::vector<Effect> generators;
  bool operator==(const EffectRestriction&) const = default;
};

struct HullMembership {
  bool member = false;
  /// Convex weights over the generators reproducing the effect.
  std::optional<Vector> weights;
  std::optional<FarkasCertificate> certificate;
};

/// e ∈ conv(generators), one exact LP.
HullMembership hull_membership(const Effect& e, const std::vector<Effect>& generators);
bool in_hull(const Effect& e, const std::vector<Effect>& generators);

struct RestrictionReport {
  bool valid = true;
  bool contains_unit = false;
  bool contains_zero = false;
  /// Generators that are not valid effects on S.
  std::vector<std::size_t> invalid_generators;
  /// Generators e with u − e outside the hull; exactly the failures of (E2) through (e, u − e).
  std::vector<std::size_t> missing_complements;
  std::vector<std::string> problems;
};

/// (E1) u ∈ R_E, o ∈ R_E, and (E2) via the dichotomic meters (e, u − e).
RestrictionReport effect_restriction_validate(const EffectRestriction& r, const StateSpace& s);

struct GeneratedBySimulation {
  std::vector<Meter> generators;
};
struct InducedByEffects {
  EffectRestriction effects;
};
/// R_t = {tC + (1−t)T : C ∈ M, T trivial}.
struct NoiseFamily {
  Rational t;
};
using MeterRestriction = std::variant<GeneratedBySimulation, InducedByEffects, NoiseFamily>;

std::string kind_name(const MeterRestriction& r);

/// ran(A) ⊆ conv(generators).
bool in_effect_restricted_meters(const Meter& a, const EffectRestriction& r);
bool is_member(const Meter& a, const MeterRestriction& r, const StateSpace& s);

/// E_R as hull generators:
///   GeneratedBySimulation  the union of the generator ranges;
///   InducedByEffects       the ranges of the member dichotomic meters (g, u − g);
///   NoiseFamily            t·g + (1−t)·r·u for g a vertex of E(S) and r ∈ {0, 1}.
/// Throws UnsupportedError for NoiseFamily on the ball backend.
EffectRestriction effects_of_restriction(const MeterRestriction& r, const StateSpace& s);

/// Always true: hull-represented restrictions are convex.
bool is_convex_closed(const EffectRestriction& r);
/// Tests an arbitrary membership oracle: false when the midpoint of two accepted
/// probes is rejected.
bool is_convex_closed(const std::function<bool(const Effect&)>& accepts, const std::vector<Effect>& probes);

/// U = span(effects ∪ {u}) with the membership test e ∈ U ∩ E(S).
struct Subalgebra {
  std::vector<Vector> basis;
  bool contains(const Effect& e, const StateSpace& s) const;
  std::size_t dimension() const { return basis.size(); }
};
Subalgebra subalgebra_closure(const std::vector<Effect>& effects, const StateSpace& s);

struct SubalgebraReport {
  bool is_subalgebra = false;
  /// dim U.
  std::size_t span_dimension = 0;
  /// Dimension of the linear span of the generators; equals dim U when the hull is
  /// full-dimensional inside U.
  std::size_t hull_dimension = 0;
  std::size_t vertices_checked = 0;
  /// A vertex of U ∩ E(S) outside the hull.
  std::optional<Effect> outside_vertex;
};

/// hull(E) = span(E ∪ {u}) ∩ E(S), by dimension comparison and membership of every
/// vertex of U ∩ E(S). Polytope backend; UnsupportedError above the dimension cap.
SubalgebraReport is_subalgebra(const EffectRestriction& r, const StateSpace& s);

/// w(B; T) = Σ_x λmin(B_x).
ExtremeValue noise_content(const Meter& b, const StateSpace& s);
/// w(B; T) >= 1 − t.
bool in_noise_restriction(const Meter& b, const Rational& t, const StateSpace& s);

struct R3Witness {
  Meter meter;
  /// Indecomposable meter built from e and a decomposition of u − e, λmax = 1 outcomes first.
  Meter b_tilde;
  std::size_t m = 0;
  Meter b;
  Rational q;
  Rational l_b;
  Rational r;
  Vector r_i;
};

/// Meter A with every effect in E_{R_t} but w(A; T) = (1−t)r < 1 − t, built from an
/// extreme indecomposable effect e: B̃ from e and u − e, B from B̃ scaled by
/// q = (t+1)/2, r the midpoint of [(l_B − t)/((1−t)l_B), 1) split uniformly, and
/// A_i = t·a_i + (1−t)·r_i·u with a_i = ((1 − (1−t)r)/t)·B_i.
/// Throws DomainError for t ∉ (0, 1) or an e that is not extreme and indecomposable.
R3Witness build_r3_witness(const Rational& t, const Effect& e, const StateSpace& s);

/// An extreme indecomposable effect of S (a vertex of E(S) on an extreme ray).
Effect find_extreme_indecomposable(const StateSpace& s);

enum class RestrictionClass { R1, R2, R3, NoRestriction, Unknown };
std::string to_string(RestrictionClass c);

struct ClassifyOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 200;
};

struct ClassificationResult {
  RestrictionClass label = RestrictionClass::Unknown;
  /// An effect of E(S) outside E_R (rules out R2 and no-restriction).
  std::optional<Effect> effect_outside;
  /// A meter in M_{E_R} outside R (rules out R1).
  std::optional<Meter> meter_outside;
  /// Hull generators of E_R.
  EffectRestriction effects;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::size_t samples_used = 0;
  std::vector<std::string> trail;
  bool operator==(const ClassificationResult&) const = default;
};

/// Labels R as R1, R2, R3 or no-restriction with checkable witnesses, or "unknown"
/// when the sampling budget finds no separating meter. Polytope backend only.
ClassificationResult classify(const MeterRestriction& r, const StateSpace& s, const ClassifyOptions& opts = {});

/// Rechecks the witnesses of a definite label.
bool verify_classification(const ClassificationResult& c, const MeterRestriction& r, const StateSpace& s);

/// The generator effects span the dual space (rank d + 1).
bool tomographic_completeness(const MeterRestriction& r, const StateSpace& s);

}  // namespace gptr
