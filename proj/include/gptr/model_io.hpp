#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gptr/errors.hpp"
#include "gptr/meter.hpp"
#include "gptr/restrictions.hpp"

namespace gptr {

/// Parse or schema failure, located by origin (file name) and JSON pointer.
class ModelError : public ValidationError {
 public:
  ModelError(std::string origin, std::string pointer, const std::string& reason);
  const std::string& origin() const { return origin_; }
  const std::string& pointer() const { return pointer_; }

 private:
  std::string origin_;
  std::string pointer_;
};

struct NamedEffects {
  std::string name;
  std::vector<Effect> effects;
};

struct RestrictionSpec {
  std::string name;
  std::string kind;                     // "sim" | "effects" | "noise"
  std::vector<std::string> generators;  // meter names ("sim") or one effect-restriction name ("effects")
  std::vector<Effect> inline_effects;   // "effects" given inline
  Rational t;                           // "noise"
};

struct NamedState {
  std::string name;
  Vector point;
};

/// A GPT model file:
///   {"state_space": {"type": "polytope", "vertices": [[...], ...]} | {"type": "ball", "dim": n},
///    "meters": {"A": [[c, v1, ..., vd], ...]},
///    "effect_restrictions": {"E": [[c, v...], ...]},
///    "restrictions": {"R": {"kind": "sim", "generators": ["A"]}
///                        | {"kind": "effects", "generators": "E" | [[c, v...], ...]}
///                        | {"kind": "noise", "t": "1/2"}},
///    "states": {"psi": [x1, ..., xd]}}
/// Scalars are integers or strings "p", "p/q", or finite decimals. Meters are stored as
/// given; normalization and validity are checked by validate_model or on lookup.
class Model {
 public:
  static Model from_json_text(std::string_view text, const std::string& origin = "<string>");
  static Model from_file(const std::string& path);

  const StateSpace& space() const { return space_; }
  const std::vector<NamedEffects>& meters() const { return meters_; }
  const std::vector<NamedEffects>& effect_restrictions() const { return effect_restrictions_; }
  const std::vector<RestrictionSpec>& restrictions() const { return restrictions_; }
  const std::vector<NamedState>& states() const { return states_; }

  /// Throws LookupError for an unknown name, ValidationError if the meter is invalid on S.
  Meter meter(const std::string& name) const;
  EffectRestriction effect_restriction(const std::string& name) const;
  MeterRestriction restriction(const std::string& name) const;
  const Vector& state(const std::string& name) const;

 private:
  explicit Model(StateSpace s) : space_(std::move(s)) {}
  StateSpace space_;
  std::vector<NamedEffects> meters_;
  std::vector<NamedEffects> effect_restrictions_;
  std::vector<RestrictionSpec> restrictions_;
  std::vector<NamedState> states_;
};

struct ObjectVerdict {
  std::string kind;  // "state_space" | "meter" | "effect_restriction" | "restriction" | "state"
  std::string name;
  bool valid = true;
  std::vector<std::string> problems;
  bool operator==(const ObjectVerdict&) const = default;
};

struct ValidationReport {
  std::vector<ObjectVerdict> objects;
  bool all_valid() const;
  bool operator==(const ValidationReport&) const = default;
};

/// Meter normalization and effect validity, (E1)/(E2) of effect restrictions,
/// references and parameters of restrictions, and membership of named states.
ValidationReport validate_model(const Model& m);

}  // namespace gptr
