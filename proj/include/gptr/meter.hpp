#pragma once

#include <string>
#include <vector>

#include "gptr/effect.hpp"
#include "gptr/state_space.hpp"

namespace gptr {

/// Finite-outcome meter: outcome x ↦ effect A_x with Σ_x A_x = u exactly.
/// Outcomes are indexed 0..n-1 internally (labels 1..n in reports).
class Meter {
 public:
  /// Throws DimensionError on mixed dimensions, ValidationError if empty or not normalized.
  explicit Meter(std::vector<Effect> effects);

  std::size_t outcomes() const { return effects_.size(); }
  std::size_t dimension() const { return effects_.front().dimension(); }
  const Effect& operator[](std::size_t x) const { return effects_[x]; }
  const std::vector<Effect>& effects() const { return effects_; }

  /// Same meter with o-effects appended up to `n` outcomes.
  Meter padded(std::size_t n) const;
  /// Same meter with every o-effect removed (at least one outcome kept).
  Meter without_zero_outcomes() const;

  bool operator==(const Meter&) const = default;

 private:
  std::vector<Effect> effects_;
};

/// Σ_x A_x minus u; zero exactly for a normalized family.
Effect normalization_defect(const std::vector<Effect>& effects);

struct MeterCheck {
  bool valid = true;
  std::vector<std::string> problems;
};

/// Normalization plus validity of each effect on S.
MeterCheck check_meter(const std::vector<Effect>& effects, const StateSpace& s);

/// Default cap on outcomes for range enumeration (2^20 subset sums).
inline constexpr std::size_t kRangeOutcomeCap = 20;

/// All subset sums Σ_{x∈Ω̃} A_x, deduplicated and sorted; contains o and u.
/// Throws ResourceError above `cap` outcomes.
std::vector<Effect> meter_range(const Meter& a, std::size_t cap = kRangeOutcomeCap);

/// Every A_x = p_x·u.
bool is_trivial(const Meter& a);

/// T_x = p_x·u. Throws ValidationError unless p is a probability vector.
Meter trivial_meter(const Vector& p, std::size_t d);

/// Dichotomic meter (e, u − e).
Meter dichotomic(const Effect& e);

bool is_probability_vector(const Vector& p);

std::string to_string(const Meter& a);

}  // namespace gptr
