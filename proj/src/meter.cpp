#include "gptr/meter.hpp"

#include <algorithm>

#include "gptr/errors.hpp"

namespace gptr {

Effect normalization_defect(const std::vector<Effect>& effects) {
  if (effects.empty()) throw ValidationError("meter has no outcomes");
  const std::size_t d = effects.front().dimension();
  Effect sum = Effect::zero(d);
  for (const auto& e : effects) sum += e;
  return sum - Effect::unit(d);
}

Meter::Meter(std::vector<Effect> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw ValidationError("meter has no outcomes");
  const std::size_t d = effects_.front().dimension();
  for (const auto& e : effects_) {
    if (e.dimension() != d) throw DimensionError("meter effects have different dimensions");
  }
  Effect defect = normalization_defect(effects_);
  if (!defect.is_zero()) {
    throw ValidationError("normalization violated: effects sum to u + " + to_string(defect));
  }
}

Meter Meter::padded(std::size_t n) const {
  auto effects = effects_;
  while (effects.size() < n) effects.push_back(Effect::zero(dimension()));
  return Meter(std::move(effects));
}

Meter Meter::without_zero_outcomes() const {
  std::vector<Effect> kept;
  for (const auto& e : effects_) {
    if (!e.is_zero()) kept.push_back(e);
  }
  return Meter(std::move(kept));
}

MeterCheck check_meter(const std::vector<Effect>& effects, const StateSpace& s) {
  MeterCheck out;
  if (effects.empty()) {
    out.valid = false;
    out.problems.push_back("meter has no outcomes");
    return out;
  }
  for (std::size_t x = 0; x < effects.size(); ++x) {
    if (effects[x].dimension() != s.dimension()) {
      out.valid = false;
      out.problems.push_back("outcome " + std::to_string(x + 1) + ": dimension mismatch");
      return out;
    }
  }
  Effect defect = normalization_defect(effects);
  if (!defect.is_zero()) {
    out.valid = false;
    out.problems.push_back("normalization violated: effects sum to u + " + to_string(defect));
  }
  for (std::size_t x = 0; x < effects.size(); ++x) {
    auto chk = check_effect(effects[x], s);
    if (!chk.valid) {
      out.valid = false;
      out.problems.push_back("outcome " + std::to_string(x + 1) + ": invalid effect, " + chk.reason);
    }
  }
  return out;
}

std::vector<Effect> meter_range(const Meter& a, std::size_t cap) {
  const std::size_t n = a.outcomes();
  if (n > cap) {
    throw ResourceError("range of a " + std::to_string(n) + "-outcome meter exceeds the cap of " +
                        std::to_string(cap) + " outcomes");
  }
  std::vector<Effect> sums;
  sums.reserve(std::size_t{1} << n);
  sums.push_back(Effect::zero(a.dimension()));
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t existing = sums.size();
    for (std::size_t i = 0; i < existing; ++i) sums.push_back(sums[i] + a[x]);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

bool is_trivial(const Meter& a) {
  return std::all_of(a.effects().begin(), a.effects().end(), [](const Effect& e) { return e.is_constant(); });
}

bool is_probability_vector(const Vector& p) {
  if (p.empty()) return false;
  Rational sum = 0;
  for (const auto& x : p) {
    if (x < 0) return false;
    sum += x;
  }
  return sum == 1;
}

Meter trivial_meter(const Vector& p, std::size_t d) {
  if (!is_probability_vector(p)) throw ValidationError("trivial meter needs a probability vector");
  std::vector<Effect> effects;
  for (const auto& px : p) effects.push_back(px * Effect::unit(d));
  return Meter(std::move(effects));
}

Meter dichotomic(const Effect& e) { return Meter({e, Effect::unit(e.dimension()) - e}); }

std::string to_string(const Meter& a) {
  std::string out = "[";
  for (std::size_t x = 0; x < a.outcomes(); ++x) {
    if (x) out += ", ";
    out += to_string(a[x]);
  }
  return out + "]";
}

}  // namespace gptr
