#include "gptr/effect.hpp"

#include "gptr/errors.hpp"

namespace gptr {

Effect::Effect(Rational constant, Vector linear) : constant_(std::move(constant)), linear_(std::move(linear)) {}

Effect Effect::unit(std::size_t d) { return Effect(1, Vector(d)); }
Effect Effect::zero(std::size_t d) { return Effect(0, Vector(d)); }

Effect Effect::from_coords(std::span<const Rational> coords) {
  if (coords.empty()) throw DimensionError("effect needs at least the constant coordinate");
  return Effect(coords[0], Vector(coords.begin() + 1, coords.end()));
}

Vector Effect::coords() const {
  Vector out;
  out.reserve(linear_.size() + 1);
  out.push_back(constant_);
  out.insert(out.end(), linear_.begin(), linear_.end());
  return out;
}

Rational Effect::operator()(std::span<const Rational> x) const { return constant_ + dot(linear_, x); }

bool Effect::is_zero() const { return constant_ == 0 && gptr::is_zero(linear_); }
bool Effect::is_constant() const { return gptr::is_zero(linear_); }

Effect& Effect::operator+=(const Effect& o) {
  if (o.dimension() != dimension()) throw DimensionError("effect dimensions differ");
  constant_ += o.constant_;
  for (std::size_t i = 0; i < linear_.size(); ++i) linear_[i] += o.linear_[i];
  return *this;
}

Effect& Effect::operator-=(const Effect& o) {
  if (o.dimension() != dimension()) throw DimensionError("effect dimensions differ");
  constant_ -= o.constant_;
  for (std::size_t i = 0; i < linear_.size(); ++i) linear_[i] -= o.linear_[i];
  return *this;
}

Effect& Effect::operator*=(const Rational& s) {
  constant_ *= s;
  for (auto& x : linear_) x *= s;
  return *this;
}

std::strong_ordering operator<=>(const Effect& a, const Effect& b) {
  auto order = [](const Rational& x, const Rational& y) {
    int c = cmp(x, y);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  };
  if (auto c = order(a.constant_, b.constant_); c != 0) return c;
  if (a.linear_.size() != b.linear_.size()) return a.linear_.size() <=> b.linear_.size();
  for (std::size_t i = 0; i < a.linear_.size(); ++i) {
    if (auto c = order(a.linear_[i], b.linear_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Effect& e) { return to_string(std::span<const Rational>(e.coords())); }

}  // namespace gptr
