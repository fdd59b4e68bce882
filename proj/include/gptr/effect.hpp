#pragma once

#include <compare>
#include <string>

#include "gptr/rational.hpp"

namespace gptr {

/// Affine functional e(x) = c + v·x on a d-dimensional state space, stored in dual
/// coordinates (c, v). The unit effect is u = (1, 0) and the zero effect is o = (0, 0).
class Effect {
 public:
  Effect() = default;
  Effect(Rational constant, Vector linear);

  static Effect unit(std::size_t d);
  static Effect zero(std::size_t d);
  /// From (c, v_1, ..., v_d).
  static Effect from_coords(std::span<const Rational> coords);

  const Rational& constant() const { return constant_; }
  const Vector& linear() const { return linear_; }
  std::size_t dimension() const { return linear_.size(); }
  /// (c, v_1, ..., v_d); pairs with embedded states (1, x).
  Vector coords() const;

  /// c + v·x, without any membership check on x.
  Rational operator()(std::span<const Rational> x) const;

  bool is_zero() const;
  /// v = 0, i.e. e = c·u.
  bool is_constant() const;

  Effect& operator+=(const Effect& o);
  Effect& operator-=(const Effect& o);
  Effect& operator*=(const Rational& s);
  friend Effect operator+(Effect a, const Effect& b) { return a += b; }
  friend Effect operator-(Effect a, const Effect& b) { return a -= b; }
  friend Effect operator*(const Rational& s, Effect a) { return a *= s; }
  friend Effect operator*(Effect a, const Rational& s) { return a *= s; }

  friend bool operator==(const Effect& a, const Effect& b) = default;
  /// Lexicographic on (c, v); used for deduplication only.
  friend std::strong_ordering operator<=>(const Effect& a, const Effect& b);

 private:
  Rational constant_;
  Vector linear_;
};

std::string to_string(const Effect& e);

}  // namespace gptr
