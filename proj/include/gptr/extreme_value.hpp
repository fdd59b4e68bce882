#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gptr/rational.hpp"

namespace gptr {

/// Exact real of the form  c + Σ_k a_k·√n_k  with rational c, a_k and integer radicands.
///
/// Polytope extremal values are plain rationals; ball extremal values are
/// c ± √(‖v‖²) (a "norm expression"), and sums of those arise when λ values of
/// several effects are added. Radicands are kept pairwise "independent"
/// (n_i·n_j never a perfect square, no n_k a perfect square), so the value is zero
/// exactly when c = 0 and no roots remain. Signs of nonzero values are decided by
/// interval refinement with integer square roots, doubling the precision until the
/// interval excludes zero.
class ExtremeValue {
 public:
  struct Root {
    Rational coef;
    Integer radicand;  // > 1, not a perfect square
    bool operator==(const Root&) const = default;
  };

  ExtremeValue() = default;
  ExtremeValue(const Rational& r) : constant_(r) {}  // NOLINT: implicit by intent
  ExtremeValue(long r) : constant_(r) {}             // NOLINT

  /// c + sign·√norm_sq, with norm_sq >= 0.
  static ExtremeValue norm_expression(const Rational& c, int sign, const Rational& norm_sq);
  /// √r for r >= 0.
  static ExtremeValue sqrt(const Rational& r);

  bool is_rational() const { return roots_.empty(); }
  /// Throws DomainError if irrational.
  const Rational& rational() const;
  const Rational& constant() const { return constant_; }
  const std::vector<Root>& roots() const { return roots_; }

  int sign() const;

  ExtremeValue operator-() const;
  ExtremeValue& operator+=(const ExtremeValue& o);
  ExtremeValue& operator-=(const ExtremeValue& o);
  ExtremeValue& operator*=(const Rational& s);
  friend ExtremeValue operator+(ExtremeValue a, const ExtremeValue& b) { return a += b; }
  friend ExtremeValue operator-(ExtremeValue a, const ExtremeValue& b) { return a -= b; }
  friend ExtremeValue operator*(ExtremeValue a, const Rational& s) { return a *= s; }
  friend ExtremeValue operator*(const Rational& s, ExtremeValue a) { return a *= s; }

  friend bool operator==(const ExtremeValue& a, const ExtremeValue& b) { return (a - b).sign() == 0; }
  friend std::strong_ordering operator<=>(const ExtremeValue& a, const ExtremeValue& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Rational enclosure [lo, hi] of width <= 2^-bits·(Σ|a_k| + 1).
  std::pair<Rational, Rational> enclosure(unsigned bits) const;
  double approx() const;
  /// Decimal rendering, e.g. "0.292893218813".
  std::string decimal(int digits = 12) const;
  /// Exact rendering: "p/q" or "c + a*sqrt(n) ...".
  std::string exact_string() const;

 private:
  void add_root(const Rational& coef, const Integer& radicand);

  Rational constant_;
  std::vector<Root> roots_;  // sorted by radicand
};

}  // namespace gptr
