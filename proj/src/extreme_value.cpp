#include "gptr/extreme_value.hpp"

#include <algorithm>
#include <cstdio>

#include "gptr/errors.hpp"

namespace gptr {

namespace {

bool is_square(const Integer& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

ExtremeValue ExtremeValue::norm_expression(const Rational& c, int sign, const Rational& norm_sq) {
  ExtremeValue v(c);
  v += sign >= 0 ? sqrt(norm_sq) : -sqrt(norm_sq);
  return v;
}

ExtremeValue ExtremeValue::sqrt(const Rational& r) {
  if (r < 0) throw DomainError("sqrt of a negative rational");
  ExtremeValue v;
  // √(p/q) = √(p·q)/q
  Integer n = r.get_num() * r.get_den();
  v.add_root(Rational(1, 1) / Rational(r.get_den()), n);
  return v;
}

const Rational& ExtremeValue::rational() const {
  if (!roots_.empty()) throw DomainError("value " + exact_string() + " is irrational");
  return constant_;
}

void ExtremeValue::add_root(const Rational& coef_in, const Integer& radicand_in) {
  if (coef_in == 0 || radicand_in == 0) return;
  Rational coef = coef_in;
  Integer n = radicand_in;
  // Pull out small square factors to keep radicands short.
  for (unsigned long p = 2; p < 64; ++p) {
    Integer sq = p * p;
    while (n > 1 && mpz_divisible_p(n.get_mpz_t(), sq.get_mpz_t())) {
      n /= sq;
      coef *= p;
    }
  }
  if (is_square(n)) {
    constant_ += coef * Rational(isqrt(n));
    return;
  }
  for (auto it = roots_.begin(); it != roots_.end(); ++it) {
    Integer prod = n * it->radicand;
    if (is_square(prod)) {
      // √n = (√(n·R)/R)·√R
      it->coef += coef * Rational(isqrt(prod)) / Rational(it->radicand);
      if (it->coef == 0) roots_.erase(it);
      return;
    }
  }
  Root root{coef, n};
  auto pos = std::lower_bound(roots_.begin(), roots_.end(), root,
                              [](const Root& a, const Root& b) { return a.radicand < b.radicand; });
  roots_.insert(pos, root);
}

ExtremeValue ExtremeValue::operator-() const {
  ExtremeValue v = *this;
  v.constant_ = -v.constant_;
  for (auto& r : v.roots_) r.coef = -r.coef;
  return v;
}

ExtremeValue& ExtremeValue::operator+=(const ExtremeValue& o) {
  constant_ += o.constant_;
  for (const auto& r : o.roots_) add_root(r.coef, r.radicand);
  return *this;
}

ExtremeValue& ExtremeValue::operator-=(const ExtremeValue& o) { return *this += -o; }

ExtremeValue& ExtremeValue::operator*=(const Rational& s) {
  if (s == 0) {
    constant_ = 0;
    roots_.clear();
    return *this;
  }
  constant_ *= s;
  for (auto& r : roots_) r.coef *= s;
  return *this;
}

std::pair<Rational, Rational> ExtremeValue::enclosure(unsigned bits) const {
  Rational lo = constant_, hi = constant_;
  Integer scale = 1;
  scale <<= bits;
  Integer scale_sq = scale * scale;
  for (const auto& r : roots_) {
    Integer s = isqrt(r.radicand * scale_sq);
    Rational below(s, scale), above(s + 1, scale);
    below.canonicalize();
    above.canonicalize();
    if (r.coef > 0) {
      lo += r.coef * below;
      hi += r.coef * above;
    } else {
      lo += r.coef * above;
      hi += r.coef * below;
    }
  }
  return {lo, hi};
}

int ExtremeValue::sign() const {
  if (roots_.empty()) return sgn(constant_);
  // Nonzero by independence of the radicands; refine until the sign shows.
  for (unsigned bits = 32;; bits *= 2) {
    auto [lo, hi] = enclosure(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

double ExtremeValue::approx() const {
  auto [lo, hi] = enclosure(80);
  return to_double((lo + hi) / 2);
}

std::string ExtremeValue::decimal(int digits) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, approx());
  return buf;
}

std::string ExtremeValue::exact_string() const {
  std::string out = constant_.get_str();
  for (const auto& r : roots_) {
    out += r.coef < 0 ? " - " : " + ";
    Rational a = abs(r.coef);
    if (a != 1) out += a.get_str() + "*";
    out += "sqrt(" + r.radicand.get_str() + ")";
  }
  return out;
}

}  // namespace gptr
