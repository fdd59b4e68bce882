#include "gptr/sampling.hpp"

#include "gptr/errors.hpp"

namespace gptr {

namespace {

constexpr unsigned long kDenominator = 12;

void require_polytope(const StateSpace& s, const char* what) {
  if (!s.is_polytope()) throw UnsupportedError(std::string(what) + " requires the polytope backend");
}

std::pair<Rational, Rational> vertex_range(const Effect& e, const StateSpace& s) {
  Rational lo = e(s.vertices().front());
  Rational hi = lo;
  for (const auto& v : s.vertices()) {
    Rational val = e(v);
    if (val < lo) lo = val;
    if (val > hi) hi = val;
  }
  return {lo, hi};
}

Vector random_direction(Rng& rng, std::size_t d) {
  Vector v(d);
  for (auto& x : v) x = rng.signed_fraction(kDenominator);
  return v;
}

}  // namespace

Rational Rng::fraction(unsigned long den) {
  return ratio(static_cast<long>(next() % (den + 1)), static_cast<long>(den));
}

Rational Rng::signed_fraction(unsigned long den) {
  long k = static_cast<long>(next() % (2 * den + 1)) - static_cast<long>(den);
  return ratio(k, static_cast<long>(den));
}

Vector random_probability_vector(Rng& rng, std::size_t n) {
  Vector p(n);
  Rational total;
  for (auto& x : p) {
    x = Rational(static_cast<long>(1 + rng.index(kDenominator)));
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

Matrix random_stochastic_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Rational total;
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rng.index(3) == 0 ? Rational(0) : Rational(static_cast<long>(1 + rng.index(kDenominator)));
      total += m(r, c);
    }
    if (total == 0) {
      m(r, rng.index(cols)) = 1;
      total = 1;
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) /= total;
  }
  return m;
}

Effect random_effect(Rng& rng, const StateSpace& s) {
  require_polytope(s, "random_effect");
  Effect f(0, random_direction(rng, s.dimension()));
  auto [lo, hi] = vertex_range(f, s);
  Rational a = rng.fraction(kDenominator);
  Rational b = rng.fraction(kDenominator);
  if (a > b) std::swap(a, b);
  if (hi == lo) return Effect::unit(s.dimension()) * a;
  // Map [lo, hi] onto [a, b].
  Rational scale = (b - a) / (hi - lo);
  return scale * f + Effect::unit(s.dimension()) * Rational(a - scale * lo);
}

Meter random_meter(Rng& rng, const StateSpace& s, std::size_t n) {
  require_polytope(s, "random_meter");
  if (n == 0) throw DomainError("random_meter: outcome count must be positive");
  const std::size_t d = s.dimension();
  std::vector<Effect> parts;
  Effect total = Effect::zero(d);
  for (std::size_t x = 0; x + 1 < n; ++x) {
    Effect f(0, random_direction(rng, d));
    auto [lo, hi] = vertex_range(f, s);
    // Shift so the minimum is a random nonnegative level.
    f += Effect::unit(d) * Rational(rng.fraction(kDenominator) - lo);
    parts.push_back(f);
    total += f;
  }
  if (!parts.empty()) {
    auto [lo, hi] = vertex_range(total, s);
    if (hi > 0) {
      Rational scale = ratio(static_cast<long>(1 + rng.index(kDenominator)), static_cast<long>(kDenominator)) / hi;
      for (auto& f : parts) f *= scale;
    }
  }
  Effect rest = Effect::unit(d);
  for (const auto& f : parts) rest -= f;
  parts.push_back(rest);
  return Meter(std::move(parts));
}

}  // namespace gptr
