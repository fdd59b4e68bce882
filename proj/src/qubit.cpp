#include "gptr/qubit.hpp"

#include "gptr/errors.hpp"

namespace gptr {

PureQubitState::PureQubitState(Vector bloch) : bloch_(std::move(bloch)) {
  if (bloch_.size() != 3) throw ValidationError("Bloch vector must have 3 components");
  if (squared_norm(bloch_) != 1) throw ValidationError("Bloch vector of a pure state must have unit norm, got norm² " + to_string(squared_norm(bloch_)));
}

Effect PureQubitState::projector() const { return Effect(Rational(1, 2), Rational(1, 2) * bloch_); }

Rational overlap_sq(const PureQubitState& a, const PureQubitState& b) { return (1 + dot(a.bloch(), b.bloch())) / 2; }

namespace {

Rational inconclusive_c(const Rational& q1, const Rational& q2) { return 1 - (q1 + q2) / 2; }

Rational inconclusive_n2(const Rational& q1, const Rational& q2, const Rational& kappa) {
  return (q1 * q1 + q2 * q2 + 2 * kappa * q1 * q2) / 4;
}

}  // namespace

bool ud_parameters_valid(const Rational& q1, const Rational& q2, const Rational& kappa) {
  if (q1 < 0 || q2 < 0 || q1 > 1 || q2 > 1) return false;
  const Rational c = inconclusive_c(q1, q2);
  return c >= 0 && c * c >= inconclusive_n2(q1, q2, kappa);
}

UdMeter::UdMeter(Rational q1, Rational q2, Rational kappa) : q1_(std::move(q1)), q2_(std::move(q2)), kappa_(std::move(kappa)) {
  if (q1_ <= 0 || q2_ <= 0 || q1_ > 1 || q2_ > 1) throw DomainError("UD meter needs 0 < q1, q2 <= 1");
  if (kappa_ < -1 || kappa_ > 1) throw DomainError("n1·n2 must lie in [-1, 1]");
  if (!ud_parameters_valid(q1_, q2_, kappa_)) {
    throw DomainError("A? is not a valid effect: λmin(A?) < 0 (c = " + to_string(inconclusive_constant()) +
                      ", c² = " + to_string(Rational(inconclusive_constant() * inconclusive_constant())) +
                      " < ‖v‖² = " + to_string(inconclusive_norm_sq()) + ")");
  }
}

UdMeter::UdMeter(Rational q1, Rational q2, const PureQubitState& s1, const PureQubitState& s2)
    : UdMeter(std::move(q1), std::move(q2), dot(s1.bloch(), s2.bloch())) {
  n1_ = s1.bloch();
  n2_ = s2.bloch();
}

Rational UdMeter::inconclusive_constant() const { return inconclusive_c(q1_, q2_); }
Rational UdMeter::inconclusive_norm_sq() const { return inconclusive_n2(q1_, q2_, kappa_); }

std::vector<ExtremeValue> UdMeter::lambda_max() const {
  // A_i = q_i(1/2, −n/2) has λmax = q_i; A_? has λmax = c + ‖v‖.
  return {ExtremeValue(q1_), ExtremeValue(q2_),
          ExtremeValue::norm_expression(inconclusive_constant(), +1, inconclusive_norm_sq())};
}

std::optional<Meter> UdMeter::meter() const {
  if (!n1_ || !n2_) return std::nullopt;
  Effect a1(q1_ / 2, Rational(-q1_ / 2) * *n2_);
  Effect a2(q2_ / 2, Rational(-q2_ / 2) * *n1_);
  Effect rest = Effect::unit(3) - a1 - a2;
  return Meter({a1, a2, rest});
}

Rational ud_success(const UdMeter& m) { return (m.q1() + m.q2()) / 2 * (1 - (1 + m.kappa()) / 2); }

Rational ud_dichotomic_bound(const Rational& kappa) { return Rational(1, 2) * (1 - (1 + kappa) / 2); }

ExtremeValue ud_unrestricted_optimum(const Rational& kappa) {
  return ExtremeValue(1) - ExtremeValue::sqrt(Rational((1 + kappa) / 2));
}

ExtremeValue ud_max_symmetric_q(const Rational& kappa) {
  const Rational a = (1 + kappa) / 2;
  if (a == 1) return ExtremeValue(Rational(1, 2));
  // 1/(1 + √a) = (1 − √a)/(1 − a)
  return (ExtremeValue(1) - ExtremeValue::sqrt(a)) * Rational(1 / (1 - a));
}

namespace {

constexpr int kBisectionSteps = 48;
constexpr long kGridPoints = 64;
constexpr int kZoomRounds = 6;

}  // namespace

UdOptimum ud_max_valid_q(const Rational& kappa, UdConstraint constraint) {
  if (kappa < -1 || kappa > 1) throw DomainError("n1·n2 must lie in [-1, 1]");
  const bool simplex = constraint == UdConstraint::SumAtMostOne;
  const Rational factor = 1 - (1 + kappa) / 2;

  // Largest valid q2 for a given q1 (the valid q2 form an interval starting at 0).
  auto best_q2 = [&](const Rational& q1) -> Rational {
    const Rational cap = simplex ? std::min(Rational(1), Rational(1 - q1)) : Rational(1);
    if (ud_parameters_valid(q1, cap, kappa)) return cap;
    Rational lo = 0;
    Rational hi = cap;
    for (int i = 0; i < kBisectionSteps; ++i) {
      Rational mid = (lo + hi) / 2;
      if (ud_parameters_valid(q1, mid, kappa)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  };

  UdOptimum best{0, 0, -1};
  // On the constrained problem every point of q1 + q2 = 1 is valid; start from the
  // symmetric one so ties resolve to it.
  auto consider = [&](const Rational& q1) {
    Rational q2 = best_q2(q1);
    Rational success = (q1 + q2) / 2 * factor;
    if (success > best.success) best = {q1, q2, success};
  };

  if (simplex) consider(Rational(1, 2));
  Rational lo = 0;
  Rational hi = 1;
  for (int round = 0; round < kZoomRounds; ++round) {
    const Rational step = (hi - lo) / kGridPoints;
    for (long k = 0; k <= kGridPoints; ++k) consider(lo + step * k);
    lo = std::max(Rational(0), Rational(best.q1 - step));
    hi = std::min(Rational(1), Rational(best.q1 + step));
  }
  return best;
}

NTomicCertificate ud_not_2tomic_certificate(const UdMeter& m) {
  if (m.kappa() == 1) throw DomainError("identical states: A1 and A2 are proportional");
  if (m.kappa() == -1) throw DomainError("orthogonal states: positive multiples of A1 and A2 sum to u");
  const Rational total = m.q1() + m.q2();
  if (total <= 1) throw DomainError("q1 + q2 = " + to_string(total) + " <= 1: the criterion does not apply");
  NTomicCertificate cert;
  cert.verdict = NTomicVerdict::CertifiedNotNTomic;
  cert.route = NTomicRoute::IndecomposableFamily;
  cert.n = 2;
  cert.lambda_max = m.lambda_max();
  cert.outcomes = {0, 1};
  cert.sum = ExtremeValue(total);
  cert.bound = 1;
  cert.explanation = "A1, A2 are rank one (c² = ‖v‖²), not proportional (n1·n2 = " + to_string(m.kappa()) +
                     " ≠ 1), no positive combination equals u (n1·n2 ≠ -1), and λmax(A1) + λmax(A2) = " +
                     to_string(total) + " > 1";
  return cert;
}

Effect depolarize_effect(const Effect& e, const Rational& t) { return Effect(e.constant(), t * e.linear()); }

Effect shifted_depolarize_effect(const Effect& e, const Rational& t, std::span<const Rational> xi) {
  if (xi.size() != e.dimension()) throw DimensionError("ξ has the wrong dimension");
  if (squared_norm(xi) > 1) throw DomainError("ξ is not a state of the ball");
  return Effect(t * e.constant() + (1 - t) * e(xi), t * e.linear());
}

bool commutes_sharp(const Effect& e, const Effect& f) {
  if (e.dimension() != f.dimension()) throw DimensionError("commutes_sharp: dimension mismatch");
  return independent_subset({e.linear(), f.linear()}).size() <= 1;
}

Rational ud_polytope_optimum(const StateSpace& s, std::span<const Rational> n1, std::span<const Rational> n2) {
  if (!s.contains(n1) || !s.contains(n2)) throw DomainError("ud_polytope_optimum: a state lies outside S");
  const std::size_t dim = s.embedding_dimension();
  Vector w1{1}, w2{1};
  w1.insert(w1.end(), n1.begin(), n1.end());
  w2.insert(w2.end(), n2.begin(), n2.end());
  LinearProgram prog(2 * dim);
  prog.free_var.assign(2 * dim, true);
  for (std::size_t k = 0; k < s.vertices().size(); ++k) {
    const Vector w = s.embedded_vertex(k);
    Vector a1(2 * dim), a2(2 * dim), both(2 * dim);
    for (std::size_t j = 0; j < dim; ++j) {
      a1[j] = -w[j];
      a2[dim + j] = -w[j];
      both[j] = w[j];
      both[dim + j] = w[j];
    }
    prog.add_inequality(a1, 0);
    prog.add_inequality(a2, 0);
    prog.add_inequality(both, 1);
  }
  Vector z1(2 * dim), z2(2 * dim), obj(2 * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    z1[j] = w2[j];
    z2[dim + j] = w1[j];
    obj[j] = w1[j] / 2;
    obj[dim + j] = w2[j] / 2;
  }
  prog.add_equality(z1, 0);
  prog.add_equality(z2, 0);
  prog.objective = obj;
  LpOutcome out = lp_solve(prog);
  if (out.status != LpStatus::Optimal) throw Error("ud_polytope_optimum: unexpected LP status " + to_string(out.status));
  return out.value;
}

}  // namespace gptr
