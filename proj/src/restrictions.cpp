#include "gptr/restrictions.hpp"

#include <algorithm>

#include "gptr/errors.hpp"
#include "gptr/sampling.hpp"
#include "gptr/vertex_enum.hpp"

namespace gptr {

HullMembership hull_membership(const Effect& e, const std::vector<Effect>& generators) {
  HullMembership out;
  if (generators.empty()) {
    // conv(∅) is empty: 0·λ = 1 is the certificate.
    out.certificate = FarkasCertificate{Vector{-1}, {}};
    return out;
  }
  const std::size_t k = generators.size();
  const Vector target = e.coords();
  LinearProgram prog(k);
  prog.add_equality(Vector(k, Rational(1)), 1);
  std::vector<Vector> coords;
  for (const auto& g : generators) {
    if (g.dimension() != e.dimension()) throw DimensionError("hull_membership: generator dimension differs");
    coords.push_back(g.coords());
  }
  for (std::size_t c = 0; c < target.size(); ++c) {
    Vector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = coords[j][c];
    prog.add_equality(row, target[c]);
  }
  LpOutcome res = lp_solve(prog);
  if (res.has_point()) {
    out.member = true;
    out.weights = std::move(res.point);
  } else {
    out.certificate = std::move(res.certificate);
  }
  return out;
}

bool in_hull(const Effect& e, const std::vector<Effect>& generators) { return hull_membership(e, generators).member; }

RestrictionReport effect_restriction_validate(const EffectRestriction& r, const StateSpace& s) {
  RestrictionReport rep;
  const std::size_t d = s.dimension();
  for (std::size_t k = 0; k < r.generators.size(); ++k) {
    EffectCheck chk = check_effect(r.generators[k], s);
    if (!chk.valid) {
      rep.invalid_generators.push_back(k);
      rep.problems.push_back("generator " + std::to_string(k + 1) + " is not a valid effect: " + chk.reason);
    }
  }
  rep.contains_unit = in_hull(Effect::unit(d), r.generators);
  if (!rep.contains_unit) rep.problems.push_back("unit effect u is not in the restriction (E1)");
  rep.contains_zero = in_hull(Effect::zero(d), r.generators);
  if (!rep.contains_zero) rep.problems.push_back("zero effect o is not in the restriction");
  for (std::size_t k = 0; k < r.generators.size(); ++k) {
    if (!in_hull(Effect::unit(d) - r.generators[k], r.generators)) {
      rep.missing_complements.push_back(k);
      rep.problems.push_back("complement u - e of generator " + std::to_string(k + 1) +
                             " is not in the restriction, so e occurs in no allowed meter (E2)");
    }
  }
  rep.valid = rep.problems.empty();
  return rep;
}

std::string kind_name(const MeterRestriction& r) {
  if (std::holds_alternative<GeneratedBySimulation>(r)) return "sim";
  if (std::holds_alternative<InducedByEffects>(r)) return "effects";
  return "noise";
}

bool in_effect_restricted_meters(const Meter& a, const EffectRestriction& r) {
  for (const auto& e : meter_range(a)) {
    if (!in_hull(e, r.generators)) return false;
  }
  return true;
}

bool is_member(const Meter& a, const MeterRestriction& r, const StateSpace& s) {
  if (const auto* sim = std::get_if<GeneratedBySimulation>(&r)) return simulable(a, sim->generators).simulable;
  if (const auto* ind = std::get_if<InducedByEffects>(&r)) return in_effect_restricted_meters(a, ind->effects);
  return in_noise_restriction(a, std::get<NoiseFamily>(r).t, s);
}

namespace {

void dedupe(std::vector<Effect>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_unit_interval(const Rational& t) {
  if (t < 0 || t > 1) throw DomainError("noise parameter t = " + to_string(t) + " is outside [0, 1]");
}

}  // namespace

EffectRestriction effects_of_restriction(const MeterRestriction& r, const StateSpace& s) {
  const std::size_t d = s.dimension();
  EffectRestriction out;
  if (const auto* sim = std::get_if<GeneratedBySimulation>(&r)) {
    for (const auto& b : sim->generators) {
      auto ran = meter_range(b);
      out.generators.insert(out.generators.end(), ran.begin(), ran.end());
    }
  } else if (const auto* ind = std::get_if<InducedByEffects>(&r)) {
    const auto& gens = ind->effects.generators;
    const Effect u = Effect::unit(d);
    const Effect o = Effect::zero(d);
    if (in_hull(u, gens) && in_hull(o, gens)) {
      out.generators.push_back(o);
      out.generators.push_back(u);
    }
    for (const auto& g : gens) {
      if (in_hull(u - g, gens) && in_hull(o, gens)) {
        for (const auto& e : {o, g, u - g, u}) out.generators.push_back(e);
      }
    }
  } else {
    const Rational& t = std::get<NoiseFamily>(r).t;
    require_unit_interval(t);
    if (!s.is_polytope()) throw UnsupportedError("noise restriction effects need the polytope backend");
    for (const auto& g : effect_space_vertices(s)) {
      out.generators.push_back(t * g);
      out.generators.push_back(t * g + Effect::unit(d) * Rational(1 - t));
    }
  }
  dedupe(out.generators);
  return out;
}

bool is_convex_closed(const EffectRestriction&) { return true; }

bool is_convex_closed(const std::function<bool(const Effect&)>& accepts, const std::vector<Effect>& probes) {
  std::vector<const Effect*> accepted;
  for (const auto& p : probes) {
    if (accepts(p)) accepted.push_back(&p);
  }
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    for (std::size_t j = i + 1; j < accepted.size(); ++j) {
      if (!accepts(Rational(1, 2) * (*accepted[i] + *accepted[j]))) return false;
    }
  }
  return true;
}

bool Subalgebra::contains(const Effect& e, const StateSpace& s) const {
  std::vector<Vector> rows = basis;
  rows.push_back(e.coords());
  return independent_subset(rows).size() == basis.size() && is_valid_effect(e, s);
}

Subalgebra subalgebra_closure(const std::vector<Effect>& effects, const StateSpace& s) {
  std::vector<Vector> rows{Effect::unit(s.dimension()).coords()};
  for (const auto& e : effects) {
    if (e.dimension() != s.dimension()) throw DimensionError("subalgebra_closure: effect dimension differs");
    rows.push_back(e.coords());
  }
  Subalgebra out;
  for (auto i : independent_subset(rows)) out.basis.push_back(rows[i]);
  return out;
}

SubalgebraReport is_subalgebra(const EffectRestriction& r, const StateSpace& s) {
  if (!s.is_polytope()) throw UnsupportedError("is_subalgebra needs the polytope backend");
  SubalgebraReport rep;
  const Subalgebra u = subalgebra_closure(r.generators, s);
  rep.span_dimension = u.dimension();
  Matrix gens(0, s.embedding_dimension());
  for (const auto& g : r.generators) gens.append_row(g.coords());
  rep.hull_dimension = rank(gens);
  bool generators_valid = true;
  for (const auto& g : r.generators) generators_valid = generators_valid && is_valid_effect(g, s);

  // U ∩ E(S) in the coordinates x of f = Σ_j x_j b_j.
  const std::size_t k = u.dimension();
  Matrix g(0, k);
  Vector h;
  for (std::size_t w = 0; w < s.vertices().size(); ++w) {
    const Vector vert = s.embedded_vertex(w);
    Vector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(u.basis[j], vert);
    g.append_row(Rational(-1) * row);
    h.push_back(0);
    g.append_row(row);
    h.push_back(1);
  }
  for (const auto& x : enumerate_vertices(g, h)) {
    Vector coords(s.embedding_dimension());
    for (std::size_t j = 0; j < k; ++j) coords = coords + x[j] * u.basis[j];
    Effect vertex = Effect::from_coords(coords);
    ++rep.vertices_checked;
    if (!in_hull(vertex, r.generators)) {
      rep.outside_vertex = vertex;
      break;
    }
  }
  rep.is_subalgebra = generators_valid && !rep.outside_vertex && rep.hull_dimension == rep.span_dimension;
  return rep;
}

ExtremeValue noise_content(const Meter& b, const StateSpace& s) {
  ExtremeValue total;
  for (const auto& e : b.effects()) total += lambda_min(e, s);
  return total;
}

bool in_noise_restriction(const Meter& b, const Rational& t, const StateSpace& s) {
  require_unit_interval(t);
  return noise_content(b, s) >= ExtremeValue(Rational(1 - t));
}

namespace {

Rational rational_lambda_max(const Effect& e, const StateSpace& s) {
  ExtremeValue v = lambda_max(e, s);
  if (!v.is_rational()) throw UnsupportedError("irrational λmax in the R3 construction");
  return v.rational();
}

bool is_extreme_effect(const Effect& e, const StateSpace& s) {
  if (s.is_ball()) return true;  // rank-one effects with λmax = 1 are extreme on the ball
  Matrix active(0, s.embedding_dimension());
  for (std::size_t k = 0; k < s.vertices().size(); ++k) {
    Rational val = e(s.vertices()[k]);
    if (val == 0 || val == 1) active.append_row(s.embedded_vertex(k));
  }
  return rank(active) == s.embedding_dimension();
}

}  // namespace

R3Witness build_r3_witness(const Rational& t, const Effect& e, const StateSpace& s) {
  if (t <= 0 || t >= 1) throw DomainError("build_r3_witness needs t in (0, 1), got " + to_string(t));
  if (!is_valid_effect(e, s) || e.is_zero()) throw DomainError("build_r3_witness: e is not a nonzero valid effect");
  if (!is_indecomposable(e, s)) throw DomainError("build_r3_witness: e is not indecomposable");
  if (rational_lambda_max(e, s) != 1) throw DomainError("build_r3_witness: λmax(e) is not 1");
  if (!is_extreme_effect(e, s)) throw DomainError("build_r3_witness: e is not an extreme effect");
  const std::size_t d = s.dimension();
  const Effect u = Effect::unit(d);

  std::vector<Effect> parts{e};
  for (auto& f : decompose_indecomposable_exact(u - e, s)) parts.push_back(std::move(f));
  std::stable_partition(parts.begin(), parts.end(), [&](const Effect& f) { return rational_lambda_max(f, s) == 1; });
  std::size_t m = 0;
  while (m < parts.size() && rational_lambda_max(parts[m], s) == 1) ++m;
  const std::size_t n = parts.size();

  const Rational q = (t + 1) / 2;
  std::vector<Effect> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(i < m ? q * parts[i] : parts[i]);
  for (std::size_t i = 0; i < m; ++i) b.push_back(Rational(1 - q) * parts[i]);

  Rational l_b;
  for (const auto& f : b) l_b = std::max(l_b, rational_lambda_max(f, s));
  const Rational lower = (l_b - t) / ((1 - t) * l_b);
  const Rational r = (lower + 1) / 2;
  const Rational ri = r / static_cast<long>(b.size());
  const Rational scale = 1 - (1 - t) * r;

  std::vector<Effect> a;
  for (const auto& f : b) a.push_back(scale * f + u * Rational((1 - t) * ri));
  R3Witness w{Meter(std::move(a)), Meter(parts), m, Meter(b), q, l_b, r, Vector(b.size(), ri)};

  if (noise_content(w.meter, s) != ExtremeValue(Rational((1 - t) * r))) {
    throw Error("build_r3_witness: noise content differs from (1-t)r");
  }
  if (s.is_polytope()) {
    const auto er = effects_of_restriction(NoiseFamily{t}, s);
    for (const auto& f : w.meter.effects()) {
      if (!in_hull(f, er.generators)) throw Error("build_r3_witness: effect outside E_{R_t}");
    }
  }
  return w;
}

Effect find_extreme_indecomposable(const StateSpace& s) {
  const std::size_t d = s.dimension();
  if (s.is_ball()) {
    Vector v(d);
    v[d - 1] = Rational(1, 2);
    return Effect(Rational(1, 2), v);
  }
  for (const auto& g : effect_space_vertices(s)) {
    if (g.is_zero() || g == Effect::unit(d)) continue;
    if (is_indecomposable(g, s) && rational_lambda_max(g, s) == 1) return g;
  }
  throw DomainError("no extreme indecomposable effect found");
}

std::string to_string(RestrictionClass c) {
  switch (c) {
    case RestrictionClass::R1: return "R1";
    case RestrictionClass::R2: return "R2";
    case RestrictionClass::R3: return "R3";
    case RestrictionClass::NoRestriction: return "no-restriction";
    case RestrictionClass::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Random meter whose effects are peeled off u along elements of `pool`.
std::optional<Meter> peel_meter(Rng& rng, const std::vector<Effect>& pool, const StateSpace& s) {
  const std::size_t d = s.dimension();
  Effect rest = Effect::unit(d);
  std::vector<Effect> effects;
  const std::size_t steps = 2 + rng.index(3);
  for (std::size_t k = 0; k < steps && !pool.empty(); ++k) {
    const Effect& g = pool[rng.index(pool.size())];
    std::optional<Rational> fit;
    for (const auto& v : s.vertices()) {
      Rational gv = g(v);
      if (gv <= 0) continue;
      Rational room = rest(v) / gv;
      if (!fit || room < *fit) fit = room;
    }
    if (!fit || *fit <= 0) continue;
    Rational lambda = std::min(*fit, Rational(1));
    if (rng.index(2) == 0) lambda *= ratio(static_cast<long>(1 + rng.index(12)), 12);
    effects.push_back(lambda * g);
    rest -= lambda * g;
  }
  if (!rest.is_zero()) effects.push_back(rest);
  if (effects.size() < 2) return std::nullopt;
  return Meter(std::move(effects));
}

bool linearly_independent_effects(const Meter& a) {
  std::vector<Vector> rows;
  for (const auto& e : a.effects()) {
    if (!e.is_zero()) rows.push_back(e.coords());
  }
  return independent_subset(rows).size() == rows.size();
}

}  // namespace

namespace {

Rational vertex_spread(const Effect& e, const StateSpace& s) {
  Rational lo = e(s.vertices().front());
  Rational hi = lo;
  for (const auto& v : s.vertices()) {
    Rational val = e(v);
    lo = std::min(lo, val);
    hi = std::max(hi, val);
  }
  return hi - lo;
}

// Meter with λmin = 0 on every outcome: random linear parts summing to zero, each lifted
// until it touches zero on some vertex, then rescaled so the constants sum to one.
std::optional<Meter> boundary_meter(Rng& rng, std::size_t k, const StateSpace& s) {
  const std::size_t d = s.dimension();
  std::vector<Vector> lin(k, Vector(d));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (auto& x : lin[i]) x = rng.signed_fraction(12);
    lin[k - 1] = lin[k - 1] - lin[i];
  }
  std::vector<Effect> effects;
  Rational total;
  for (auto& a : lin) {
    Effect f(0, std::move(a));
    Rational lo = f(s.vertices().front());
    for (const auto& v : s.vertices()) lo = std::min(lo, f(v));
    f += Effect::unit(d) * Rational(-lo);
    total -= lo;
    effects.push_back(std::move(f));
  }
  if (total == 0) return std::nullopt;
  for (auto& f : effects) f *= Rational(1 / total);
  return Meter(std::move(effects));
}

// Searches for a meter whose whole range lies in E_{R_t} while its noise content is below 1 - t.
// Candidates are A = αB + (1 - α)T with w(B) = 0, T uniform trivial, and t < α ≤ t / (max spread
// over ran(B)), so that w(A) = 1 - α < 1 - t.
std::optional<Meter> noise_range_witness(const Rational& t, const EffectRestriction& er, const StateSpace& s,
                                         Rng& rng, std::size_t budget, std::size_t& used) {
  const std::size_t d = s.dimension();
  for (std::size_t k = 0; k < budget; ++k) {
    ++used;
    auto b = boundary_meter(rng, 3 + rng.index(2), s);
    if (!b) continue;
    Rational widest = 0;
    for (const auto& f : meter_range(*b)) widest = std::max(widest, vertex_spread(f, s));
    if (widest == 0) continue;
    const Rational cap = std::min(Rational(1), Rational(t / widest));
    if (cap <= t) continue;
    for (const Rational& alpha : {cap, Rational((t + cap) / 2)}) {
      const Rational share = (1 - alpha) / static_cast<long>(b->outcomes());
      std::vector<Effect> effects;
      for (const auto& f : b->effects()) effects.push_back(alpha * f + Effect::unit(d) * share);
      Meter a(std::move(effects));
      if (in_effect_restricted_meters(a, er) && !in_noise_restriction(a, t, s)) return a;
    }
  }
  return std::nullopt;
}

}  // namespace

ClassificationResult classify(const MeterRestriction& r, const StateSpace& s, const ClassifyOptions& opts) {
  if (!s.is_polytope()) throw UnsupportedError("classify needs the polytope backend");
  ClassificationResult res;
  res.seed = opts.seed;
  res.budget = opts.budget;
  res.effects = effects_of_restriction(r, s);

  for (const auto& v : effect_space_vertices(s)) {
    if (!in_hull(v, res.effects.generators)) {
      res.effect_outside = v;
      break;
    }
  }
  const bool full = !res.effect_outside;
  res.trail.push_back(full ? "every vertex of E(S) lies in E_R: E_R = E(S)"
                           : "vertex " + to_string(*res.effect_outside) + " of E(S) lies outside E_R");

  if (std::holds_alternative<InducedByEffects>(r)) {
    res.trail.push_back("R is induced by an effect restriction, so R = M_{E_R}");
    res.label = full ? RestrictionClass::NoRestriction : RestrictionClass::R1;
    return res;
  }

  if (const auto* noise = std::get_if<NoiseFamily>(&r)) {
    if (noise->t == 1) {
      res.trail.push_back("t = 1: R_t contains every meter");
      res.label = RestrictionClass::NoRestriction;
    } else if (noise->t == 0) {
      res.trail.push_back("t = 0: R_t is the set of trivial meters, equal to M_{E_R} for E_R = {r u}");
      res.label = RestrictionClass::R1;
    } else {
      Effect e = find_extreme_indecomposable(s);
      R3Witness w = build_r3_witness(noise->t, e, s);
      if (in_effect_restricted_meters(w.meter, res.effects)) {
        res.meter_outside = w.meter;
        res.trail.push_back("constructed meter from extreme indecomposable effect " + to_string(e) +
                            " with its whole range in E_R and noise content " +
                            to_string(Rational((1 - noise->t) * w.r)) + " < 1 - t");
      } else {
        res.trail.push_back("meter constructed from extreme indecomposable effect " + to_string(e) +
                            " has every effect in E_R but a coarse-graining outside E_R");
        Rng rng(opts.seed);
        res.meter_outside = noise_range_witness(noise->t, res.effects, s, rng, opts.budget, res.samples_used);
        if (res.meter_outside) {
          res.trail.push_back("sampled meter with its whole range in E_R and noise content below 1 - t (" +
                              std::to_string(res.samples_used) + " samples)");
        }
      }
      if (res.meter_outside) {
        res.label = full ? RestrictionClass::R2 : RestrictionClass::R3;
      } else {
        res.trail.push_back("no meter of M_{E_R} outside R_t found within the budget of " + std::to_string(opts.budget));
        res.label = RestrictionClass::Unknown;
      }
    }
    return res;
  }

  const auto& gens = std::get<GeneratedBySimulation>(r).generators;
  if (gens.size() == 1 && linearly_independent_effects(gens.front())) {
    res.trail.push_back("single generator with linearly independent effects: sim<A> = M_{E_R}");
    res.label = full ? RestrictionClass::NoRestriction : RestrictionClass::R1;
    return res;
  }

  std::vector<Effect> pool;
  for (const auto& g : res.effects.generators) {
    if (!g.is_zero()) pool.push_back(g);
  }
  Rng rng(opts.seed);
  for (std::size_t k = 0; k < opts.budget; ++k) {
    ++res.samples_used;
    auto candidate = peel_meter(rng, pool, s);
    if (!candidate || !in_effect_restricted_meters(*candidate, res.effects)) continue;
    if (!simulable(*candidate, gens).simulable) {
      res.meter_outside = *candidate;
      res.trail.push_back("sampled meter in M_{E_R} that is not simulable from the generators (" +
                          std::to_string(res.samples_used) + " samples)");
      res.label = full ? RestrictionClass::R2 : RestrictionClass::R3;
      return res;
    }
  }
  res.trail.push_back("no meter of M_{E_R} outside R found within the budget of " + std::to_string(opts.budget));
  res.label = RestrictionClass::Unknown;
  return res;
}

bool verify_classification(const ClassificationResult& c, const MeterRestriction& r, const StateSpace& s) {
  const auto er = effects_of_restriction(r, s);
  if (c.effect_outside) {
    if (!is_valid_effect(*c.effect_outside, s) || in_hull(*c.effect_outside, er.generators)) return false;
  }
  if (c.meter_outside) {
    if (!check_meter(c.meter_outside->effects(), s).valid) return false;
    if (!in_effect_restricted_meters(*c.meter_outside, er) || is_member(*c.meter_outside, r, s)) return false;
  }
  const bool full_checked = [&] {
    for (const auto& v : effect_space_vertices(s)) {
      if (!in_hull(v, er.generators)) return false;
    }
    return true;
  }();
  switch (c.label) {
    case RestrictionClass::R1: return static_cast<bool>(c.effect_outside) && !c.meter_outside;
    case RestrictionClass::R2: return full_checked && c.meter_outside && !c.effect_outside;
    case RestrictionClass::R3: return c.effect_outside && c.meter_outside;
    case RestrictionClass::NoRestriction: return full_checked && !c.meter_outside;
    case RestrictionClass::Unknown: return true;
  }
  return false;
}

bool tomographic_completeness(const MeterRestriction& r, const StateSpace& s) {
  const std::size_t full = s.embedding_dimension();
  std::vector<Vector> rows;
  if (const auto* sim = std::get_if<GeneratedBySimulation>(&r)) {
    for (const auto& b : sim->generators) {
      for (const auto& e : b.effects()) rows.push_back(e.coords());
    }
  } else if (const auto* ind = std::get_if<InducedByEffects>(&r)) {
    for (const auto& e : ind->effects.generators) rows.push_back(e.coords());
  } else {
    const Rational& t = std::get<NoiseFamily>(r).t;
    return t > 0 || full == 1;
  }
  return independent_subset(rows).size() == full;
}

}  // namespace gptr
