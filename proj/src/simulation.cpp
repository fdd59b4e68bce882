#include "gptr/simulation.hpp"

#include <algorithm>
#include <numeric>

#include "gptr/errors.hpp"

namespace gptr {

PostProcessing::PostProcessing(Matrix nu) : nu_(std::move(nu)) {
  if (nu_.rows() == 0 || nu_.cols() == 0) throw ValidationError("post-processing matrix is empty");
  for (std::size_t r = 0; r < nu_.rows(); ++r) {
    Rational total;
    for (std::size_t c = 0; c < nu_.cols(); ++c) {
      if (nu_(r, c) < 0) throw ValidationError("post-processing entry (" + std::to_string(r) + "," + std::to_string(c) + ") is negative");
      total += nu_(r, c);
    }
    if (total != 1) throw ValidationError("post-processing row " + std::to_string(r) + " sums to " + to_string(total));
  }
}

PostProcessing PostProcessing::identity(std::size_t n) { return PostProcessing(Matrix::identity(n)); }

Meter post_process(const PostProcessing& nu, const Meter& b) {
  if (nu.sources() != b.outcomes()) {
    throw DimensionError("post-processing has " + std::to_string(nu.sources()) + " rows but the meter has " +
                         std::to_string(b.outcomes()) + " outcomes");
  }
  std::vector<Effect> out(nu.targets(), Effect::zero(b.dimension()));
  for (std::size_t x = 0; x < nu.sources(); ++x) {
    for (std::size_t y = 0; y < nu.targets(); ++y) {
      if (nu.matrix()(x, y) != 0) out[y] += nu.matrix()(x, y) * b[x];
    }
  }
  return Meter(std::move(out));
}

Meter mix(const std::vector<Meter>& meters, const Vector& p) {
  if (meters.empty()) throw ValidationError("mix: no meters given");
  if (p.size() != meters.size()) throw ValidationError("mix: weight count differs from meter count");
  if (!is_probability_vector(p)) throw ValidationError("mix: weights are not a probability vector");
  std::size_t n = 0;
  for (const auto& m : meters) n = std::max(n, m.outcomes());
  const std::size_t d = meters.front().dimension();
  std::vector<Effect> out(n, Effect::zero(d));
  for (std::size_t i = 0; i < meters.size(); ++i) {
    if (meters[i].dimension() != d) throw DimensionError("mix: meters of different dimensions");
    for (std::size_t x = 0; x < meters[i].outcomes(); ++x) out[x] += p[i] * meters[i][x];
  }
  return Meter(std::move(out));
}

Meter reconstruct(const SimulationWitness& w, const std::vector<Meter>& simulators) {
  if (w.weights.size() != simulators.size() || w.post.size() != simulators.size()) {
    throw DimensionError("witness does not match the simulator count");
  }
  std::vector<Meter> parts;
  for (std::size_t i = 0; i < simulators.size(); ++i) parts.push_back(post_process(w.post[i], simulators[i]));
  return mix(parts, w.weights);
}

namespace {

// Variable layout of the simulation program: p_i first, then q⁽ⁱ⁾_xy blocks.
struct Layout {
  std::vector<std::size_t> block_start;
  std::size_t num_vars = 0;
  std::size_t targets = 0;
  std::size_t q(std::size_t i, std::size_t x, std::size_t y) const { return block_start[i] + x * targets + y; }
};

Layout make_layout(const Meter& target, const std::vector<Meter>& simulators) {
  Layout l;
  l.targets = target.outcomes();
  std::size_t next = simulators.size();
  for (const auto& b : simulators) {
    l.block_start.push_back(next);
    next += b.outcomes() * l.targets;
  }
  l.num_vars = next;
  return l;
}

}  // namespace

LinearProgram simulation_program(const Meter& target, const std::vector<Meter>& simulators) {
  if (simulators.empty()) throw ValidationError("simulable: no simulators given");
  for (const auto& b : simulators) {
    if (b.dimension() != target.dimension()) throw DimensionError("simulable: simulator dimension differs from target");
  }
  const Layout l = make_layout(target, simulators);
  const std::size_t dim = target.dimension() + 1;
  LinearProgram prog(l.num_vars);

  Vector row(l.num_vars);
  for (std::size_t i = 0; i < simulators.size(); ++i) row[i] = 1;
  prog.add_equality(row, 1);

  for (std::size_t i = 0; i < simulators.size(); ++i) {
    for (std::size_t x = 0; x < simulators[i].outcomes(); ++x) {
      Vector r(l.num_vars);
      r[i] = -1;
      for (std::size_t y = 0; y < l.targets; ++y) r[l.q(i, x, y)] = 1;
      prog.add_equality(r, 0);
    }
  }

  std::vector<std::vector<Vector>> coords(simulators.size());
  for (std::size_t i = 0; i < simulators.size(); ++i) {
    for (const auto& e : simulators[i].effects()) coords[i].push_back(e.coords());
  }
  for (std::size_t y = 0; y < l.targets; ++y) {
    const Vector a = target[y].coords();
    for (std::size_t k = 0; k < dim; ++k) {
      Vector r(l.num_vars);
      for (std::size_t i = 0; i < simulators.size(); ++i) {
        for (std::size_t x = 0; x < simulators[i].outcomes(); ++x) r[l.q(i, x, y)] = coords[i][x][k];
      }
      prog.add_equality(r, a[k]);
    }
  }
  return prog;
}

SimulationResult simulable(const Meter& target, const std::vector<Meter>& simulators) {
  const LinearProgram prog = simulation_program(target, simulators);
  const Layout l = make_layout(target, simulators);
  LpOutcome out = lp_solve(prog);
  SimulationResult res;
  if (!out.has_point()) {
    res.certificate = std::move(out.certificate);
    return res;
  }
  res.simulable = true;
  SimulationWitness w;
  for (std::size_t i = 0; i < simulators.size(); ++i) {
    const Rational& p = out.point[i];
    w.weights.push_back(p);
    Matrix nu(simulators[i].outcomes(), l.targets);
    for (std::size_t x = 0; x < simulators[i].outcomes(); ++x) {
      for (std::size_t y = 0; y < l.targets; ++y) {
        nu(x, y) = p == 0 ? ratio(1, static_cast<long>(l.targets)) : Rational(out.point[l.q(i, x, y)] / p);
      }
    }
    w.post.emplace_back(std::move(nu));
  }
  res.witness = std::move(w);
  return res;
}

bool verify_simulation_certificate(const Meter& target, const std::vector<Meter>& simulators,
                                   const FarkasCertificate& cert) {
  return verify_certificate(simulation_program(target, simulators), cert);
}

SimulatedSample sample_simulated(Rng& rng, const std::vector<Meter>& generators, std::size_t outcomes) {
  SimulationWitness w;
  w.weights = random_probability_vector(rng, generators.size());
  for (const auto& g : generators) w.post.emplace_back(random_stochastic_matrix(rng, g.outcomes(), outcomes));
  Meter m = reconstruct(w, generators);
  return {std::move(m), std::move(w)};
}

ClosureReport check_closure_axioms(const std::vector<Meter>& generators, std::size_t samples, std::uint64_t seed) {
  if (generators.empty()) throw ValidationError("check_closure_axioms: no generators given");
  ClosureReport rep;
  // Returns feasibility; counts a reconstruction failure for a bad witness.
  auto test = [&rep](const Meter& target, const std::vector<Meter>& sims) {
    SimulationResult r = simulable(target, sims);
    if (r.simulable && !(reconstruct(*r.witness, sims) == target)) ++rep.reconstruction_failures;
    return r.simulable;
  };

  for (const auto& g : generators) {
    ++rep.sim1_checked;
    if (!test(g, generators)) ++rep.sim1_violations;
  }

  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t outcomes = 2 + rng.index(3);
    SimulatedSample d = sample_simulated(rng, generators, outcomes);

    // SIM2: anything simulated from G ∪ {D} is already simulable from G.
    std::vector<Meter> extended = generators;
    extended.push_back(d.meter);
    SimulatedSample d2 = sample_simulated(rng, extended, 2 + rng.index(3));
    ++rep.sim2_checked;
    if (!test(d2.meter, generators)) ++rep.sim2_violations;

    // SIM3: a meter simulated from a subset G′ is simulable from G.
    std::vector<Meter> subset;
    const std::uint64_t mask = 1 + rng.next() % ((std::uint64_t{1} << std::min<std::size_t>(generators.size(), 20)) - 1);
    for (std::size_t i = 0; i < generators.size() && i < 20; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(generators[i]);
    }
    SimulatedSample d3 = sample_simulated(rng, subset, outcomes);
    ++rep.sim3_checked;
    if (!test(d3.meter, generators)) ++rep.sim3_violations;
  }
  return rep;
}

namespace {

std::vector<ExtremeValue> lambda_max_all(const Meter& a, const StateSpace& s) {
  std::vector<ExtremeValue> out;
  for (const auto& e : a.effects()) out.push_back(lambda_max(e, s));
  return out;
}

ExtremeValue sum_over(const std::vector<ExtremeValue>& lam, const std::vector<std::size_t>& idx) {
  ExtremeValue total;
  for (auto i : idx) total += lam[i];
  return total;
}

std::vector<std::size_t> nonzero_outcomes(const Meter& a) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < a.outcomes(); ++x) {
    if (!a[x].is_zero()) out.push_back(x);
  }
  return out;
}

bool pair_admissible(const Effect& e, const Effect& f) {
  return !positively_proportional(e, f) && !positively_proportional(f, e) && !completes_unit(e, f);
}

constexpr std::size_t kExhaustiveFamilyCap = 16;

// Heaviest family of indecomposable outcomes with every pair admissible.
std::vector<std::size_t> best_indecomposable_family(const Meter& a, const StateSpace& s,
                                                    const std::vector<ExtremeValue>& lam) {
  std::vector<std::size_t> cand;
  for (auto x : nonzero_outcomes(a)) {
    if (in_positive_cone(a[x], s) && is_indecomposable(a[x], s)) cand.push_back(x);
  }
  const std::size_t m = cand.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, true));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) ok[i][j] = ok[j][i] = pair_admissible(a[cand[i]], a[cand[j]]);
  }
  std::vector<std::size_t> best;
  ExtremeValue best_sum;
  if (m <= kExhaustiveFamilyCap) {
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
      std::vector<std::size_t> pick;
      bool good = true;
      for (std::size_t i = 0; i < m && good; ++i) {
        if (!(mask & (1u << i))) continue;
        for (auto j : pick) good = good && ok[i][j];
        pick.push_back(i);
      }
      if (!good) continue;
      std::vector<std::size_t> family;
      for (auto i : pick) family.push_back(cand[i]);
      ExtremeValue total = sum_over(lam, family);
      if (best.empty() || total > best_sum) {
        best = family;
        best_sum = total;
      }
    }
    return best;
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return lam[cand[i]] > lam[cand[j]]; });
  std::vector<std::size_t> pick;
  for (auto i : order) {
    bool good = true;
    for (auto j : pick) good = good && ok[i][j];
    if (good) pick.push_back(i);
  }
  for (auto i : pick) best.push_back(cand[i]);
  std::sort(best.begin(), best.end());
  return best;
}

std::string describe_sum(const ExtremeValue& sum, const char* op, const Rational& bound) {
  return sum.exact_string() + " (" + sum.decimal() + ") " + op + " " + to_string(bound);
}

}  // namespace

bool positively_proportional(const Effect& e, const Effect& f) {
  const Vector a = e.coords();
  const Vector b = f.coords();
  if (is_zero(a) || is_zero(b)) return false;
  std::size_t k = 0;
  while (a[k] == 0) ++k;
  const Rational t = b[k] / a[k];
  if (t <= 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != t * a[i]) return false;
  }
  return true;
}

bool completes_unit(const Effect& e, const Effect& f) {
  const Vector a = e.coords();
  const Vector b = f.coords();
  Matrix m(a.size(), 2);
  for (std::size_t k = 0; k < a.size(); ++k) {
    m(k, 0) = a[k];
    m(k, 1) = b[k];
  }
  Vector unit(a.size());
  unit[0] = 1;
  LinearSolveResult sol = solve_linear(m, unit);
  if (!sol.consistent) return false;
  if (!sol.underdetermined) return sol.solution[0] > 0 && sol.solution[1] > 0;
  // Rank one with u in the span: e = αu and f = βu, solvable with t_i, t_j > 0 iff α > 0 or β > 0.
  return e.constant() > 0 || f.constant() > 0;
}

NormalizedDichotomic normalize_dichotomic(const Meter& a, const StateSpace& s) {
  if (a.outcomes() != 2) throw DomainError("normalize_dichotomic: meter is not dichotomic");
  ExtremeValue l1 = lambda_max(a[0], s);
  ExtremeValue l2 = lambda_max(a[1], s);
  if (!l1.is_rational() || !l2.is_rational()) {
    throw UnsupportedError("normalize_dichotomic: irrational λmax values cannot be represented exactly");
  }
  const Rational lm1 = l1.rational();
  const Rational lm2 = l2.rational();
  const Rational alpha = lm1 + lm2 - 1;
  if (alpha <= 0) throw DomainError("normalize_dichotomic: trivial meter (λmax(A₁)+λmax(A₂) = 1)");
  const std::size_t d = a.dimension();
  Effect first = (1 / alpha) * a[0] + Effect::unit(d) * Rational((lm2 - 1) / alpha);
  Meter normalized({first, Effect::unit(d) - first});
  Matrix nu(2, 2);
  nu(0, 0) = lm1;
  nu(0, 1) = 1 - lm1;
  nu(1, 0) = 1 - lm2;
  nu(1, 1) = lm2;
  return {std::move(normalized), PostProcessing(std::move(nu))};
}

std::string to_string(NTomicVerdict v) {
  switch (v) {
    case NTomicVerdict::CertifiedNTomic: return "certified-n-tomic";
    case NTomicVerdict::CertifiedNotNTomic: return "certified-not-n-tomic";
    case NTomicVerdict::Undecided: return "undecided";
  }
  return "undecided";
}

std::string to_string(NTomicRoute r) {
  switch (r) {
    case NTomicRoute::OutcomeCount: return "outcome-count";
    case NTomicRoute::LambdaMaxComplement: return "lambda-max-complement";
    case NTomicRoute::LambdaMaxSum: return "lambda-max-sum";
    case NTomicRoute::IndecomposableFamily: return "indecomposable-family";
    case NTomicRoute::None: return "none";
  }
  return "none";
}

NTomicCertificate certify_n_tomic(const Meter& a, std::size_t n, const StateSpace& s) {
  if (n == 0) throw DomainError("certify_n_tomic: n must be positive");
  NTomicCertificate cert;
  cert.n = n;
  cert.lambda_max = lambda_max_all(a, s);
  const auto& lam = cert.lambda_max;
  const Rational rn(static_cast<long>(n));

  const auto nonzero = nonzero_outcomes(a);
  if (nonzero.size() <= n) {
    cert.verdict = NTomicVerdict::CertifiedNTomic;
    cert.route = NTomicRoute::OutcomeCount;
    cert.outcomes = nonzero;
    cert.sum = rn;
    cert.bound = rn;
    cert.explanation = std::to_string(nonzero.size()) + " nonzero outcomes <= " + std::to_string(n);
    return cert;
  }

  std::vector<std::size_t> all(a.outcomes());
  std::iota(all.begin(), all.end(), 0);
  const ExtremeValue total = sum_over(lam, all);

  if (n >= 2) {
    for (std::size_t y = 0; y < a.outcomes(); ++y) {
      ExtremeValue rest = total - lam[y];
      if (rest <= ExtremeValue(1)) {
        cert.verdict = NTomicVerdict::CertifiedNTomic;
        cert.route = NTomicRoute::LambdaMaxComplement;
        for (auto x : all) {
          if (x != y) cert.outcomes.push_back(x);
        }
        cert.sum = rest;
        cert.bound = 1;
        cert.explanation = "sum of λmax over outcomes other than " + std::to_string(y + 1) + " is " +
                           describe_sum(rest, "<=", 1) + ": effectively dichotomic";
        return cert;
      }
    }
  }

  if (total > ExtremeValue(rn)) {
    cert.verdict = NTomicVerdict::CertifiedNotNTomic;
    cert.route = NTomicRoute::LambdaMaxSum;
    cert.outcomes = all;
    cert.sum = total;
    cert.bound = rn;
    cert.explanation = "sum of λmax is " + describe_sum(total, ">", rn);
    return cert;
  }

  if (n == 2) {
    auto family = best_indecomposable_family(a, s, lam);
    ExtremeValue fam_sum = sum_over(lam, family);
    if (!family.empty() && fam_sum > ExtremeValue(1)) {
      cert.verdict = NTomicVerdict::CertifiedNotNTomic;
      cert.route = NTomicRoute::IndecomposableFamily;
      cert.outcomes = family;
      cert.sum = fam_sum;
      cert.bound = 1;
      cert.explanation = std::to_string(family.size()) +
                         " indecomposable, pairwise non-proportional effects with no pair completing u; "
                         "sum of λmax is " + describe_sum(fam_sum, ">", 1);
      return cert;
    }
  }

  cert.sum = total;
  cert.bound = rn;
  cert.outcomes = all;
  cert.explanation = "no criterion applies";
  return cert;
}

bool verify_n_tomic_certificate(const NTomicCertificate& cert, const Meter& a, const StateSpace& s) {
  const auto lam = lambda_max_all(a, s);
  if (lam != cert.lambda_max) return false;
  const Rational rn(static_cast<long>(cert.n));
  switch (cert.route) {
    case NTomicRoute::OutcomeCount:
      return cert.verdict == NTomicVerdict::CertifiedNTomic && nonzero_outcomes(a).size() <= cert.n;
    case NTomicRoute::LambdaMaxComplement: {
      if (cert.verdict != NTomicVerdict::CertifiedNTomic || cert.n < 2) return false;
      if (cert.outcomes.size() + 1 != a.outcomes()) return false;
      return sum_over(lam, cert.outcomes) <= ExtremeValue(1);
    }
    case NTomicRoute::LambdaMaxSum: {
      if (cert.verdict != NTomicVerdict::CertifiedNotNTomic || cert.outcomes.size() != a.outcomes()) return false;
      return sum_over(lam, cert.outcomes) > ExtremeValue(rn);
    }
    case NTomicRoute::IndecomposableFamily: {
      if (cert.verdict != NTomicVerdict::CertifiedNotNTomic || cert.n != 2) return false;
      for (std::size_t i = 0; i < cert.outcomes.size(); ++i) {
        const Effect& e = a[cert.outcomes[i]];
        if (e.is_zero() || !in_positive_cone(e, s) || !is_indecomposable(e, s)) return false;
        for (std::size_t j = 0; j < i; ++j) {
          if (!pair_admissible(e, a[cert.outcomes[j]])) return false;
        }
      }
      return sum_over(lam, cert.outcomes) > ExtremeValue(1);
    }
    case NTomicRoute::None:
      return cert.verdict == NTomicVerdict::Undecided && certify_n_tomic(a, cert.n, s).verdict == NTomicVerdict::Undecided;
  }
  return false;
}

}  // namespace gptr
