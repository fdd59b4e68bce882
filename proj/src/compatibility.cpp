#include "gptr/compatibility.hpp"

#include "gptr/errors.hpp"
#include "gptr/simulation.hpp"

namespace gptr {

namespace {

void require_polytope(const StateSpace& s) {
  if (!s.is_polytope()) throw UnsupportedError("compatibility needs the polytope backend");
}

void require_dimension(const Meter& m, const StateSpace& s) {
  if (m.dimension() != s.dimension()) throw DimensionError("meter dimension differs from the state space");
}

}  // namespace

LinearProgram compatibility_program(const Meter& a, const Meter& b, const StateSpace& s) {
  require_polytope(s);
  require_dimension(a, s);
  require_dimension(b, s);
  const std::size_t dim = s.embedding_dimension();
  const std::size_t na = a.outcomes();
  const std::size_t nb = b.outcomes();
  const std::size_t nv = na * nb * dim;
  auto var = [&](std::size_t x, std::size_t y, std::size_t k) { return (x * nb + y) * dim + k; };

  LinearProgram prog(nv);
  prog.free_var.assign(nv, true);
  for (std::size_t x = 0; x < na; ++x) {
    const Vector ax = a[x].coords();
    for (std::size_t k = 0; k < dim; ++k) {
      Vector row(nv);
      for (std::size_t y = 0; y < nb; ++y) row[var(x, y, k)] = 1;
      prog.add_equality(row, ax[k]);
    }
  }
  for (std::size_t y = 0; y < nb; ++y) {
    const Vector by = b[y].coords();
    for (std::size_t k = 0; k < dim; ++k) {
      Vector row(nv);
      for (std::size_t x = 0; x < na; ++x) row[var(x, y, k)] = 1;
      prog.add_equality(row, by[k]);
    }
  }
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      for (std::size_t w = 0; w < s.vertices().size(); ++w) {
        const Vector vert = s.embedded_vertex(w);
        Vector row(nv);
        for (std::size_t k = 0; k < dim; ++k) row[var(x, y, k)] = -vert[k];
        prog.add_inequality(row, 0);
      }
    }
  }
  return prog;
}

CompatibilityResult are_compatible(const Meter& a, const Meter& b, const StateSpace& s) {
  const LinearProgram prog = compatibility_program(a, b, s);
  LpOutcome out = lp_solve(prog);
  CompatibilityResult res;
  if (!out.has_point()) {
    res.certificate = std::move(out.certificate);
    return res;
  }
  res.compatible = true;
  const std::size_t dim = s.embedding_dimension();
  JointMeter g{a.outcomes(), b.outcomes(), {}};
  for (std::size_t cell = 0; cell < g.rows * g.cols; ++cell) {
    g.grid.push_back(Effect::from_coords(std::span<const Rational>(out.point).subspan(cell * dim, dim)));
  }
  res.joint = std::move(g);
  return res;
}

bool verify_compatibility_certificate(const Meter& a, const Meter& b, const StateSpace& s,
                                      const FarkasCertificate& cert) {
  return verify_certificate(compatibility_program(a, b, s), cert);
}

bool check_joint_meter(const JointMeter& g, const Meter& a, const Meter& b, const StateSpace& s) {
  if (g.rows != a.outcomes() || g.cols != b.outcomes() || g.grid.size() != g.rows * g.cols) return false;
  const std::size_t d = s.dimension();
  for (std::size_t x = 0; x < g.rows; ++x) {
    Effect sum = Effect::zero(d);
    for (std::size_t y = 0; y < g.cols; ++y) sum += g.at(x, y);
    if (!(sum == a[x])) return false;
  }
  for (std::size_t y = 0; y < g.cols; ++y) {
    Effect sum = Effect::zero(d);
    for (std::size_t x = 0; x < g.rows; ++x) sum += g.at(x, y);
    if (!(sum == b[y])) return false;
  }
  for (const auto& e : g.grid) {
    if (!is_valid_effect(e, s)) return false;
  }
  return true;
}

bool in_compat_set(const Meter& d, const Meter& a, const StateSpace& s) { return are_compatible(d, a, s).compatible; }

Meter sample_compatible(Rng& rng, const Meter& a, const StateSpace& s, std::size_t outcomes) {
  require_polytope(s);
  if (outcomes == 0) throw DomainError("sample_compatible: outcome count must be positive");
  const std::size_t d = s.dimension();
  std::vector<Effect> marginal(outcomes, Effect::zero(d));
  for (const auto& ax : a.effects()) {
    Effect rest = ax;
    for (std::size_t y = 0; y + 1 < outcomes; ++y) {
      Effect g = random_effect(rng, s);
      std::optional<Rational> fit;
      for (const auto& v : s.vertices()) {
        Rational gv = g(v);
        if (gv <= 0) continue;
        Rational ratio = rest(v) / gv;
        if (!fit || ratio < *fit) fit = ratio;
      }
      if (!fit || *fit <= 0) continue;
      Rational lambda = *fit * ratio(static_cast<long>(rng.index(13)), 12);
      marginal[y] += lambda * g;
      rest -= lambda * g;
    }
    marginal[outcomes - 1] += rest;
  }
  return Meter(std::move(marginal));
}

CompatClosureReport check_compat_closure(const Meter& a, const StateSpace& s, std::size_t samples, std::uint64_t seed) {
  CompatClosureReport rep;
  Rng rng(seed);
  auto check = [&](const Meter& d, std::size_t& counter) {
    ++counter;
    if (!in_compat_set(d, a, s)) ++rep.violations;
  };
  for (std::size_t k = 0; k < samples; ++k) {
    Meter d1 = sample_compatible(rng, a, s, 2 + rng.index(2));
    Meter d2 = sample_compatible(rng, a, s, 2 + rng.index(2));
    check(d1, rep.members_checked);
    check(d2, rep.members_checked);
    check(mix({d1, d2}, random_probability_vector(rng, 2)), rep.mixtures_checked);
    PostProcessing nu(random_stochastic_matrix(rng, d1.outcomes(), 2 + rng.index(2)));
    check(post_process(nu, d1), rep.post_processed_checked);
    check(trivial_meter(random_probability_vector(rng, 2 + rng.index(2)), s.dimension()), rep.trivial_checked);
  }
  return rep;
}

}  // namespace gptr
