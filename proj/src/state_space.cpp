#include "gptr/state_space.hpp"

#include <algorithm>

#include "gptr/errors.hpp"
#include "gptr/lp.hpp"
#include "gptr/matrix.hpp"

namespace gptr {

namespace {

// Is `target` a convex combination of `points`?
bool in_convex_hull(const std::vector<Vector>& points, std::span<const Rational> target) {
  if (points.empty()) return false;
  LinearProgram lp(points.size());
  Vector ones(points.size(), Rational(1));
  lp.add_equality(ones, 1);
  for (std::size_t i = 0; i < target.size(); ++i) {
    Vector row(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) row[k] = points[k][i];
    lp.add_equality(row, target[i]);
  }
  return lp_solve(lp).status == LpStatus::Feasible;
}

void require_same_dimension(const Effect& e, const StateSpace& s) {
  if (e.dimension() != s.dimension()) {
    throw DimensionError("effect has dimension " + std::to_string(e.dimension()) + ", state space " +
                         std::to_string(s.dimension()));
  }
}

Vector unit_axis(std::size_t d, std::size_t axis) {
  Vector v(d);
  v[axis] = 1;
  return v;
}

}  // namespace

StateSpace StateSpace::polytope(std::vector<Vector> vertices) {
  if (vertices.empty()) throw ValidationError("polytope needs at least one vertex");
  const std::size_t d = vertices.front().size();
  for (const auto& v : vertices) {
    if (v.size() != d) throw ValidationError("polytope vertices have different lengths");
  }
  Matrix embedded(0, d + 1);
  for (const auto& v : vertices) {
    Vector w{Rational(1)};
    w.insert(w.end(), v.begin(), v.end());
    embedded.append_row(w);
  }
  if (rank(embedded) != d + 1) {
    throw ValidationError("polytope vertices do not affinely span R^" + std::to_string(d));
  }
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (j != k) others.push_back(vertices[j]);
    }
    if (in_convex_hull(others, vertices[k])) {
      throw ValidationError("vertex " + std::to_string(k) + " " + to_string(std::span<const Rational>(vertices[k])) +
                            " is a convex combination of the other vertices");
    }
  }
  return StateSpace(Polytope{std::move(vertices)});
}

StateSpace StateSpace::ball(std::size_t n) {
  if (n == 0) throw ValidationError("ball dimension must be positive");
  return StateSpace(Ball{n});
}

std::size_t StateSpace::dimension() const {
  if (auto* p = std::get_if<Polytope>(&backend_)) return p->vertices.front().size();
  return std::get<Ball>(backend_).n;
}

const std::vector<Vector>& StateSpace::vertices() const {
  if (auto* p = std::get_if<Polytope>(&backend_)) return p->vertices;
  throw UnsupportedError("the ball backend has no vertex list");
}

Vector StateSpace::embedded_vertex(std::size_t k) const {
  const auto& v = vertices().at(k);
  Vector w{Rational(1)};
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

bool StateSpace::contains(std::span<const Rational> x) const {
  if (x.size() != dimension()) return false;
  if (is_ball()) return squared_norm(x) <= 1;
  return in_convex_hull(vertices(), x);
}

std::string StateSpace::describe() const {
  if (is_ball()) return "ball(n=" + std::to_string(dimension()) + ")";
  return "polytope(d=" + std::to_string(dimension()) + ", " + std::to_string(vertices().size()) + " vertices)";
}

Rational evaluate(const Effect& e, const StateSpace& s, std::span<const Rational> x) {
  require_same_dimension(e, s);
  if (!s.contains(x)) throw DomainError("point " + to_string(x) + " is outside the state space");
  return e(x);
}

ExtremeValue lambda_min(const Effect& e, const StateSpace& s) {
  require_same_dimension(e, s);
  if (s.is_ball()) return ExtremeValue::norm_expression(e.constant(), -1, squared_norm(e.linear()));
  const auto& vs = s.vertices();
  Rational best = e(vs.front());
  for (const auto& v : vs) best = std::min(best, Rational(e(v)));
  return best;
}

ExtremeValue lambda_max(const Effect& e, const StateSpace& s) {
  require_same_dimension(e, s);
  if (s.is_ball()) return ExtremeValue::norm_expression(e.constant(), +1, squared_norm(e.linear()));
  const auto& vs = s.vertices();
  Rational best = e(vs.front());
  for (const auto& v : vs) best = std::max(best, Rational(e(v)));
  return best;
}

EffectCheck check_effect(const Effect& e, const StateSpace& s) {
  require_same_dimension(e, s);
  EffectCheck out;
  if (s.is_ball()) {
    const Rational n2 = squared_norm(e.linear());
    const Rational c = e.constant();
    if (!(c >= 0 && c * c >= n2)) {
      out.valid = false;
      out.reason = "lambda_min < 0 (c - |v| = " + lambda_min(e, s).decimal() + ")";
    } else if (!(1 - c >= 0 && (1 - c) * (1 - c) >= n2)) {
      out.valid = false;
      out.reason = "lambda_max > 1 (c + |v| = " + lambda_max(e, s).decimal() + ")";
    }
    return out;
  }
  const auto& vs = s.vertices();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    Rational val = e(vs[k]);
    if (val < 0 || val > 1) {
      out.valid = false;
      out.violating_vertex = k;
      out.violating_value = val;
      out.reason = std::string(val < 0 ? "negative" : "above one") + " at vertex " + std::to_string(k) + " " +
                   to_string(std::span<const Rational>(vs[k])) + ": " + val.get_str();
      return out;
    }
  }
  return out;
}

bool is_valid_effect(const Effect& e, const StateSpace& s) { return check_effect(e, s).valid; }

bool in_positive_cone(const Effect& e, const StateSpace& s) { return lambda_min(e, s).sign() >= 0; }

std::vector<std::size_t> active_vertices(const Effect& e, const StateSpace& s) {
  require_same_dimension(e, s);
  std::vector<std::size_t> out;
  const auto& vs = s.vertices();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (e(vs[k]) == 0) out.push_back(k);
  }
  return out;
}

namespace {

std::size_t active_rank(const Effect& e, const StateSpace& s) {
  Matrix m(0, s.embedding_dimension());
  for (auto k : active_vertices(e, s)) m.append_row(s.embedded_vertex(k));
  return rank(m);
}

void require_nonzero_cone_member(const Effect& e, const StateSpace& s) {
  require_same_dimension(e, s);
  if (e.is_zero()) throw DomainError("the zero effect has no extreme-ray structure");
  if (!in_positive_cone(e, s)) throw DomainError("effect " + to_string(e) + " is not in the positive cone");
}

// An extreme ray of V*₊ lying in the smallest face that contains f.
Effect extreme_ray_in_face(const Effect& f, const StateSpace& s) {
  const std::size_t dim = s.embedding_dimension();
  const auto& vs = s.vertices();
  Vector g = f.coords();
  for (;;) {
    Effect ge = Effect::from_coords(g);
    Matrix active(0, dim);
    for (auto k : active_vertices(ge, s)) active.append_row(s.embedded_vertex(k));
    if (rank(active) == dim - 1) return ge;
    Vector delta;
    for (const auto& b : nullspace(active)) {
      if (rank(Matrix::from_rows({g, b})) == 2) {
        delta = b;
        break;
      }
    }
    std::vector<Rational> dv(vs.size());
    bool any_negative = false;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      dv[k] = dot(delta, s.embedded_vertex(k));
      if (dv[k] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (auto& x : delta) x = -x;
      for (auto& x : dv) x = -x;
    }
    std::optional<Rational> mu;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (dv[k] >= 0) continue;
      Rational step = dot(g, s.embedded_vertex(k)) / -dv[k];
      if (!mu || step < *mu) mu = step;
    }
    g = g + (*mu) * delta;
  }
}

}  // namespace

bool is_indecomposable(const Effect& e, const StateSpace& s) {
  require_nonzero_cone_member(e, s);
  if (s.is_ball()) {
    const Rational& c = e.constant();
    return c > 0 && c * c == squared_norm(e.linear());
  }
  return active_rank(e, s) == s.dimension();
}

std::optional<Effect> SurdEffect::exact() const {
  if (!constant.is_rational() || !scale.is_rational()) return std::nullopt;
  return Effect(constant.rational(), scale.rational() * direction);
}

std::vector<SurdEffect> decompose_indecomposable(const Effect& e, const StateSpace& s) {
  require_nonzero_cone_member(e, s);
  const std::size_t d = s.dimension();
  std::vector<SurdEffect> out;
  if (s.is_ball()) {
    const Rational& c = e.constant();
    const Rational n2 = squared_norm(e.linear());
    if (n2 == 0) {
      Vector axis = unit_axis(d, d - 1);
      out.push_back({Rational(c / 2), Rational(c / 2), axis});
      out.push_back({Rational(c / 2), Rational(-c / 2), axis});
      return out;
    }
    if (c * c == n2) {
      out.push_back({c, Rational(1), e.linear()});
      return out;
    }
    ExtremeValue norm = ExtremeValue::sqrt(n2);
    ExtremeValue alpha = (ExtremeValue(c) + norm) * Rational(1, 2);
    ExtremeValue beta = (ExtremeValue(c) - norm) * Rational(1, 2);
    // α/‖v‖ = 1/2 + c·‖v‖/(2‖v‖²),  −β/‖v‖ = 1/2 − c·‖v‖/(2‖v‖²)
    ExtremeValue shift = norm * (c / (2 * n2));
    out.push_back({alpha, ExtremeValue(Rational(1, 2)) + shift, e.linear()});
    out.push_back({beta, ExtremeValue(Rational(1, 2)) - shift, e.linear()});
    return out;
  }
  Effect rest = e;
  while (!rest.is_zero()) {
    if (is_indecomposable(rest, s)) {
      out.push_back({rest.constant(), Rational(1), rest.linear()});
      break;
    }
    Effect ray = extreme_ray_in_face(rest, s);
    std::optional<Rational> lambda;
    for (const auto& v : s.vertices()) {
      Rational rv = ray(v);
      if (rv <= 0) continue;
      Rational ratio = rest(v) / rv;
      if (!lambda || ratio < *lambda) lambda = ratio;
    }
    Effect piece = (*lambda) * ray;
    out.push_back({piece.constant(), Rational(1), piece.linear()});
    rest -= piece;
  }
  return out;
}

std::vector<Effect> decompose_indecomposable_exact(const Effect& e, const StateSpace& s) {
  std::vector<Effect> out;
  for (const auto& piece : decompose_indecomposable(e, s)) {
    auto exact = piece.exact();
    if (!exact) throw UnsupportedError("decomposition of " + to_string(e) + " has irrational coefficients");
    out.push_back(*exact);
  }
  return out;
}

}  // namespace gptr
