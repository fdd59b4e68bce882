#include "gptr/vertex_enum.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "gptr/errors.hpp"

namespace gptr {

std::size_t dimension_cap() {
  if (const char* env = std::getenv("GPT_RESTRICT_DIM_CAP")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultDimensionCap;
}

namespace {

void normalize_ray(Vector& r) {
  Rational scale;
  for (const auto& x : r) {
    if (abs(x) > scale) scale = abs(x);
  }
  if (scale == 0) return;
  for (auto& x : r) x /= scale;
}

}  // namespace

std::vector<Vector> enumerate_vertices(const Matrix& g, const Vector& h) {
  const std::size_t k = g.cols();
  if (k > dimension_cap()) {
    throw UnsupportedError("vertex enumeration in dimension " + std::to_string(k) + " exceeds the cap of " +
                           std::to_string(dimension_cap()));
  }
  if (g.rows() != h.size()) throw DimensionError("enumerate_vertices: rhs length mismatch");
  const std::size_t dim = k + 1;
  std::vector<Vector> cons;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Vector a(dim);
    for (std::size_t j = 0; j < k; ++j) a[j] = -g(i, j);
    a[k] = h[i];
    cons.push_back(std::move(a));
  }
  {
    Vector tau(dim);
    tau[k] = 1;
    cons.push_back(std::move(tau));
  }

  auto initial = independent_subset(cons);
  if (initial.size() < dim) throw DomainError("polytope is unbounded (constraints do not have full rank)");

  // Rays of the simplicial cone {z : A0·z >= 0} are the columns of A0^{-1}.
  Matrix a0(0, dim);
  for (auto i : initial) a0.append_row(cons[i]);
  std::vector<Vector> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Vector ej(dim);
    ej[j] = 1;
    auto sol = solve_linear(a0, ej);
    normalize_ray(sol.solution);
    rays.push_back(std::move(sol.solution));
  }
  std::vector<std::size_t> processed(initial.begin(), initial.end());
  std::vector<bool> used(cons.size(), false);
  for (auto i : initial) used[i] = true;

  for (std::size_t ci = 0; ci < cons.size(); ++ci) {
    if (used[ci]) continue;
    const Vector& a = cons[ci];
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Vector> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r]);
      if (val[r] > 0) {
        pos.push_back(r);
      } else if (val[r] < 0) {
        neg.push_back(r);
      }
      if (val[r] >= 0) next.push_back(rays[r]);
    }
    if (!neg.empty()) {
      // Active sets over the constraints processed so far.
      std::vector<std::vector<bool>> active(rays.size(), std::vector<bool>(processed.size()));
      for (std::size_t r = 0; r < rays.size(); ++r) {
        for (std::size_t p = 0; p < processed.size(); ++p) active[r][p] = dot(cons[processed[p]], rays[r]) == 0;
      }
      for (auto p : pos) {
        for (auto n : neg) {
          Matrix common(0, dim);
          std::size_t count = 0;
          for (std::size_t q = 0; q < processed.size(); ++q) {
            if (active[p][q] && active[n][q]) {
              common.append_row(cons[processed[q]]);
              ++count;
            }
          }
          if (count + 2 < dim || rank(common) != dim - 2) continue;
          Vector ray = val[p] * rays[n] - val[n] * rays[p];
          normalize_ray(ray);
          next.push_back(std::move(ray));
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
    processed.push_back(ci);
    used[ci] = true;
  }

  std::vector<Vector> vertices;
  for (const auto& r : rays) {
    if (r[k] == 0) {
      if (!is_zero(r)) throw DomainError("polytope is unbounded (recession direction found)");
      continue;
    }
    Vector v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = r[j] / r[k];
    vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::vector<Effect> effect_space_vertices(const StateSpace& s) {
  const std::size_t dim = s.embedding_dimension();
  Matrix g(0, dim);
  Vector h;
  for (std::size_t k = 0; k < s.vertices().size(); ++k) {
    Vector w = s.embedded_vertex(k);
    g.append_row(Rational(-1) * w);
    h.push_back(0);
    g.append_row(w);
    h.push_back(1);
  }
  std::vector<Effect> out;
  for (const auto& v : enumerate_vertices(g, h)) out.push_back(Effect::from_coords(v));
  return out;
}

}  // namespace gptr
