#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gptr/matrix.hpp"

namespace gptr {

/// Linear program over `num_vars` variables:
///
///   maximize   objective·x            (optional; feasibility only when absent)
///   subject to eq·x  = eq_rhs
///              le·x <= le_rhs
///              x_j >= 0               unless free_var[j]
struct LinearProgram {
  explicit LinearProgram(std::size_t num_vars = 0);

  std::size_t num_vars = 0;
  std::vector<bool> free_var;
  Matrix eq;
  Vector eq_rhs;
  Matrix le;
  Vector le_rhs;
  std::optional<Vector> objective;

  void add_equality(std::span<const Rational> row, const Rational& rhs);
  void add_inequality(std::span<const Rational> row, const Rational& rhs);
  /// Throws DimensionError unless every block agrees on the variable count.
  void check_shape() const;
};

enum class LpStatus { Feasible, Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

/// Farkas multipliers: y_eq free, y_le >= 0 with
///   (y_eqᵀ·eq + y_leᵀ·le)_j >= 0 for nonnegative x_j, = 0 for free x_j,
///   y_eqᵀ·eq_rhs + y_leᵀ·le_rhs < 0.
struct FarkasCertificate {
  Vector eq_multipliers;
  Vector le_multipliers;
  bool operator==(const FarkasCertificate&) const = default;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Vector point;                    // Feasible / Optimal / Unbounded (a feasible start)
  Rational value;                  // Optimal
  FarkasCertificate certificate;   // Infeasible
  Vector ray;                      // Unbounded: feasible direction with objective·ray > 0

  bool has_point() const { return status != LpStatus::Infeasible; }
};

/// Exact two-phase dense simplex with Bland's rule.
LpOutcome lp_solve(const LinearProgram& prog);

/// Exact constraint check of x.
bool is_feasible_point(const LinearProgram& prog, std::span<const Rational> x);

/// Exact check of the Farkas conditions.
bool verify_certificate(const LinearProgram& prog, const FarkasCertificate& cert);

/// Exact check that `ray` is a recession direction improving the objective.
bool verify_ray(const LinearProgram& prog, std::span<const Rational> ray);

}  // namespace gptr
