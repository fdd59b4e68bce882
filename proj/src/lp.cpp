#include "gptr/lp.hpp"

#include <limits>

#include "gptr/errors.hpp"

namespace gptr {

LinearProgram::LinearProgram(std::size_t n)
    : num_vars(n), free_var(n, false), eq(0, n), le(0, n) {}

void LinearProgram::add_equality(std::span<const Rational> row, const Rational& rhs) {
  if (row.size() != num_vars) throw DimensionError("add_equality: row length != num_vars");
  eq.append_row(row);
  eq_rhs.push_back(rhs);
}

void LinearProgram::add_inequality(std::span<const Rational> row, const Rational& rhs) {
  if (row.size() != num_vars) throw DimensionError("add_inequality: row length != num_vars");
  le.append_row(row);
  le_rhs.push_back(rhs);
}

void LinearProgram::check_shape() const {
  if (free_var.size() != num_vars) throw DimensionError("free_var size != num_vars");
  if (eq.rows() > 0 && eq.cols() != num_vars) throw DimensionError("equality matrix column count != num_vars");
  if (le.rows() > 0 && le.cols() != num_vars) throw DimensionError("inequality matrix column count != num_vars");
  if (eq.rows() != eq_rhs.size()) throw DimensionError("equality rhs length mismatch");
  if (le.rows() != le_rhs.size()) throw DimensionError("inequality rhs length mismatch");
  if (objective && objective->size() != num_vars) throw DimensionError("objective length != num_vars");
}

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Feasible: return "feasible";
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau in standard form  Â x̂ = b̂ (b̂ >= 0), x̂ >= 0.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& prog) : prog_(prog) { build(); }

  LpOutcome run() {
    LpOutcome out;
    // Phase 1.
    std::vector<Rational> cost(ncols_, Rational(0));
    for (std::size_t j = first_art_; j < ncols_; ++j) cost[j] = 1;
    set_costs(cost);
    iterate();  // bounded below by zero
    if (objective_value() > 0) {
      out.status = LpStatus::Infeasible;
      out.certificate = farkas();
      return out;
    }
    drive_out_artificials();
    banned_from_ = first_art_;

    if (!prog_.objective) {
      out.status = LpStatus::Feasible;
      out.point = point();
      return out;
    }
    std::vector<Rational> c2(ncols_, Rational(0));
    for (std::size_t j = 0; j < prog_.num_vars; ++j) {
      c2[plus_[j]] = -(*prog_.objective)[j];
      if (minus_[j] != kNone) c2[minus_[j]] = (*prog_.objective)[j];
    }
    set_costs(c2);
    std::size_t entering = iterate();
    out.point = point();
    if (entering != kNone) {
      out.status = LpStatus::Unbounded;
      out.ray = ray(entering);
      return out;
    }
    out.status = LpStatus::Optimal;
    out.value = dot(*prog_.objective, out.point);
    return out;
  }

 private:
  void build() {
    const std::size_t n = prog_.num_vars;
    const std::size_t me = prog_.eq.rows(), ml = prog_.le.rows();
    m_ = me + ml;
    plus_.assign(n, kNone);
    minus_.assign(n, kNone);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      plus_[j] = col++;
      if (prog_.free_var[j]) minus_[j] = col++;
    }
    slack_.assign(ml, kNone);
    for (std::size_t i = 0; i < ml; ++i) slack_[i] = col++;
    sign_.assign(m_, 1);
    std::vector<std::vector<Rational>> rows(m_);
    std::vector<Rational> rhs(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const bool is_eq = r < me;
      const Matrix& a = is_eq ? prog_.eq : prog_.le;
      const std::size_t ar = is_eq ? r : r - me;
      std::vector<Rational> row(col);
      for (std::size_t j = 0; j < n; ++j) {
        row[plus_[j]] = a(ar, j);
        if (minus_[j] != kNone) row[minus_[j]] = -a(ar, j);
      }
      if (!is_eq) row[slack_[ar]] = 1;
      rhs[r] = is_eq ? prog_.eq_rhs[ar] : prog_.le_rhs[ar];
      if (rhs[r] < 0) {
        sign_[r] = -1;
        for (auto& v : row) v = -v;
        rhs[r] = -rhs[r];
      }
      rows[r] = std::move(row);
    }
    // Initial basis: a slack with coefficient +1 where available, an artificial otherwise.
    first_art_ = col;
    init_basis_.assign(m_, kNone);
    for (std::size_t r = me; r < m_; ++r) {
      if (sign_[r] == 1) init_basis_[r] = slack_[r - me];
    }
    std::size_t nart = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (init_basis_[r] == kNone) init_basis_[r] = first_art_ + nart++;
    }
    ncols_ = first_art_ + nart;
    banned_from_ = ncols_;
    tab_.assign(m_, std::vector<Rational>(ncols_ + 1));
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t j = 0; j < first_art_; ++j) tab_[r][j] = rows[r][j];
      if (init_basis_[r] >= first_art_) tab_[r][init_basis_[r]] = 1;
      tab_[r][ncols_] = rhs[r];
    }
    basis_ = init_basis_;
    row_alive_.assign(m_, true);
  }

  void set_costs(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_ = cost;
    for (std::size_t r = 0; r < m_; ++r) {
      if (!row_alive_[r]) continue;
      const Rational& cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (tab_[r][j] != 0) reduced_[j] -= cb * tab_[r][j];
      }
    }
  }

  Rational objective_value() const {
    Rational v = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (row_alive_[r]) v += cost_[basis_[r]] * tab_[r][ncols_];
    }
    return v;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    auto& prow = tab_[pr];
    Rational inv = 1 / prow[pc];
    for (auto& v : prow) {
      if (v != 0) v *= inv;
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr || !row_alive_[r] || tab_[r][pc] == 0) continue;
      Rational f = tab_[r][pc];
      auto& row = tab_[r];
      for (std::size_t j = 0; j <= ncols_; ++j) {
        if (prow[j] != 0) row[j] -= f * prow[j];
      }
    }
    if (reduced_[pc] != 0) {
      Rational f = reduced_[pc];
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (prow[j] != 0) reduced_[j] -= f * prow[j];
      }
    }
    basis_[pr] = pc;
  }

  // Bland's rule. Returns kNone at optimality, else the entering column of an unbounded edge.
  std::size_t iterate() {
    for (;;) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < std::min(ncols_, banned_from_); ++j) {
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return kNone;
      std::size_t leaving = kNone;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (!row_alive_[r] || tab_[r][entering] <= 0) continue;
        Rational ratio = tab_[r][ncols_] / tab_[r][entering];
        if (leaving == kNone || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (leaving == kNone) return entering;
      pivot(leaving, entering);
    }
  }

  FarkasCertificate farkas() const {
    // Phase-1 duals y_r = c(init_r) - reduced(init_r); z = -y certifies Âx̂ = b̂, x̂ >= 0 empty.
    FarkasCertificate cert;
    const std::size_t me = prog_.eq.rows();
    cert.eq_multipliers.assign(me, Rational(0));
    cert.le_multipliers.assign(prog_.le.rows(), Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      std::size_t j = init_basis_[r];
      Rational y = cost_[j] - reduced_[j];
      Rational z = -y * sign_[r];
      if (r < me) {
        cert.eq_multipliers[r] = z;
      } else {
        cert.le_multipliers[r - me] = z;
      }
    }
    return cert;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (!row_alive_[r] || basis_[r] < first_art_) continue;
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (tab_[r][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        row_alive_[r] = false;  // redundant equality
      } else {
        pivot(r, col);
      }
    }
  }

  Vector std_to_original(const std::vector<Rational>& xs) const {
    Vector x(prog_.num_vars);
    for (std::size_t j = 0; j < prog_.num_vars; ++j) {
      x[j] = xs[plus_[j]];
      if (minus_[j] != kNone) x[j] -= xs[minus_[j]];
    }
    return x;
  }

  Vector point() const {
    std::vector<Rational> xs(ncols_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (row_alive_[r]) xs[basis_[r]] = tab_[r][ncols_];
    }
    return std_to_original(xs);
  }

  Vector ray(std::size_t entering) const {
    std::vector<Rational> d(ncols_);
    d[entering] = 1;
    for (std::size_t r = 0; r < m_; ++r) {
      if (row_alive_[r]) d[basis_[r]] = -tab_[r][entering];
    }
    return std_to_original(d);
  }

  const LinearProgram& prog_;
  std::size_t m_ = 0, ncols_ = 0, first_art_ = 0, banned_from_ = 0;
  std::vector<std::size_t> plus_, minus_, slack_, basis_, init_basis_;
  std::vector<int> sign_;
  std::vector<bool> row_alive_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> cost_, reduced_;
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& prog) {
  prog.check_shape();
  return Simplex(prog).run();
}

bool is_feasible_point(const LinearProgram& prog, std::span<const Rational> x) {
  if (x.size() != prog.num_vars) return false;
  for (std::size_t j = 0; j < prog.num_vars; ++j) {
    if (!prog.free_var[j] && x[j] < 0) return false;
  }
  for (std::size_t r = 0; r < prog.eq.rows(); ++r) {
    if (dot(prog.eq.row(r), x) != prog.eq_rhs[r]) return false;
  }
  for (std::size_t r = 0; r < prog.le.rows(); ++r) {
    if (dot(prog.le.row(r), x) > prog.le_rhs[r]) return false;
  }
  return true;
}

bool verify_certificate(const LinearProgram& prog, const FarkasCertificate& cert) {
  if (cert.eq_multipliers.size() != prog.eq.rows() || cert.le_multipliers.size() != prog.le.rows()) return false;
  for (const auto& y : cert.le_multipliers) {
    if (y < 0) return false;
  }
  Vector g(prog.num_vars);
  if (prog.eq.rows() > 0) g = g + prog.eq.left_multiply(cert.eq_multipliers);
  if (prog.le.rows() > 0) g = g + prog.le.left_multiply(cert.le_multipliers);
  for (std::size_t j = 0; j < prog.num_vars; ++j) {
    if (prog.free_var[j] ? g[j] != 0 : g[j] < 0) return false;
  }
  Rational rhs = 0;
  if (prog.eq.rows() > 0) rhs += dot(cert.eq_multipliers, prog.eq_rhs);
  if (prog.le.rows() > 0) rhs += dot(cert.le_multipliers, prog.le_rhs);
  return rhs < 0;
}

bool verify_ray(const LinearProgram& prog, std::span<const Rational> ray) {
  if (!prog.objective || ray.size() != prog.num_vars) return false;
  for (std::size_t j = 0; j < prog.num_vars; ++j) {
    if (!prog.free_var[j] && ray[j] < 0) return false;
  }
  for (std::size_t r = 0; r < prog.eq.rows(); ++r) {
    if (dot(prog.eq.row(r), ray) != 0) return false;
  }
  for (std::size_t r = 0; r < prog.le.rows(); ++r) {
    if (dot(prog.le.row(r), ray) > 0) return false;
  }
  return dot(*prog.objective, ray) > 0;
}

}  // namespace gptr
