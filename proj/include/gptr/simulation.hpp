#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gptr/extreme_value.hpp"
#include "gptr/lp.hpp"
#include "gptr/meter.hpp"
#include "gptr/sampling.hpp"

namespace gptr {

/// Row-stochastic matrix ν: rows are source outcomes x, columns target outcomes y.
class PostProcessing {
 public:
  /// Throws ValidationError unless every entry is >= 0 and every row sums to 1.
  explicit PostProcessing(Matrix nu);
  static PostProcessing identity(std::size_t n);
  const Matrix& matrix() const { return nu_; }
  std::size_t sources() const { return nu_.rows(); }
  std::size_t targets() const { return nu_.cols(); }
  bool operator==(const PostProcessing&) const = default;

 private:
  Matrix nu_;
};

/// (ν∘B)_y = Σ_x ν_xy B_x. Throws DimensionError if ν has the wrong row count.
Meter post_process(const PostProcessing& nu, const Meter& b);

/// Σ_i p_i B⁽ⁱ⁾, padding shorter meters with o-effects.
/// Throws ValidationError unless p is a probability vector of matching length.
Meter mix(const std::vector<Meter>& meters, const Vector& p);

/// Weights p_i and one post-processing per simulator.
struct SimulationWitness {
  Vector weights;
  std::vector<PostProcessing> post;
  bool operator==(const SimulationWitness&) const = default;
};

/// Σ_i p_i (ν⁽ⁱ⁾∘B⁽ⁱ⁾).
Meter reconstruct(const SimulationWitness& w, const std::vector<Meter>& simulators);

struct SimulationResult {
  bool simulable = false;
  std::optional<SimulationWitness> witness;
  /// Farkas certificate for the program returned by simulation_program.
  std::optional<FarkasCertificate> certificate;
  bool operator==(const SimulationResult&) const = default;
};

/// The feasibility program in the variables (p_i, q⁽ⁱ⁾_xy = p_i ν⁽ⁱ⁾_xy): Σ_i p_i = 1,
/// Σ_y q⁽ⁱ⁾_xy = p_i, and A_y = Σ_{i,x} q⁽ⁱ⁾_xy B⁽ⁱ⁾_x in every dual coordinate.
LinearProgram simulation_program(const Meter& target, const std::vector<Meter>& simulators);

/// Decides A ∈ sim⟨simulators⟩ exactly. The program only involves dual coordinates,
/// so it is the same for every backend. Throws DimensionError on mixed dimensions.
SimulationResult simulable(const Meter& target, const std::vector<Meter>& simulators);

/// Exact check that `cert` proves infeasibility of simulation_program(target, simulators).
bool verify_simulation_certificate(const Meter& target, const std::vector<Meter>& simulators,
                                   const FarkasCertificate& cert);

/// Random element of sim⟨generators⟩ together with the witness that produced it.
struct SimulatedSample {
  Meter meter;
  SimulationWitness witness;
};
SimulatedSample sample_simulated(Rng& rng, const std::vector<Meter>& generators, std::size_t outcomes);

struct ClosureReport {
  std::size_t sim1_checked = 0;
  std::size_t sim1_violations = 0;
  std::size_t sim2_checked = 0;
  std::size_t sim2_violations = 0;
  std::size_t sim3_checked = 0;
  std::size_t sim3_violations = 0;
  /// Feasible witnesses whose reconstruction differs from the target.
  std::size_t reconstruction_failures = 0;
  std::size_t violations() const {
    return sim1_violations + sim2_violations + sim3_violations + reconstruction_failures;
  }
};

/// Property test of the closure-operator axioms of sim⟨·⟩:
///   SIM1  every generator lies in sim⟨G⟩;
///   SIM2  D ∈ sim⟨G⟩ and D′ ∈ sim⟨G ∪ {D}⟩ imply D′ ∈ sim⟨G⟩;
///   SIM3  D ∈ sim⟨G′⟩ with G′ ⊆ G implies D ∈ sim⟨G⟩.
ClosureReport check_closure_axioms(const std::vector<Meter>& generators, std::size_t samples, std::uint64_t seed);

struct NormalizedDichotomic {
  Meter normalized;
  /// ν with A = ν∘A′.
  PostProcessing recovery;
};

/// A′₁ = (1/α)A₁ + ((λmax(A₂)−1)/α)u with α = λmax(A₁)+λmax(A₂)−1, so that
/// λmax(A′_x) = 1 and λmin(A′_x) = 0, and A = ν∘A′ with
/// ν = [[λmax(A₁), 1−λmax(A₁)], [1−λmax(A₂), λmax(A₂)]].
/// Throws DomainError for a trivial or non-dichotomic meter, UnsupportedError when
/// the λ values are irrational.
NormalizedDichotomic normalize_dichotomic(const Meter& a, const StateSpace& s);

enum class NTomicVerdict { CertifiedNTomic, CertifiedNotNTomic, Undecided };
enum class NTomicRoute {
  /// At most n outcomes after dropping o-effects.
  OutcomeCount,
  /// Σ_{x≠y} λmax(A_x) <= 1 for some y: effectively dichotomic.
  LambdaMaxComplement,
  /// Σ_x λmax(A_x) > n.
  LambdaMaxSum,
  /// Indecomposable, pairwise non-proportional effects, no pair completing u, with Σ λmax > 1.
  IndecomposableFamily,
  None,
};

std::string to_string(NTomicVerdict v);
std::string to_string(NTomicRoute r);

struct NTomicCertificate {
  NTomicVerdict verdict = NTomicVerdict::Undecided;
  NTomicRoute route = NTomicRoute::None;
  std::size_t n = 0;
  /// λmax(A_x) for every outcome.
  std::vector<ExtremeValue> lambda_max;
  /// Outcomes entering the sum (all outcomes except y for LambdaMaxComplement, the
  /// family for IndecomposableFamily, every outcome for LambdaMaxSum).
  std::vector<std::size_t> outcomes;
  /// The sum compared against its bound.
  ExtremeValue sum;
  /// Bound the sum is compared with (1 or n).
  Rational bound;
  std::string explanation;
  bool operator==(const NTomicCertificate&) const = default;
};

/// One-sided criteria for membership in sim⟨meters with <= n outcomes⟩, in order:
/// outcome count, the complement λmax sum (any n >= 2, which keeps certificates
/// monotone in n), Σ λmax > n, and for n = 2 the indecomposable-family criterion.
NTomicCertificate certify_n_tomic(const Meter& a, std::size_t n, const StateSpace& s);

/// Recomputes the evidence of `cert` from scratch; true iff it reproduces the verdict.
bool verify_n_tomic_certificate(const NTomicCertificate& cert, const Meter& a, const StateSpace& s);

/// t_i e + t_j f = u for some t_i, t_j > 0 (exact 2-unknown linear system).
bool completes_unit(const Effect& e, const Effect& f);
/// f = t·e for some t > 0.
bool positively_proportional(const Effect& e, const Effect& f);

}  // namespace gptr
