#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gptr/compatibility.hpp"
#include "gptr/model_io.hpp"
#include "gptr/qubit.hpp"
#include "gptr/restrictions.hpp"
#include "gptr/simulation.hpp"

namespace gptr {

/// One report per CLI command. Each serializes to JSON (rationals as "p/q" strings,
/// surds as {"c", "roots", "decimal", ...}) and parses back into an equal value.

struct SimulateReport {
  std::string target;
  std::vector<std::string> simulators;
  SimulationResult result;
  /// Reconstruction of the witness equals the target, or the certificate verifies.
  bool verified = false;
  bool operator==(const SimulateReport&) const = default;
};

struct ClassifyReport {
  std::string restriction;
  ClassificationResult result;
  bool verified = false;
  bool operator==(const ClassifyReport&) const = default;
};

struct NTomicReport {
  std::string meter;
  NTomicCertificate certificate;
  bool verified = false;
  bool operator==(const NTomicReport&) const = default;
};

struct NoiseReport {
  std::string meter;
  ExtremeValue noise_content;
  std::optional<Rational> t;
  std::optional<bool> member;
  /// w = 1: member of R_t for every t.
  bool member_for_all_t = false;
  bool operator==(const NoiseReport&) const = default;
};

struct CompatReport {
  std::string meter_a;
  std::string meter_b;
  CompatibilityResult result;
  bool verified = false;
  bool operator==(const CompatReport&) const = default;
};

struct UdReport {
  Rational kappa;
  Rational overlap_sq;
  std::string constraint;  // "none" | "dichotomic"
  Rational dichotomic_bound;
  ExtremeValue unrestricted_optimum;
  UdOptimum optimizer;
  bool operator==(const UdReport&) const = default;
};

std::string to_json(const ValidationReport& r);
std::string to_json(const SimulateReport& r);
std::string to_json(const ClassifyReport& r);
std::string to_json(const NTomicReport& r);
std::string to_json(const NoiseReport& r);
std::string to_json(const CompatReport& r);
std::string to_json(const UdReport& r);

/// Throw ValidationError on malformed input.
ValidationReport validation_report_from_json(std::string_view text);
SimulateReport simulate_report_from_json(std::string_view text);
ClassifyReport classify_report_from_json(std::string_view text);
NTomicReport ntomic_report_from_json(std::string_view text);
NoiseReport noise_report_from_json(std::string_view text);
CompatReport compat_report_from_json(std::string_view text);
UdReport ud_report_from_json(std::string_view text);

}  // namespace gptr
