#include "gptr/gptr.h"

#include <cstring>
#include <string>

#include "gptr/report.hpp"

struct gptr_model {
  gptr::Model model;
};

namespace {

thread_local std::string last_error;

gptr_status fail(gptr_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating library exceptions into status codes.
template <class F>
gptr_status guarded(F body) {
  try {
    last_error.clear();
    return body();
  } catch (const gptr::LookupError& e) {
    return fail(GPTR_USAGE, e.what());
  } catch (const gptr::UnsupportedError& e) {
    return fail(GPTR_UNSUPPORTED, e.what());
  } catch (const gptr::ResourceError& e) {
    return fail(GPTR_UNSUPPORTED, e.what());
  } catch (const gptr::ValidationError& e) {
    return fail(GPTR_VALIDATION, e.what());
  } catch (const gptr::DimensionError& e) {
    return fail(GPTR_VALIDATION, e.what());
  } catch (const gptr::DomainError& e) {
    return fail(GPTR_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GPTR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GPTR_INTERNAL, e.what());
  }
}

gptr_status emit(const std::string& json, bool positive, char** report) {
  *report = dup(json);
  if (!*report) return fail(GPTR_INTERNAL, "out of memory");
  return positive ? GPTR_OK : GPTR_NEGATIVE;
}

gptr::Rational parse_argument(const char* text, const char* what) {
  try {
    return gptr::parse_rational(text);
  } catch (const gptr::ValidationError& e) {
    throw gptr::DomainError(std::string(what) + ": " + e.what());
  }
}

gptr_status ud_report(const gptr::Rational& kappa, int dichotomic, char** report) {
  if (kappa < -1 || kappa > 1) return fail(GPTR_USAGE, "overlap outside [0, 1]");
  gptr::UdReport r;
  r.kappa = kappa;
  r.overlap_sq = (1 + kappa) / 2;
  r.constraint = dichotomic ? "dichotomic" : "none";
  r.dichotomic_bound = gptr::ud_dichotomic_bound(kappa);
  r.unrestricted_optimum = gptr::ud_unrestricted_optimum(kappa);
  r.optimizer = gptr::ud_max_valid_q(kappa, dichotomic ? gptr::UdConstraint::SumAtMostOne : gptr::UdConstraint::None);
  return emit(gptr::to_json(r), true, report);
}

}  // namespace

#define GPTR_REQUIRE(cond, msg) \
  if (!(cond)) return fail(GPTR_USAGE, msg)

extern "C" {

const char* gptr_version(void) { return "0.1.0"; }

const char* gptr_last_error(void) { return last_error.c_str(); }

void gptr_string_free(char* s) { std::free(s); }

gptr_status gptr_model_load_file(const char* path, gptr_model** out) {
  GPTR_REQUIRE(path && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new gptr_model{gptr::Model::from_file(path)};
    return GPTR_OK;
  });
}

gptr_status gptr_model_load_json(const char* text, gptr_model** out) {
  GPTR_REQUIRE(text && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new gptr_model{gptr::Model::from_json_text(text)};
    return GPTR_OK;
  });
}

void gptr_model_free(gptr_model* model) { delete model; }

gptr_status gptr_validate(const gptr_model* model, char** report) {
  GPTR_REQUIRE(model && report, "null argument");
  return guarded([&] {
    gptr::ValidationReport r = gptr::validate_model(model->model);
    return emit(gptr::to_json(r), r.all_valid(), report);
  });
}

gptr_status gptr_simulate(const gptr_model* model, const char* target, const char* const* simulators, size_t count,
                          char** report) {
  GPTR_REQUIRE(model && target && report && (simulators || count == 0), "null argument");
  GPTR_REQUIRE(count > 0, "at least one simulator is required");
  return guarded([&] {
    const auto& m = model->model;
    gptr::SimulateReport r;
    r.target = target;
    std::vector<gptr::Meter> sims;
    for (size_t i = 0; i < count; ++i) {
      GPTR_REQUIRE(simulators[i], "null simulator name");
      r.simulators.emplace_back(simulators[i]);
      sims.push_back(m.meter(simulators[i]));
    }
    gptr::Meter a = m.meter(target);
    r.result = gptr::simulable(a, sims);
    r.verified = r.result.simulable ? gptr::reconstruct(*r.result.witness, sims) == a
                                    : gptr::verify_simulation_certificate(a, sims, *r.result.certificate);
    return emit(gptr::to_json(r), r.result.simulable, report);
  });
}

gptr_status gptr_classify(const gptr_model* model, const char* restriction, uint64_t seed, size_t budget,
                          char** report) {
  GPTR_REQUIRE(model && restriction && report, "null argument");
  return guarded([&] {
    const auto& m = model->model;
    gptr::MeterRestriction r = m.restriction(restriction);
    gptr::ClassifyReport rep;
    rep.restriction = restriction;
    rep.result = gptr::classify(r, m.space(), {seed, budget});
    rep.verified = gptr::verify_classification(rep.result, r, m.space());
    return emit(gptr::to_json(rep), true, report);
  });
}

gptr_status gptr_ntomic(const gptr_model* model, const char* meter, size_t n, char** report) {
  GPTR_REQUIRE(model && meter && report, "null argument");
  GPTR_REQUIRE(n >= 1, "n must be at least 1");
  return guarded([&] {
    const auto& m = model->model;
    gptr::Meter a = m.meter(meter);
    gptr::NTomicReport r{meter, gptr::certify_n_tomic(a, n, m.space()), false};
    r.verified = gptr::verify_n_tomic_certificate(r.certificate, a, m.space());
    return emit(gptr::to_json(r), r.certificate.verdict != gptr::NTomicVerdict::CertifiedNotNTomic, report);
  });
}

gptr_status gptr_noise(const gptr_model* model, const char* meter, const char* t, char** report) {
  GPTR_REQUIRE(model && meter && report, "null argument");
  return guarded([&] {
    const auto& m = model->model;
    gptr::Meter b = m.meter(meter);
    gptr::NoiseReport r;
    r.meter = meter;
    r.noise_content = gptr::noise_content(b, m.space());
    r.member_for_all_t = r.noise_content >= gptr::ExtremeValue(1);
    if (t) {
      gptr::Rational tv = parse_argument(t, "t");
      GPTR_REQUIRE(tv >= 0 && tv <= 1, "t must lie in [0, 1]");
      r.t = tv;
      r.member = gptr::in_noise_restriction(b, tv, m.space());
    }
    return emit(gptr::to_json(r), !r.member || *r.member, report);
  });
}

gptr_status gptr_compat(const gptr_model* model, const char* meter_a, const char* meter_b, char** report) {
  GPTR_REQUIRE(model && meter_a && meter_b && report, "null argument");
  return guarded([&] {
    const auto& m = model->model;
    gptr::Meter a = m.meter(meter_a);
    gptr::Meter b = m.meter(meter_b);
    gptr::CompatReport r{meter_a, meter_b, gptr::are_compatible(a, b, m.space()), false};
    r.verified = r.result.compatible ? gptr::check_joint_meter(*r.result.joint, a, b, m.space())
                                     : gptr::verify_compatibility_certificate(a, b, m.space(), *r.result.certificate);
    return emit(gptr::to_json(r), r.result.compatible, report);
  });
}

gptr_status gptr_ud_overlap(const char* overlap_sq, int dichotomic, char** report) {
  GPTR_REQUIRE(overlap_sq && report, "null argument");
  return guarded([&] { return ud_report(2 * parse_argument(overlap_sq, "overlap") - 1, dichotomic, report); });
}

gptr_status gptr_ud_bloch(const char* const* n1, const char* const* n2, int dichotomic, char** report) {
  GPTR_REQUIRE(n1 && n2 && report, "null argument");
  return guarded([&] {
    gptr::Vector a, b;
    for (int i = 0; i < 3; ++i) {
      GPTR_REQUIRE(n1[i] && n2[i], "null Bloch component");
      a.push_back(parse_argument(n1[i], "n1"));
      b.push_back(parse_argument(n2[i], "n2"));
    }
    gptr::PureQubitState s1(a), s2(b);
    return ud_report(gptr::dot(s1.bloch(), s2.bloch()), dichotomic, report);
  });
}

}  // extern "C"
