#include "gptr/report.hpp"

#include "json.hpp"

namespace gptr {

using json = nlohmann::ordered_json;

namespace {

constexpr int kIndent = 2;

json jr(const Rational& r) { return to_string(r); }
Rational rr(const json& j) { return parse_rational(j.get<std::string>()); }

json jvec(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jr(x));
  return a;
}
Vector rvec(const json& j) {
  Vector v;
  for (const auto& x : j) v.push_back(rr(x));
  return v;
}

json jev(const ExtremeValue& v) {
  json o;
  o["exact"] = v.exact_string();
  o["decimal"] = v.decimal();
  o["c"] = jr(v.constant());
  json roots = json::array();
  for (const auto& r : v.roots()) roots.push_back({{"coef", jr(r.coef)}, {"radicand", r.radicand.get_str()}});
  o["roots"] = roots;
  if (v.roots().size() == 1) {
    const auto& r = v.roots().front();
    o["sign"] = sgn(r.coef);
    o["norm_sq"] = jr(Rational(r.coef * r.coef * r.radicand));
  }
  return o;
}
ExtremeValue rev(const json& j) {
  ExtremeValue v(rr(j.at("c")));
  for (const auto& r : j.at("roots")) {
    ExtremeValue root = ExtremeValue::sqrt(Rational(Integer(r.at("radicand").get<std::string>())));
    v += root * rr(r.at("coef"));
  }
  return v;
}

json jeff(const Effect& e) { return jvec(e.coords()); }
Effect reff(const json& j) { return Effect::from_coords(rvec(j)); }

json jmeter(const Meter& m) {
  json a = json::array();
  for (const auto& e : m.effects()) a.push_back(jeff(e));
  return a;
}
Meter rmeter(const json& j) {
  std::vector<Effect> effects;
  for (const auto& e : j) effects.push_back(reff(e));
  return Meter(std::move(effects));
}

json jmatrix(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(jvec(m.row_vector(r)));
  return a;
}
Matrix rmatrix(const json& j) {
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(rvec(r));
  return Matrix::from_rows(rows);
}

json jcert(const FarkasCertificate& c) {
  return {{"eq_multipliers", jvec(c.eq_multipliers)}, {"le_multipliers", jvec(c.le_multipliers)}};
}
FarkasCertificate rcert(const json& j) { return {rvec(j.at("eq_multipliers")), rvec(j.at("le_multipliers"))}; }

template <class T, class F>
json jopt(const std::optional<T>& v, F f) {
  return v ? f(*v) : json(nullptr);
}
template <class F>
auto ropt(const json& j, const char* key, F f) -> std::optional<decltype(f(j))> {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return f(j.at(key));
}

json jstrings(const std::vector<std::string>& v) { return json(v); }
std::vector<std::string> rstrings(const json& j) { return j.get<std::vector<std::string>>(); }

json jindices(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto i : v) a.push_back(i + 1);
  return a;
}
std::vector<std::size_t> rindices(const json& j) {
  std::vector<std::size_t> v;
  for (const auto& x : j) v.push_back(x.get<std::size_t>() - 1);
  return v;
}

json jntomic(const NTomicCertificate& c) {
  json lam = json::array();
  for (const auto& l : c.lambda_max) lam.push_back(jev(l));
  return {{"verdict", to_string(c.verdict)}, {"route", to_string(c.route)}, {"n", c.n},
          {"lambda_max", lam}, {"outcomes", jindices(c.outcomes)}, {"sum", jev(c.sum)},
          {"bound", jr(c.bound)}, {"explanation", c.explanation}};
}
NTomicVerdict rverdict(const std::string& s) {
  if (s == "certified-n-tomic") return NTomicVerdict::CertifiedNTomic;
  if (s == "certified-not-n-tomic") return NTomicVerdict::CertifiedNotNTomic;
  if (s == "undecided") return NTomicVerdict::Undecided;
  throw ValidationError("unknown verdict \"" + s + "\"");
}
NTomicRoute rroute(const std::string& s) {
  for (auto r : {NTomicRoute::OutcomeCount, NTomicRoute::LambdaMaxComplement, NTomicRoute::LambdaMaxSum,
                 NTomicRoute::IndecomposableFamily, NTomicRoute::None}) {
    if (to_string(r) == s) return r;
  }
  throw ValidationError("unknown route \"" + s + "\"");
}
NTomicCertificate rntomic(const json& j) {
  NTomicCertificate c;
  c.verdict = rverdict(j.at("verdict").get<std::string>());
  c.route = rroute(j.at("route").get<std::string>());
  c.n = j.at("n").get<std::size_t>();
  for (const auto& l : j.at("lambda_max")) c.lambda_max.push_back(rev(l));
  c.outcomes = rindices(j.at("outcomes"));
  c.sum = rev(j.at("sum"));
  c.bound = rr(j.at("bound"));
  c.explanation = j.at("explanation").get<std::string>();
  return c;
}

RestrictionClass rclass(const std::string& s) {
  for (auto c : {RestrictionClass::R1, RestrictionClass::R2, RestrictionClass::R3, RestrictionClass::NoRestriction,
                 RestrictionClass::Unknown}) {
    if (to_string(c) == s) return c;
  }
  throw ValidationError("unknown class \"" + s + "\"");
}

template <class F>
auto parse_with(std::string_view text, F f) {
  try {
    return f(json::parse(text));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace

std::string to_json(const ValidationReport& r) {
  json objs = json::array();
  for (const auto& o : r.objects) {
    objs.push_back({{"kind", o.kind}, {"name", o.name}, {"valid", o.valid}, {"problems", jstrings(o.problems)}});
  }
  json j{{"command", "validate"}, {"all_valid", r.all_valid()}, {"objects", objs}};
  return j.dump(kIndent);
}

ValidationReport validation_report_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    ValidationReport r;
    for (const auto& o : j.at("objects")) {
      r.objects.push_back({o.at("kind").get<std::string>(), o.at("name").get<std::string>(), o.at("valid").get<bool>(),
                           rstrings(o.at("problems"))});
    }
    return r;
  });
}

std::string to_json(const SimulateReport& r) {
  json witness = nullptr;
  if (r.result.witness) {
    json post = json::array();
    for (const auto& p : r.result.witness->post) post.push_back(jmatrix(p.matrix()));
    witness = {{"weights", jvec(r.result.witness->weights)}, {"post_processings", post}};
  }
  json j{{"command", "simulate"},
         {"target", r.target},
         {"simulators", jstrings(r.simulators)},
         {"simulable", r.result.simulable},
         {"witness", witness},
         {"certificate", jopt(r.result.certificate, jcert)},
         {"verified", r.verified}};
  return j.dump(kIndent);
}

SimulateReport simulate_report_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    SimulateReport r;
    r.target = j.at("target").get<std::string>();
    r.simulators = rstrings(j.at("simulators"));
    r.result.simulable = j.at("simulable").get<bool>();
    if (!j.at("witness").is_null()) {
      SimulationWitness w;
      w.weights = rvec(j.at("witness").at("weights"));
      for (const auto& p : j.at("witness").at("post_processings")) w.post.emplace_back(rmatrix(p));
      r.result.witness = std::move(w);
    }
    r.result.certificate = ropt(j, "certificate", rcert);
    r.verified = j.at("verified").get<bool>();
    return r;
  });
}

std::string to_json(const ClassifyReport& r) {
  const auto& c = r.result;
  json gens = json::array();
  for (const auto& e : c.effects.generators) gens.push_back(jeff(e));
  json j{{"command", "classify"},
         {"restriction", r.restriction},
         {"label", to_string(c.label)},
         {"effect_outside", jopt(c.effect_outside, jeff)},
         {"meter_outside", jopt(c.meter_outside, jmeter)},
         {"effect_generators", gens},
         {"seed", c.seed},
         {"budget", c.budget},
         {"samples_used", c.samples_used},
         {"trail", jstrings(c.trail)},
         {"verified", r.verified}};
  return j.dump(kIndent);
}

ClassifyReport classify_report_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    ClassifyReport r;
    r.restriction = j.at("restriction").get<std::string>();
    auto& c = r.result;
    c.label = rclass(j.at("label").get<std::string>());
    c.effect_outside = ropt(j, "effect_outside", reff);
    c.meter_outside = ropt(j, "meter_outside", rmeter);
    for (const auto& e : j.at("effect_generators")) c.effects.generators.push_back(reff(e));
    c.seed = j.at("seed").get<std::uint64_t>();
    c.budget = j.at("budget").get<std::size_t>();
    c.samples_used = j.at("samples_used").get<std::size_t>();
    c.trail = rstrings(j.at("trail"));
    r.verified = j.at("verified").get<bool>();
    return r;
  });
}

std::string to_json(const NTomicReport& r) {
  json j{{"command", "ntomic"}, {"meter", r.meter}, {"certificate", jntomic(r.certificate)}, {"verified", r.verified}};
  return j.dump(kIndent);
}

NTomicReport ntomic_report_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    return NTomicReport{j.at("meter").get<std::string>(), rntomic(j.at("certificate")), j.at("verified").get<bool>()};
  });
}

std::string to_json(const NoiseReport& r) {
  json j{{"command", "noise"},
         {"meter", r.meter},
         {"noise_content", jev(r.noise_content)},
         {"t", jopt(r.t, jr)},
         {"member", r.member ? json(*r.member) : json(nullptr)},
         {"member_for_all_t", r.member_for_all_t}};
  return j.dump(kIndent);
}

NoiseReport noise_report_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    NoiseReport r;
    r.meter = j.at("meter").get<std::string>();
    r.noise_content = rev(j.at("noise_content"));
    r.t = ropt(j, "t", rr);
    r.member = ropt(j, "member", [](const json& x) { return x.get<bool>(); });
    r.member_for_all_t = j.at("member_for_all_t").get<bool>();
    return r;
  });
}

std::string to_json(const CompatReport& r) {
  json joint = nullptr;
  if (r.result.joint) {
    json grid = json::array();
    for (std::size_t x = 0; x < r.result.joint->rows; ++x) {
      json row = json::array();
      for (std::size_t y = 0; y < r.result.joint->cols; ++y) row.push_back(jeff(r.result.joint->at(x, y)));
      grid.push_back(row);
    }
    joint = grid;
  }
  json j{{"command", "compat"},
         {"meter_a", r.meter_a},
         {"meter_b", r.meter_b},
         {"compatible", r.result.compatible},
         {"joint_meter", joint},
         {"certificate", jopt(r.result.certificate, jcert)},
         {"verified", r.verified}};
  return j.dump(kIndent);
}

CompatReport compat_report_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    CompatReport r;
    r.meter_a = j.at("meter_a").get<std::string>();
    r.meter_b = j.at("meter_b").get<std::string>();
    r.result.compatible = j.at("compatible").get<bool>();
    if (!j.at("joint_meter").is_null()) {
      JointMeter g;
      for (const auto& row : j.at("joint_meter")) {
        ++g.rows;
        g.cols = row.size();
        for (const auto& e : row) g.grid.push_back(reff(e));
      }
      r.result.joint = std::move(g);
    }
    r.result.certificate = ropt(j, "certificate", rcert);
    r.verified = j.at("verified").get<bool>();
    return r;
  });
}

std::string to_json(const UdReport& r) {
  json j{{"command", "ud"},
         {"kappa", jr(r.kappa)},
         {"overlap_sq", jr(r.overlap_sq)},
         {"constraint", r.constraint},
         {"dichotomic_bound", jr(r.dichotomic_bound)},
         {"unrestricted_optimum", jev(r.unrestricted_optimum)},
         {"optimizer",
          {{"q1", jr(r.optimizer.q1)},
           {"q2", jr(r.optimizer.q2)},
           {"success", jr(r.optimizer.success)},
           {"success_decimal", ExtremeValue(r.optimizer.success).decimal()}}}};
  return j.dump(kIndent);
}

UdReport ud_report_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    UdReport r;
    r.kappa = rr(j.at("kappa"));
    r.overlap_sq = rr(j.at("overlap_sq"));
    r.constraint = j.at("constraint").get<std::string>();
    r.dichotomic_bound = rr(j.at("dichotomic_bound"));
    r.unrestricted_optimum = rev(j.at("unrestricted_optimum"));
    const json& o = j.at("optimizer");
    r.optimizer = {rr(o.at("q1")), rr(o.at("q2")), rr(o.at("success"))};
    return r;
  });
}

}  // namespace gptr
