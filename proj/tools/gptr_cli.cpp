// Command-line front end over the gptr C API.
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gptr/gptr.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

struct ModelDeleter {
  void operator()(gptr_model* m) const { gptr_model_free(m); }
};
using ModelPtr = std::unique_ptr<gptr_model, ModelDeleter>;

struct Options {
  bool json_output = false;
};

std::string decimal(const json& surd) { return surd.at("decimal").get<std::string>(); }

// Decimal rendering of a "p/q" string for display.
std::string ratio_decimal(const json& r) {
  const std::string s = r.get<std::string>();
  const auto slash = s.find('/');
  long double v = std::stold(s.substr(0, slash));
  if (slash != std::string::npos) v /= std::stold(s.substr(slash + 1));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9Lg", v);
  return buf;
}

std::string effect_text(const json& e) {
  std::string out = "(" + e.at(0).get<std::string>() + ", (";
  for (std::size_t i = 1; i < e.size(); ++i) out += (i > 1 ? ", " : "") + e.at(i).get<std::string>();
  return out + "))";
}

std::string row_text(const json& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? ", " : "") + row.at(i).get<std::string>();
  return out + "]";
}

void print_validate(const json& r) {
  for (const auto& o : r.at("objects")) {
    std::cout << o.at("kind").get<std::string>() << " " << o.at("name").get<std::string>() << ": "
              << (o.at("valid").get<bool>() ? "valid" : "INVALID") << "\n";
    for (const auto& p : o.at("problems")) std::cout << "  " << p.get<std::string>() << "\n";
  }
  std::cout << (r.at("all_valid").get<bool>() ? "all objects valid" : "validation failed") << "\n";
}

void print_simulate(const json& r) {
  std::cout << "target " << r.at("target").get<std::string>() << " simulable: "
            << (r.at("simulable").get<bool>() ? "yes" : "no") << "\n";
  if (!r.at("witness").is_null()) {
    const auto& w = r.at("witness");
    const auto& names = r.at("simulators");
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::cout << "  p(" << names.at(i).get<std::string>() << ") = " << w.at("weights").at(i).get<std::string>()
                << ", post-processing:\n";
      for (const auto& row : w.at("post_processings").at(i)) std::cout << "    " << row_text(row) << "\n";
    }
    std::cout << "witness reconstructs the target exactly: " << (r.at("verified").get<bool>() ? "yes" : "NO") << "\n";
  } else {
    std::cout << "Farkas certificate verified: " << (r.at("verified").get<bool>() ? "yes" : "NO") << "\n";
  }
}

void print_classify(const json& r) {
  std::cout << "restriction " << r.at("restriction").get<std::string>() << ": " << r.at("label").get<std::string>()
            << "\n";
  for (const auto& t : r.at("trail")) std::cout << "  " << t.get<std::string>() << "\n";
  if (!r.at("effect_outside").is_null()) std::cout << "effect outside E_R: " << effect_text(r.at("effect_outside")) << "\n";
  if (!r.at("meter_outside").is_null()) {
    std::cout << "meter in M_{E_R} outside R:\n";
    for (const auto& e : r.at("meter_outside")) std::cout << "  " << effect_text(e) << "\n";
  }
  std::cout << "seed " << r.at("seed").get<std::uint64_t>() << ", budget " << r.at("budget").get<std::size_t>()
            << ", samples used " << r.at("samples_used").get<std::size_t>() << "\n";
  std::cout << "witnesses verified: " << (r.at("verified").get<bool>() ? "yes" : "NO") << "\n";
}

void print_ntomic(const json& r) {
  const auto& c = r.at("certificate");
  std::cout << "meter " << r.at("meter").get<std::string>() << ", n = " << c.at("n").get<std::size_t>() << ": "
            << c.at("verdict").get<std::string>() << " (" << c.at("route").get<std::string>() << ")\n";
  std::cout << "  " << c.at("explanation").get<std::string>() << "\n";
  std::cout << "  lambda_max:";
  for (const auto& l : c.at("lambda_max")) std::cout << " " << l.at("exact").get<std::string>();
  std::cout << "\n";
}

void print_noise(const json& r) {
  const auto& w = r.at("noise_content");
  std::cout << "meter " << r.at("meter").get<std::string>() << ": w = " << w.at("exact").get<std::string>();
  if (!w.at("roots").empty()) std::cout << " ≈ " << decimal(w);
  std::cout << "\n";
  if (r.at("member_for_all_t").get<bool>()) std::cout << "member of R_t for all t\n";
  if (!r.at("t").is_null()) {
    std::cout << "member of R_t for t = " << r.at("t").get<std::string>() << ": "
              << (r.at("member").get<bool>() ? "yes" : "no") << "\n";
  }
}

void print_compat(const json& r) {
  std::cout << "meters " << r.at("meter_a").get<std::string>() << " and " << r.at("meter_b").get<std::string>()
            << " compatible: " << (r.at("compatible").get<bool>() ? "yes" : "no") << "\n";
  if (!r.at("joint_meter").is_null()) {
    const auto& g = r.at("joint_meter");
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t y = 0; y < g.at(x).size(); ++y) {
        std::cout << "  G[" << x + 1 << "," << y + 1 << "] = " << effect_text(g.at(x).at(y)) << "\n";
      }
    }
    std::cout << "marginals reproduce both meters: " << (r.at("verified").get<bool>() ? "yes" : "NO") << "\n";
  } else {
    std::cout << "Farkas certificate verified: " << (r.at("verified").get<bool>() ? "yes" : "NO") << "\n";
  }
}

void print_ud(const json& r) {
  std::cout << "overlap² " << r.at("overlap_sq").get<std::string>() << " (n1·n2 = " << r.at("kappa").get<std::string>()
            << ")\n";
  std::cout << "bound " << r.at("dichotomic_bound").get<std::string>() << "\n";
  const auto& opt = r.at("unrestricted_optimum");
  std::cout << "optimum " << opt.at("exact").get<std::string>() << " ≈ " << decimal(opt) << "\n";
  const auto& o = r.at("optimizer");
  std::cout << "optimizer (" << r.at("constraint").get<std::string>() << "): q1 ≈ " << ratio_decimal(o.at("q1"))
            << ", q2 ≈ " << ratio_decimal(o.at("q2")) << ", success " << o.at("success").get<std::string>()
            << " ≈ " << o.at("success_decimal").get<std::string>() << "\n";
}

// Prints a report string and returns the status as the exit code.
int finish(gptr_status st, char*& report, const Options& opts, void (*print)(const json&)) {
  if (st != GPTR_OK && st != GPTR_NEGATIVE) {
    std::cerr << "error: " << gptr_last_error() << "\n";
    return static_cast<int>(st);
  }
  std::unique_ptr<char, void (*)(char*)> owned(report, gptr_string_free);
  if (opts.json_output) {
    std::cout << report << "\n";
  } else {
    print(json::parse(report));
  }
  return static_cast<int>(st);
}

std::optional<ModelPtr> load(const std::string& path, int& code) {
  gptr_model* m = nullptr;
  gptr_status st = gptr_model_load_file(path.c_str(), &m);
  if (st != GPTR_OK) {
    std::cerr << "error: " << gptr_last_error() << "\n";
    code = static_cast<int>(st);
    return std::nullopt;
  }
  return ModelPtr(m);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for meters of general probabilistic theories"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--json", opts.json_output, "Print the machine-readable JSON report");

  std::string model_path, target, restriction, meter, meter_b, t, overlap_sq, constraint = "none";
  std::vector<std::string> simulators, bloch;
  std::size_t n = 2;
  std::uint64_t seed = 1;
  std::size_t budget = 200;

  auto* validate = app.add_subcommand("validate", "Validate every object of a model file");
  validate->add_option("model", model_path, "Model JSON file")->required();

  auto* simulate = app.add_subcommand("simulate", "Decide whether a meter is simulable from others");
  simulate->add_option("model", model_path, "Model JSON file")->required();
  simulate->add_option("target", target, "Target meter")->required();
  simulate->add_option("simulators", simulators, "Simulator meters")->required();

  auto* classify = app.add_subcommand("classify", "Classify a restriction as R1, R2 or R3");
  classify->add_option("model", model_path, "Model JSON file")->required();
  classify->add_option("restriction", restriction, "Restriction name")->required();
  classify->add_option("--seed", seed, "Sampling seed");
  classify->add_option("--budget", budget, "Number of sampled meters");

  auto* ntomic = app.add_subcommand("ntomic", "Certify effective n-tomicity of a meter");
  ntomic->add_option("model", model_path, "Model JSON file")->required();
  ntomic->add_option("meter", meter, "Meter name")->required();
  ntomic->add_option("n", n, "Outcome bound")->check(CLI::PositiveNumber);

  auto* noise = app.add_subcommand("noise", "Noise content and membership in the noise restriction");
  noise->add_option("model", model_path, "Model JSON file")->required();
  noise->add_option("meter", meter, "Meter name")->required();
  noise->add_option("--t", t, "Noise parameter t in [0, 1], e.g. 1/2");

  auto* compat = app.add_subcommand("compat", "Decide compatibility of two meters");
  compat->add_option("model", model_path, "Model JSON file")->required();
  compat->add_option("meter_a", meter, "First meter")->required();
  compat->add_option("meter_b", meter_b, "Second meter")->required();

  auto* ud = app.add_subcommand("ud", "Unambiguous discrimination of two pure qubit states");
  auto* ov = ud->add_option("--overlap-sq", overlap_sq, "|<psi1|psi2>|^2 as a rational, e.g. 1/2");
  auto* bl = ud->add_option("--bloch", bloch, "Two Bloch vectors, each as x,y,z")->expected(2);
  ov->excludes(bl);
  ud->add_option("--constraint", constraint, "none | dichotomic")->check(CLI::IsMember({"none", "dichotomic"}));

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->add_flag("--json", opts.json_output, "Print the machine-readable JSON report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int code = 0;
  char* report = nullptr;
  if (*ud) {
    const int dichotomic = constraint == "dichotomic";
    gptr_status st;
    if (!bloch.empty()) {
      auto a = split_commas(bloch.at(0));
      auto b = split_commas(bloch.at(1));
      if (a.size() != 3 || b.size() != 3) {
        std::cerr << "error: --bloch expects two vectors x,y,z\n";
        return 2;
      }
      const char* pa[3] = {a[0].c_str(), a[1].c_str(), a[2].c_str()};
      const char* pb[3] = {b[0].c_str(), b[1].c_str(), b[2].c_str()};
      st = gptr_ud_bloch(pa, pb, dichotomic, &report);
    } else if (!overlap_sq.empty()) {
      st = gptr_ud_overlap(overlap_sq.c_str(), dichotomic, &report);
    } else {
      std::cerr << "error: ud needs --overlap-sq or --bloch\n";
      return 2;
    }
    return finish(st, report, opts, print_ud);
  }

  auto model = load(model_path, code);
  if (!model) return code;
  gptr_model* m = model->get();
  if (*validate) return finish(gptr_validate(m, &report), report, opts, print_validate);
  if (*simulate) {
    std::vector<const char*> names;
    for (const auto& s : simulators) names.push_back(s.c_str());
    return finish(gptr_simulate(m, target.c_str(), names.data(), names.size(), &report), report, opts, print_simulate);
  }
  if (*classify) return finish(gptr_classify(m, restriction.c_str(), seed, budget, &report), report, opts, print_classify);
  if (*ntomic) return finish(gptr_ntomic(m, meter.c_str(), n, &report), report, opts, print_ntomic);
  if (*noise) return finish(gptr_noise(m, meter.c_str(), t.empty() ? nullptr : t.c_str(), &report), report, opts, print_noise);
  if (*compat) return finish(gptr_compat(m, meter.c_str(), meter_b.c_str(), &report), report, opts, print_compat);
  return 2;
}
