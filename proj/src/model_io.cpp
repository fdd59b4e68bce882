#include "gptr/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gptr {

using json = nlohmann::ordered_json;

ModelError::ModelError(std::string origin, std::string pointer, const std::string& reason)
    : ValidationError(origin + ": " + (pointer.empty() ? "/" : pointer) + ": " + reason),
      origin_(std::move(origin)),
      pointer_(std::move(pointer)) {}

namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& ptr, const std::string& reason) const { throw ModelError(origin_, ptr, reason); }

  Rational scalar(const json& j, const std::string& ptr) const {
    try {
      if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
      if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      fail(ptr, e.what());
    }
    fail(ptr, "expected an integer or a rational string such as \"1/2\"");
  }

  Vector vector(const json& j, const std::string& ptr) const {
    if (!j.is_array()) fail(ptr, "expected an array of scalars");
    Vector out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar(j[i], ptr + "/" + std::to_string(i)));
    return out;
  }

  Effect effect(const json& j, const std::string& ptr, std::size_t d) const {
    Vector c = vector(j, ptr);
    if (c.size() != d + 1) {
      fail(ptr, "effect needs " + std::to_string(d + 1) + " entries [c, v1..v" + std::to_string(d) + "], got " +
                    std::to_string(c.size()));
    }
    return Effect::from_coords(c);
  }

  std::vector<Effect> effects(const json& j, const std::string& ptr, std::size_t d) const {
    if (!j.is_array() || j.empty()) fail(ptr, "expected a nonempty array of effects");
    std::vector<Effect> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(effect(j[i], ptr + "/" + std::to_string(i), d));
    return out;
  }

  const json& object(const json& j, const std::string& ptr) const {
    if (!j.is_object()) fail(ptr, "expected an object");
    return j;
  }

  const std::string& origin() const { return origin_; }

 private:
  std::string origin_;
};

StateSpace read_space(const Reader& rd, const json& root) {
  if (!root.contains("state_space")) rd.fail("", "missing \"state_space\"");
  const json& ss = rd.object(root["state_space"], "/state_space");
  if (!ss.contains("type") || !ss["type"].is_string()) rd.fail("/state_space/type", "expected \"polytope\" or \"ball\"");
  const std::string type = ss["type"].get<std::string>();
  if (type == "ball") {
    if (!ss.contains("dim") || !ss["dim"].is_number_integer() || ss["dim"].get<long long>() < 1) {
      rd.fail("/state_space/dim", "expected a positive integer");
    }
    return StateSpace::ball(static_cast<std::size_t>(ss["dim"].get<long long>()));
  }
  if (type != "polytope") rd.fail("/state_space/type", "unknown state space type \"" + type + "\"");
  if (!ss.contains("vertices") || !ss["vertices"].is_array()) rd.fail("/state_space/vertices", "expected an array of vertices");
  std::vector<Vector> vertices;
  const json& vs = ss["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(rd.vector(vs[i], "/state_space/vertices/" + std::to_string(i)));
  try {
    return StateSpace::polytope(std::move(vertices));
  } catch (const Error& e) {
    rd.fail("/state_space/vertices", e.what());
  }
}

}  // namespace

Model Model::from_json_text(std::string_view text, const std::string& origin) {
  Reader rd(origin);
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    rd.fail("", std::string("invalid JSON: ") + e.what());
  }
  rd.object(root, "");
  Model m(read_space(rd, root));
  const std::size_t d = m.space_.dimension();

  if (root.contains("meters")) {
    for (const auto& [name, val] : rd.object(root["meters"], "/meters").items()) {
      m.meters_.push_back({name, rd.effects(val, "/meters/" + escape_token(name), d)});
    }
  }
  if (root.contains("effect_restrictions")) {
    for (const auto& [name, val] : rd.object(root["effect_restrictions"], "/effect_restrictions").items()) {
      m.effect_restrictions_.push_back({name, rd.effects(val, "/effect_restrictions/" + escape_token(name), d)});
    }
  }
  if (root.contains("restrictions")) {
    for (const auto& [name, val] : rd.object(root["restrictions"], "/restrictions").items()) {
      const std::string ptr = "/restrictions/" + escape_token(name);
      rd.object(val, ptr);
      if (!val.contains("kind") || !val["kind"].is_string()) rd.fail(ptr + "/kind", "expected \"sim\", \"effects\" or \"noise\"");
      RestrictionSpec spec;
      spec.name = name;
      spec.kind = val["kind"].get<std::string>();
      if (spec.kind == "noise") {
        if (!val.contains("t")) rd.fail(ptr + "/t", "missing noise parameter");
        spec.t = rd.scalar(val["t"], ptr + "/t");
        if (spec.t < 0 || spec.t > 1) rd.fail(ptr + "/t", "t must lie in [0, 1]");
      } else if (spec.kind == "sim" || spec.kind == "effects") {
        if (!val.contains("generators")) rd.fail(ptr + "/generators", "missing generators");
        const json& g = val["generators"];
        if (spec.kind == "effects" && g.is_array() && !g.empty() && g[0].is_array()) {
          spec.inline_effects = rd.effects(g, ptr + "/generators", d);
        } else if (spec.kind == "effects" && g.is_string()) {
          spec.generators.push_back(g.get<std::string>());
        } else if (g.is_array()) {
          for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g[i].is_string()) rd.fail(ptr + "/generators/" + std::to_string(i), "expected a name");
            spec.generators.push_back(g[i].get<std::string>());
          }
          if (spec.generators.empty()) rd.fail(ptr + "/generators", "expected at least one generator");
        } else {
          rd.fail(ptr + "/generators", "expected a list of names");
        }
      } else {
        rd.fail(ptr + "/kind", "unknown restriction kind \"" + spec.kind + "\"");
      }
      m.restrictions_.push_back(std::move(spec));
    }
  }
  if (root.contains("states")) {
    for (const auto& [name, val] : rd.object(root["states"], "/states").items()) {
      const std::string ptr = "/states/" + escape_token(name);
      Vector p = rd.vector(val, ptr);
      if (p.size() != d) rd.fail(ptr, "state needs " + std::to_string(d) + " coordinates");
      m.states_.push_back({name, std::move(p)});
    }
  }
  for (const auto& [key, val] : root.items()) {
    if (key != "state_space" && key != "meters" && key != "effect_restrictions" && key != "restrictions" &&
        key != "states") {
      rd.fail("/" + escape_token(key), "unknown top-level key");
    }
  }
  return m;
}

Model Model::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError(path, "", "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), path);
}

namespace {

template <class T>
const T& find_named(const std::vector<T>& items, const std::string& name, const char* what) {
  for (const auto& it : items) {
    if (it.name == name) return it;
  }
  throw LookupError(std::string("no ") + what + " named \"" + name + "\"");
}

}  // namespace

Meter Model::meter(const std::string& name) const {
  const auto& m = find_named(meters_, name, "meter");
  MeterCheck chk = check_meter(m.effects, space_);
  if (!chk.valid) throw ValidationError("meter \"" + name + "\": " + chk.problems.front());
  return Meter(m.effects);
}

EffectRestriction Model::effect_restriction(const std::string& name) const {
  return {find_named(effect_restrictions_, name, "effect restriction").effects};
}

MeterRestriction Model::restriction(const std::string& name) const {
  const auto& spec = find_named(restrictions_, name, "restriction");
  if (spec.kind == "noise") return NoiseFamily{spec.t};
  if (spec.kind == "effects") {
    if (!spec.inline_effects.empty()) return InducedByEffects{{spec.inline_effects}};
    return InducedByEffects{effect_restriction(spec.generators.front())};
  }
  GeneratedBySimulation sim;
  for (const auto& g : spec.generators) sim.generators.push_back(meter(g));
  return sim;
}

const Vector& Model::state(const std::string& name) const { return find_named(states_, name, "state").point; }

bool ValidationReport::all_valid() const {
  for (const auto& o : objects) {
    if (!o.valid) return false;
  }
  return true;
}

ValidationReport validate_model(const Model& m) {
  ValidationReport rep;
  const StateSpace& s = m.space();
  rep.objects.push_back({"state_space", s.describe(), true, {}});
  for (const auto& me : m.meters()) {
    MeterCheck chk = check_meter(me.effects, s);
    rep.objects.push_back({"meter", me.name, chk.valid, chk.problems});
  }
  for (const auto& er : m.effect_restrictions()) {
    RestrictionReport r = effect_restriction_validate({er.effects}, s);
    rep.objects.push_back({"effect_restriction", er.name, r.valid, r.problems});
  }
  for (const auto& spec : m.restrictions()) {
    ObjectVerdict v{"restriction", spec.name, true, {}};
    try {
      MeterRestriction r = m.restriction(spec.name);
      if (const auto* ind = std::get_if<InducedByEffects>(&r)) {
        RestrictionReport er = effect_restriction_validate(ind->effects, s);
        for (const auto& p : er.problems) v.problems.push_back(p);
      }
    } catch (const Error& e) {
      v.problems.push_back(e.what());
    }
    v.valid = v.problems.empty();
    rep.objects.push_back(std::move(v));
  }
  for (const auto& st : m.states()) {
    bool inside = s.contains(st.point);
    rep.objects.push_back({"state", st.name, inside, inside ? std::vector<std::string>{} : std::vector<std::string>{"point lies outside the state space"}});
  }
  return rep;
}

}  // namespace gptr
