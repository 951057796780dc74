#include "wfree/serialize.hpp"

#include <stdexcept>

namespace wfree {

namespace {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Beta: return "beta";
    case Kind::Gamma: return "gamma";
    case Kind::Phi: return "phi";
  }
  return "?";
}

Kind kind_from(const std::string& s) {
  if (s == "beta") return Kind::Beta;
  if (s == "gamma") return Kind::Gamma;
  if (s == "phi") return Kind::Phi;
  throw std::invalid_argument("unknown generator kind: " + s);
}

Json wgen_json(const WGen& g) {
  if (g.is_w) return Json{{"gen", "W"}, {"m", g.x}, {"deriv", g.k}};
  return Json{{"gen", "Om"}, {"a", g.x}, {"b", g.y}, {"deriv", g.k}};
}

WGen wgen_from(const Json& j) {
  const std::string gen = j.at("gen");
  if (gen == "W") return WGen::W(j.at("m"), j.at("deriv"));
  if (gen == "Om") return WGen::Om(j.at("a"), j.at("b"), j.at("deriv"));
  throw std::invalid_argument("unknown abstract generator: " + gen);
}

const char* group_name(Group g) {
  switch (g) {
    case Group::Sp: return "sp";
    case Group::O: return "o";
    case Group::Osp: return "osp";
  }
  return "?";
}

}  // namespace

Json to_json(const VPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json factors = Json::array();
    for (GenSym g : m)
      factors.push_back({{"kind", kind_name(g.kind())}, {"color", g.color()}, {"deriv", g.deriv()}});
    out.push_back({{"coeff", to_string(c)}, {"factors", factors}});
  }
  return out;
}

Json to_json(const WPoly& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) {
    Json factors = Json::array();
    for (const WGen& g : w) factors.push_back(wgen_json(g));
    out.push_back({{"coeff", to_string(c)}, {"factors", factors}});
  }
  return out;
}

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json pairs = Json::array();
    for (auto [a, b] : m) pairs.push_back({a, b});
    out.push_back({{"coeff", to_string(c)}, {"pairs", pairs}});
  }
  return out;
}

Json to_json(const OpeTable& t) {
  Json out = Json::object();
  for (const auto& [n, v] : t) out[std::to_string(n)] = {{"text", to_text(v)}, {"terms", to_json(v)}};
  return out;
}

Json to_json(const RelationResult& r) {
  Json by = Json::object();
  for (const auto& [d, p] : r.by_degree) by[std::to_string(d)] = to_json(p);
  Json j;
  j["family"] = group_name(r.family.group);
  j["n"] = r.family.n;
  j["indices"] = r.indices;
  j["weight"] = r.weight;
  j["classical"] = to_json(r.classical);
  j["by_degree"] = by;
  j["remainder"] = r.remainder ? Json(to_string(*r.remainder)) : Json(nullptr);
  j["kernel_ok"] = r.kernel_ok;
  j["passes"] = r.passes;
  return j;
}

Json to_json(const Decoupling& d) {
  return Json{{"family", group_name(d.family.group)},
              {"n", d.family.n},
              {"m", d.m},
              {"text", to_text(d.expression)},
              {"expression", to_json(d.expression)}};
}

VPoly vpoly_from_json(const Json& j) {
  VPoly p;
  for (const auto& t : j) {
    Mono m;
    for (const auto& f : t.at("factors"))
      m.push_back(GenSym(kind_from(f.at("kind")), f.at("color"), f.at("deriv")));
    Rational c = parse_rational(t.at("coeff").get<std::string>());
    int s = canonicalize(m);
    if (s) p.add_term(m, s * c);
  }
  return p;
}

WPoly wpoly_from_json(const Json& j) {
  WPoly p;
  for (const auto& t : j) {
    Word w;
    for (const auto& f : t.at("factors")) w.push_back(wgen_from(f));
    p.add_term(w, parse_rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

QPoly qpoly_from_json(const Json& j) {
  QPoly p;
  for (const auto& t : j) {
    QPoly m(parse_rational(t.at("coeff").get<std::string>()));
    for (const auto& ab : t.at("pairs")) m = m * QPoly::Q(ab.at(0), ab.at(1));
    p += m;
  }
  return p;
}

RelationResult relation_from_json(const Json& j) {
  RelationResult r;
  r.family = parse_family(j.at("family"), j.at("n"));
  r.indices = j.at("indices");
  r.weight = j.at("weight");
  r.classical = qpoly_from_json(j.at("classical"));
  for (const auto& [k, v] : j.at("by_degree").items()) {
    WPoly p = wpoly_from_json(v);
    r.relation += p;
    r.by_degree.emplace(std::stoi(k), std::move(p));
  }
  if (!j.at("remainder").is_null())
    r.remainder = parse_rational(j.at("remainder").get<std::string>());
  r.kernel_ok = j.at("kernel_ok");
  r.passes = j.value("passes", 0);
  return r;
}

Decoupling decoupling_from_json(const Json& j) {
  return Decoupling{parse_family(j.at("family"), j.at("n")), j.at("m"),
                    wpoly_from_json(j.at("expression"))};
}

}  // namespace wfree
