#ifndef TERRACINI_IO_HPP
#define TERRACINI_IO_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "terracini/catalog.hpp"
#include "terracini/classify.hpp"
#include "terracini/curve.hpp"
#include "terracini/expr.hpp"
#include "terracini/report.hpp"
#include "terracini/variety.hpp"

namespace terracini {

using Json = nlohmann::ordered_json;

// A manifest names a variety (or a rational curve) in a field-independent
// way: a builtin, an explicit chart, or a combinator applied to nested
// manifests.
struct Manifest {
  enum class Kind { Builtin, Explicit, Cone, Project, Join, Curve };
  Kind kind = Kind::Builtin;
  std::string builtin;

  std::string name; // Explicit
  std::vector<std::string> params;
  std::vector<std::string> coords;

  unsigned k = 0;                                // Cone
  std::vector<std::vector<std::string>> center;  // Project
  std::vector<std::shared_ptr<Manifest>> children;

  unsigned degree = 0; // Curve
  std::vector<std::string> forms;

  bool is_curve() const { return kind == Kind::Curve; }
};

inline Manifest parse_manifest(const Json &j) {
  Manifest m;
  if (!j.is_object())
    throw Error("manifest: expected a JSON object");
  if (j.contains("builtin")) {
    m.kind = Manifest::Kind::Builtin;
    m.builtin = j.at("builtin").get<std::string>();
    return m;
  }
  if (j.contains("op")) {
    std::string op = j.at("op").get<std::string>();
    if (op == "cone") {
      m.kind = Manifest::Kind::Cone;
      m.k = j.at("k").get<unsigned>();
      m.children.push_back(
          std::make_shared<Manifest>(parse_manifest(j.at("of"))));
    } else if (op == "project") {
      m.kind = Manifest::Kind::Project;
      for (const Json &row : j.at("center"))
        m.center.push_back(row.get<std::vector<std::string>>());
      m.children.push_back(
          std::make_shared<Manifest>(parse_manifest(j.at("of"))));
    } else if (op == "join") {
      m.kind = Manifest::Kind::Join;
      const Json &of = j.at("of");
      if (!of.is_array() || of.size() != 2)
        throw Error("manifest: join needs exactly two operands");
      m.children.push_back(std::make_shared<Manifest>(parse_manifest(of[0])));
      m.children.push_back(std::make_shared<Manifest>(parse_manifest(of[1])));
    } else if (op == "curve") {
      m.kind = Manifest::Kind::Curve;
      m.degree = j.at("degree").get<unsigned>();
      m.forms = j.at("forms").get<std::vector<std::string>>();
      if (m.forms.size() != 5)
        throw Error("manifest: a curve needs exactly 5 forms");
    } else {
      throw Error("manifest: unknown op '" + op + "'");
    }
    return m;
  }
  if (j.contains("degree") && j.contains("forms")) {
    m.kind = Manifest::Kind::Curve;
    m.degree = j.at("degree").get<unsigned>();
    m.forms = j.at("forms").get<std::vector<std::string>>();
    if (m.forms.size() != 5)
      throw Error("manifest: a curve needs exactly 5 forms");
    return m;
  }
  m.kind = Manifest::Kind::Explicit;
  m.name = j.at("name").get<std::string>();
  m.params = j.at("params").get<std::vector<std::string>>();
  m.coords = j.at("coords").get<std::vector<std::string>>();
  if (m.params.empty() || m.coords.empty())
    throw Error("manifest: empty parameter or coordinate list");
  return m;
}

inline Json emit_manifest(const Manifest &m) {
  Json j;
  switch (m.kind) {
  case Manifest::Kind::Builtin:
    j["builtin"] = m.builtin;
    break;
  case Manifest::Kind::Explicit:
    j["name"] = m.name;
    j["params"] = m.params;
    j["coords"] = m.coords;
    break;
  case Manifest::Kind::Cone:
    j["op"] = "cone";
    j["k"] = m.k;
    j["of"] = emit_manifest(*m.children[0]);
    break;
  case Manifest::Kind::Project:
    j["op"] = "project";
    j["center"] = m.center;
    j["of"] = emit_manifest(*m.children[0]);
    break;
  case Manifest::Kind::Join:
    j["op"] = "join";
    j["of"] = Json::array(
        {emit_manifest(*m.children[0]), emit_manifest(*m.children[1])});
    break;
  case Manifest::Kind::Curve:
    j["op"] = "curve";
    j["degree"] = m.degree;
    j["forms"] = m.forms;
    break;
  }
  return j;
}

template <class F>
ParamVariety<typename F::Scalar> build_variety(const Manifest &m,
                                               const F &field) {
  using K = typename F::Scalar;
  switch (m.kind) {
  case Manifest::Kind::Builtin: {
    VarietyRecipe recipe = builtin_recipe(m.builtin);
    if constexpr (std::is_same_v<F, FpField>)
      return recipe.build_fp(field);
    else
      return recipe.build_rat(field);
  }
  case Manifest::Kind::Explicit: {
    ParamVariety<K> X;
    X.name = m.name;
    X.n = m.params.size();
    X.r = m.coords.size() - 1;
    for (const std::string &src : m.coords)
      X.coords.push_back(parse_poly(src, m.params, field));
    bool all_zero = true;
    for (const MPoly<K> &c : X.coords)
      all_zero = all_zero && c.is_zero();
    if (all_zero)
      throw Error("manifest: all coordinates are zero");
    return X;
  }
  case Manifest::Kind::Cone:
    return cone_over(build_variety(*m.children[0], field), m.k);
  case Manifest::Kind::Project: {
    ParamVariety<K> base = build_variety(*m.children[0], field);
    if (m.center.empty())
      return base;
    Matrix<K> center(m.center.size(), base.r + 1, field.zero());
    for (std::size_t i = 0; i < m.center.size(); ++i) {
      if (m.center[i].size() != base.r + 1)
        throw Error("manifest: center row has wrong length");
      for (std::size_t j = 0; j <= base.r; ++j)
        center(i, j) =
            parse_poly(m.center[i][j], {}, field).eval(std::vector<K>{});
    }
    return project(base, center);
  }
  case Manifest::Kind::Join: {
    ParamVariety<K> a = build_variety(*m.children[0], field);
    ParamVariety<K> b = build_variety(*m.children[1], field);
    return join(a, b);
  }
  case Manifest::Kind::Curve:
    throw Error("manifest: this manifest is a curve, not a variety");
  }
  throw Error("manifest: unreachable kind");
}

inline RationalCurveP4 build_curve(const Manifest &m) {
  if (!m.is_curve())
    throw Error("manifest: not a curve manifest");
  RatField field;
  std::array<UPoly<Rat>, 5> forms{UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                  UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                  UPoly<Rat>(Rat(0))};
  for (int i = 0; i < 5; ++i) {
    MPoly<Rat> p = parse_poly(m.forms[i], {"t"}, field);
    int deg = p.degree();
    std::vector<Rat> dense(static_cast<std::size_t>(std::max(deg, 0)) + 1,
                           Rat(0));
    for (const auto &[e, c] : p.terms())
      dense[e[0]] = c;
    forms[i] = UPoly<Rat>(dense, Rat(0));
  }
  return make_curve(m.degree, std::move(forms));
}

inline VarietyRecipe manifest_recipe(const Manifest &m) {
  VarietyRecipe r;
  r.build_fp = [m](const FpField &f) { return build_variety(m, f); };
  r.build_rat = [m](const RatField &f) { return build_variety(m, f); };
  return r;
}

// --- report serialization -------------------------------------------------

inline Json optional_int(int v) { return v < 0 ? Json(nullptr) : Json(v); }

inline Json report_to_json(const InvariantReport &rep, const Json &input) {
  Json j;
  j["version"] = "1.0";
  j["input"] = input;
  j["field"] = rep.field_name;
  j["seeds"] = Json::array({rep.seed});
  Json primes = Json::array();
  for (std::uint64_t p : rep.primes_used)
    primes.push_back(p);
  j["primes"] = primes;
  Json inv;
  inv["name"] = rep.input_name;
  inv["n"] = rep.n;
  inv["r"] = rep.r;
  inv["s"] = rep.s;
  inv["sigma"] = rep.sigma;
  inv["delta"] = rep.delta;
  inv["f"] = rep.f;
  inv["t"] = optional_int(rep.t);
  inv["d"] = optional_int(rep.d);
  inv["ii_dim"] = rep.ii_dim;
  inv["gamma"] = optional_int(rep.gamma);
  inv["epsilon"] = optional_int(rep.epsilon);
  inv["theta"] = optional_int(rep.theta_formula);
  inv["theta_direct"] = optional_int(rep.theta_direct);
  inv["species"] = optional_int(rep.species);
  inv["defective"] = rep.defective;
  inv["is_cone"] = rep.is_cone;
  inv["vertex_dim"] = rep.vertex_dim;
  inv["trials"] = rep.trials;
  Json tags = Json::array();
  for (const std::string &t : rep.tags)
    tags.push_back(t);
  inv["tags"] = tags;
  j["invariants"] = inv;
  Json checks = Json::array();
  for (const auto &[name, ok] : rep.checks)
    checks.push_back(Json{{"name", name}, {"status", ok ? "pass" : "fail"}});
  j["checks"] = checks;
  return j;
}

inline Json classification_to_json(const CaseMatch &match) {
  Json j;
  j["confidence"] = match.confidence;
  Json cases = Json::array();
  for (const CaseHit &hit : match.cases) {
    Json c;
    c["label"] = hit.label;
    c["description"] = hit.description;
    if (!hit.note.empty())
      c["note"] = hit.note;
    cases.push_back(c);
  }
  j["cases"] = cases;
  j["rationale"] = match.rationale;
  return j;
}

inline Json curve_report_to_json(const CurveRankReport &rep,
                                 const Json &input) {
  Json j;
  j["version"] = "1.0";
  j["input"] = input;
  j["field"] = "rational";
  j["seeds"] = Json::array();
  j["primes"] = Json::array();
  Json inv;
  inv["d"] = rep.d;
  inv["T"] = rep.T;
  inv["sums"] = rep.S;
  inv["n1"] = rep.n1;
  inv["n2"] = rep.n2;
  inv["n3"] = rep.n3;
  j["invariants"] = inv;
  Json checks = Json::array();
  for (const auto &[name, ok] : rep.checks)
    checks.push_back(Json{{"name", name}, {"status", ok ? "pass" : "fail"}});
  j["checks"] = checks;
  return j;
}

// Manifest JSON for a catalog entry or structural builtin: the variety is
// built over Q and its chart re-emitted as expression strings.
inline Json emit_builtin_chart(const std::string &name) {
  RatField field;
  VarietyRecipe recipe = builtin_recipe(name);
  ParamVariety<Rat> X = recipe.build_rat(field);
  Json j;
  j["name"] = X.name;
  j["params"] = X.vars();
  Json coords = Json::array();
  for (const MPoly<Rat> &c : X.coords)
    coords.push_back(c.str());
  j["coords"] = coords;
  return j;
}

} // namespace terracini

#endif // TERRACINI_IO_HPP
