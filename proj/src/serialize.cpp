#include "uqsl2/serialize.hpp"

#include "uqsl2/expr.hpp"

#include <algorithm>

namespace uqsl2 {

json to_json(const Action& a) {
  return {{"alpha", a.alpha().str()}, {"beta", a.beta().str()}, {"e_x", a.e_x().str()},
          {"e_y", a.e_y().str()},     {"f_x", a.f_x().str()},   {"f_y", a.f_y().str()}};
}

namespace {

const std::string& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name) || !j.at(name).is_string())
    throw std::invalid_argument(std::string("action file: missing string field '") + name + "'");
  return j.at(name).get_ref<const std::string&>();
}

PlanePoly poly_field(const json& j, const char* name) {
  return evaluate(*parse_expression(field(j, name)));
}

}  // namespace

Action action_from_json(const json& j) {
  return {{parse_scalar(field(j, "alpha")), parse_scalar(field(j, "beta"))},
          poly_field(j, "e_x"),
          poly_field(j, "e_y"),
          poly_field(j, "f_x"),
          poly_field(j, "f_y")};
}

std::map<std::string, std::string> family_params(const SeriesFamily& f) {
  return std::visit(
      [](const auto& v) -> std::map<std::string, std::string> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, family::Trivial>)
          return {{"sign_x", v.sign_x > 0 ? "+" : "-"}, {"sign_y", v.sign_y > 0 ? "+" : "-"}};
        else if constexpr (std::is_same_v<T, family::Standard>)
          return {{"tau", v.tau.str()}};
        else if constexpr (std::is_same_v<T, family::EB0>)
          return {{"b0", v.b0.str()}};
        else if constexpr (std::is_same_v<T, family::FC0>)
          return {{"c0", v.c0.str()}};
        else if constexpr (std::is_same_v<T, family::EA0>)
          return {{"a0", v.a0.str()}, {"s", v.s.str()}, {"t", v.t.str()}};
        else
          return {{"d0", v.d0.str()}, {"s", v.s.str()}, {"t", v.t.str()}};
      },
      f);
}

std::string family_text(const SeriesFamily& f) {
  std::string s = tag_name(tag_of(f));
  s += "(";
  bool first = true;
  for (const auto& [k, v] : family_params(f)) {
    if (!first) s += ", ";
    first = false;
    s += k + "=" + v;
  }
  return s + ")";
}

json to_json(const SeriesFamily& f) {
  json params = json::object();
  for (const auto& [k, v] : family_params(f)) params[k] = v;
  return {{"tag", tag_name(tag_of(f))}, {"params", params}};
}

namespace {

int parse_sign(const std::string& name, const std::string& v) {
  if (v == "+" || v == "1" || v == "+1") return 1;
  if (v == "-" || v == "-1") return -1;
  throw InvalidParameter(name + " must be + or -, got '" + v + "'");
}

}  // namespace

SeriesFamily family_from_params(FamilyTag tag, const std::map<std::string, std::string>& params) {
  std::vector<std::string> allowed;
  switch (tag) {
    case FamilyTag::Trivial: allowed = {"sign_x", "sign_y"}; break;
    case FamilyTag::Standard: allowed = {"tau"}; break;
    case FamilyTag::EB0: allowed = {"b0"}; break;
    case FamilyTag::FC0: allowed = {"c0"}; break;
    case FamilyTag::EA0: allowed = {"a0", "s", "t"}; break;
    case FamilyTag::FD0: allowed = {"d0", "s", "t"}; break;
  }
  for (const auto& [k, v] : params)
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw InvalidParameter(std::string("unknown parameter '") + k + "' for " + tag_name(tag));
  auto scalar = [&](const std::string& name, long fallback) -> Scalar {
    auto it = params.find(name);
    return it == params.end() ? Scalar(fallback) : parse_scalar(it->second);
  };
  auto sign = [&](const std::string& name) {
    auto it = params.find(name);
    return it == params.end() ? 1 : parse_sign(name, it->second);
  };
  SeriesFamily f;
  switch (tag) {
    case FamilyTag::Trivial: f = family::Trivial{sign("sign_x"), sign("sign_y")}; break;
    case FamilyTag::Standard: f = family::Standard{scalar("tau", 1)}; break;
    case FamilyTag::EB0: f = family::EB0{scalar("b0", 1)}; break;
    case FamilyTag::FC0: f = family::FC0{scalar("c0", 1)}; break;
    case FamilyTag::EA0: f = family::EA0{scalar("a0", 1), scalar("s", 0), scalar("t", 0)}; break;
    case FamilyTag::FD0: f = family::FD0{scalar("d0", 1), scalar("s", 0), scalar("t", 0)}; break;
  }
  validate(f);
  return f;
}

json to_json(const AxiomReport& r, std::size_t max_failures) {
  json failures = json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) {
    const auto& f = r.failures[i];
    json j = {{"check", f.check},
              {"relation", f.relation},
              {"monomial", f.monomial.str()},
              {"residual", f.residual.str()}};
    if (f.right) j["right"] = f.right->str();
    failures.push_back(j);
  }
  return {{"passed", r.passed},
          {"max_degree", r.max_degree},
          {"checks", r.checks},
          {"failure_count", r.failures.size()},
          {"failures", failures}};
}

namespace {

json weight_json(const std::optional<WeightExponents>& w, bool alpha) {
  if (!w) return nullptr;
  return Scalar::q_pow(alpha ? w->alpha_exp : w->beta_exp).str();
}

}  // namespace

json to_json(const ClassificationSummary& s) {
  json l0 = json::array(), l1 = json::array(), ne = json::array(), em = json::array();
  for (const auto& p : s.level0_candidates) l0.push_back(p.str());
  for (const auto& p : s.level1_candidates) l1.push_back(p.str());
  for (const auto& e : s.nonempty)
    ne.push_back({{"label", e.label.str()},
                  {"family", tag_name(e.family)},
                  {"alpha", weight_json(e.forced, true)},
                  {"beta", weight_json(e.forced, false)}});
  for (const auto& [label, reason] : s.empty_labels) em.push_back({{"label", label.str()}, {"reason", reason}});
  return {{"total", s.total},
          {"empty", s.empty},
          {"nonempty", static_cast<int>(s.nonempty.size())},
          {"level0_candidates", l0},
          {"level1_candidates", l1},
          {"nonempty_series", ne},
          {"empty_series", em}};
}

json to_json(const SeriesLabel& label, const ClassificationOutcome& o) {
  using Kind = ClassificationOutcome::Kind;
  json j = {{"label", label.str()},
            {"kind", o.kind == Kind::Nonempty ? "nonempty" : (o.kind == Kind::Empty ? "empty" : "excluded")},
            {"reason", o.reason},
            {"family", o.family ? json(tag_name(*o.family)) : json(nullptr)},
            {"alpha", weight_json(o.forced, true)},
            {"beta", weight_json(o.forced, false)}};
  return j;
}

json to_json(const CompositionReport& r) {
  json summands = json::array(), certs = json::array();
  for (const auto& s : r.summands) {
    summands.push_back({{"basis", s.basis.str()},
                        {"type", summand_type_name(s.type)},
                        {"orientation", orientation_name(s.orientation)},
                        {"weight", s.weight.str()},
                        {"dim", s.dim ? json(*s.dim) : json(nullptr)},
                        {"quotient_weight", s.quotient_weight ? json(s.quotient_weight->str()) : json(nullptr)},
                        {"window", s.window},
                        {"graded", s.graded},
                        {"verified", s.verified},
                        {"evidence", s.evidence}});
  }
  for (const auto& c : r.certificates)
    certs.push_back({{"n", c.n}, {"statement", c.statement()}, {"scalar", c.scalar.str()}, {"valid", c.valid()}});
  return {{"family", to_json(r.family)},
          {"cutoff", r.cutoff},
          {"verma_window", r.verma_window},
          {"partition_ok", r.partition_ok},
          {"verified", r.verified()},
          {"summands", summands},
          {"certificates", certs}};
}

json to_json(const ClassicalAction& ca) {
  const CommPoly hx = ca.h(CommPoly::x()), hy = ca.h(CommPoly::y());
  return {{"h", {{"x", hx.str()}, {"y", hy.str()}}},
          {"e", {{"x", ca.e_x.str()}, {"y", ca.e_y.str()}}},
          {"f", {{"x", ca.f_x.str()}, {"y", ca.f_y.str()}}}};
}

json to_json(const NoLimit& n) { return {{"what", n.what}, {"value", n.value}, {"reason", n.reason}}; }

json to_json(const Sl2Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"relation", f.relation},
                        {"monomial", Monomial{f.mx, f.ny}.str()},
                        {"residual", f.residual.str()}});
  return {{"passed", r.passed}, {"max_degree", r.max_degree}, {"checks", r.checks}, {"failures", failures}};
}

json to_json(const IsoVerdict& v) {
  json cert = nullptr;
  if (v.certificate) cert = {{"theta", v.certificate->theta.str()}, {"omega", v.certificate->omega.str()}};
  return {{"isomorphic", v.isomorphic}, {"certificate", cert}, {"reason", v.reason}};
}

}  // namespace uqsl2
