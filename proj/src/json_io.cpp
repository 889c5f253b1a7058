////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of stummel, a numerical analyzer for Stummel classes,   //
//  Morrey spaces and Lorentz spaces.                                         //
//                                                                            //
//  Copyright 2026 stummel developers                                         //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "stummel/json_io.hpp"
#include "stummel/errors.hpp"
#include <cmath>
#include <limits>

namespace stummel {

  namespace {
    constexpr double kInf = std::numeric_limits<double>::infinity();

    const Json& field(const Json& j, const char* key)
    {
      if (!j.is_object())
        fail(ErrorCode::Parse, std::string("expected an object holding '") + key + "'");
      auto it = j.find(key);
      if (it == j.end())
        fail(ErrorCode::Parse, std::string("missing field '") + key + "'");
      return *it;
    }

    double num(const Json& j, const char* key) { return numberFromJson(field(j, key), key); }

    double numOr(const Json& j, const char* key, double fallback)
    {
      auto it = j.find(key);
      return it == j.end() ? fallback : numberFromJson(*it, key);
    }

    int integer(const Json& j, const char* key)
    {
      const Json& v = field(j, key);
      if (!v.is_number_integer())
        fail(ErrorCode::Parse, std::string("field '") + key + "' must be an integer");
      return v.get<int>();
    }

    std::string kindOf(const Json& j)
    {
      const Json& k = field(j, "kind");
      if (!k.is_string())
        fail(ErrorCode::Parse, "field 'kind' must be a string");
      return k.get<std::string>();
    }

    Json optNumber(const std::optional<double>& v) { return v ? jsonNumber(*v) : Json(nullptr); }
  }

  Json jsonNumber(double v)
  {
    if (std::isinf(v))
      return v > 0 ? "inf" : "-inf";
    return v;
  }

  double numberFromJson(const Json& j, const char* what)
  {
    if (j.is_number())
      return j.get<double>();
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      if (s == "inf" || s == "infinite")
        return kInf;
      if (s == "-inf")
        return -kInf;
    }
    fail(ErrorCode::Parse, std::string("field '") + what + "' must be a number");
  }

  Json jsonExtended(const Extended& e)
  {
    if (e.isInfinite())
      return "infinite";
    return e.value();
  }

  Json toJson(const ScaleFunction& s)
  {
    Json j;
    switch (s.kind) {
    case ScaleKind::PurePower:
      j["kind"] = "purepower";
      j["a"] = s.a;
      j["scale_const"] = s.scaleConst;
      break;
    case ScaleKind::PowerLog:
      j["kind"] = "powerlog";
      j["a"] = s.a;
      j["b"] = s.b;
      j["t0"] = s.t0;
      j["scale_const"] = s.scaleConst;
      break;
    case ScaleKind::Tabulated: {
      j["kind"] = "tabulated";
      Json pts = Json::array();
      for (const auto& [t, v] : s.table)
        pts.push_back(Json::array({ t, v }));
      j["points"] = pts;
      break;
    }
    }
    return j;
  }

  ScaleFunction scaleFromJson(const Json& j)
  {
    const std::string kind = kindOf(j);
    ScaleFunction s;
    if (kind == "purepower")
      s = ScaleFunction::purePower(num(j, "a"), numOr(j, "scale_const", 1.0));
    else if (kind == "powerlog")
      s = ScaleFunction::powerLog(num(j, "a"), numOr(j, "b", 0.0), numOr(j, "t0", ScaleFunction::kDefaultT0),
                                  numOr(j, "scale_const", 1.0));
    else if (kind == "tabulated") {
      const Json& pts = field(j, "points");
      if (!pts.is_array())
        fail(ErrorCode::Parse, "'points' must be an array of [t, psi] pairs");
      std::vector<std::pair<double, double>> table;
      for (const Json& p : pts) {
        if (!p.is_array() || p.size() != 2)
          fail(ErrorCode::Parse, "'points' must be an array of [t, psi] pairs");
        table.emplace_back(numberFromJson(p[0], "t"), numberFromJson(p[1], "psi"));
      }
      s = ScaleFunction::tabulated(std::move(table));
    } else
      fail(ErrorCode::Parse, "unknown scale kind '" + kind + "'");
    s.validate();
    return s;
  }

  Json toJson(const TestFunction& f)
  {
    Json j;
    j["kind"] = functionKindName(f.kind);
    j["n"] = f.n;
    switch (f.kind) {
    case FunctionKind::RadialPowerLog:
      j["g"] = f.g;
      j["h"] = f.h;
      j["R"] = jsonNumber(f.R);
      j["p_root"] = f.pRoot;
      break;
    case FunctionKind::TailPower:
      j["g"] = f.g;
      j["p_root"] = f.pRoot;
      break;
    case FunctionKind::BumpSum:
      j["alpha"] = f.alpha;
      j["K"] = f.K;
      j["p_root"] = f.pRoot;
      break;
    case FunctionKind::Indicator:
      j["R"] = jsonNumber(f.R);
      break;
    case FunctionKind::Zero:
      break;
    }
    return j;
  }

  TestFunction functionFromJson(const Json& j)
  {
    const std::string kind = kindOf(j);
    const int n = integer(j, "n");
    if (kind == "radial_powerlog")
      return TestFunction::radialPowerLog(n, num(j, "g"), numOr(j, "h", 0.0), numOr(j, "R", kInf),
                                          numOr(j, "p_root", 1.0));
    if (kind == "tail_power")
      return TestFunction::tailPower(n, num(j, "g"), numOr(j, "p_root", 1.0));
    if (kind == "bumpsum")
      return TestFunction::bumpSum(n, num(j, "alpha"), integer(j, "K"), numOr(j, "p_root", 1.0));
    if (kind == "indicator")
      return TestFunction::indicator(n, num(j, "R"));
    if (kind == "zero")
      return TestFunction::zero(n);
    fail(ErrorCode::Parse, "unknown function kind '" + kind + "'");
  }

  Json toJson(const SpaceSpec& s)
  {
    Json j;
    j["family"] = spaceFamilyName(s.family);
    switch (s.family) {
    case SpaceFamily::Morrey:
    case SpaceFamily::WeakMorrey:
      j["p"] = s.p;
      if (s.lambda)
        j["lambda"] = *s.lambda;
      else
        j["scale"] = toJson(s.scale);
      break;
    case SpaceFamily::Lorentz:
      j["kappa"] = s.p;
      j["p"] = jsonNumber(s.secondary);
      break;
    case SpaceFamily::Lebesgue:
    case SpaceFamily::WeakLebesgue:
      j["p"] = jsonNumber(s.p);
      break;
    }
    return j;
  }

  SpaceSpec spaceFromJson(const Json& j)
  {
    const Json& fam = field(j, "family");
    if (!fam.is_string())
      fail(ErrorCode::Parse, "field 'family' must be a string");
    const std::string f = fam.get<std::string>();
    if (f == "morrey" || f == "weak_morrey") {
      const bool weak = f == "weak_morrey";
      const double p = num(j, "p");
      const bool hasLambda = j.contains("lambda");
      if (hasLambda == j.contains("scale"))
        fail(ErrorCode::Parse, "a Morrey space needs exactly one of 'lambda' and 'scale'");
      if (hasLambda)
        return weak ? SpaceSpec::classicalWeakMorrey(p, num(j, "lambda")) : SpaceSpec::classicalMorrey(p, num(j, "lambda"));
      const ScaleFunction psi = scaleFromJson(j["scale"]);
      return weak ? SpaceSpec::generalizedWeakMorrey(p, psi) : SpaceSpec::generalizedMorrey(p, psi);
    }
    if (f == "lorentz")
      return SpaceSpec::lorentz(num(j, "kappa"), num(j, "p"));
    if (f == "lebesgue")
      return SpaceSpec::lebesgue(num(j, "p"));
    if (f == "weak_lebesgue")
      return SpaceSpec::weakLebesgue(num(j, "p"));
    fail(ErrorCode::Parse, "unknown space family '" + f + "'");
  }

  Json toJson(const ConditionReport& c)
  {
    Json j;
    j["n"] = c.n;
    j["method"] = c.method == CheckMethod::Analytic ? "analytic" : "sampled";
    j["integrable"] = verdictName(c.integrable);
    j["doubling"] = { { "status", verdictName(c.doubling) }, { "A1", optNumber(c.A1) } };
    j["almost_decreasing"] = { { "status", verdictName(c.almostDecreasing) }, { "A2", optNumber(c.A2) } };
    j["right_doubling"] = { { "status", verdictName(c.rightDoubling) }, { "A3", optNumber(c.A3) } };
    j["note"] = c.note;
    return j;
  }

  Json toJson(const NormReport& r)
  {
    Json j;
    j["space"] = spaceFamilyName(r.spec.family);
    j["params"] = toJson(r.spec);
    j["value"] = jsonExtended(r.value);
    Json w;
    w["center"] = optNumber(r.witness.center);
    w["r"] = optNumber(r.witness.r);
    w["t"] = optNumber(r.witness.t);
    if (!r.witness.note.empty())
      w["note"] = r.witness.note;
    j["witness"] = w;
    return j;
  }

  Json toJson(const ModulusCurve& c)
  {
    Json j;
    j["function"] = toJson(c.f);
    j["p"] = c.p;
    j["scale"] = toJson(c.psi);
    Json pts = Json::array();
    for (std::size_t i = 0; i < c.r.size(); ++i)
      pts.push_back({ { "r", c.r[i] },
                      { "eta", jsonExtended(c.values[i]) },
                      { "status", c.values[i].isFinite() ? "finite" : "divergent" } });
    j["points"] = pts;
    return j;
  }

  Json toJson(const MembershipVerdict& v)
  {
    Json j;
    j["space"] = v.space;
    j["status"] = membershipName(v.status);
    j["method"] = v.method;
    j["limit_estimate"] = optNumber(v.limitEstimate);
    j["lower_bound"] = optNumber(v.lowerBound);
    j["divergent_at"] = optNumber(v.divergentAt);
    return j;
  }

  Json toJson(const Classification& c)
  {
    Json j;
    j["function"] = toJson(c.curve.f);
    j["p"] = c.curve.p;
    j["scale"] = toJson(c.curve.psi);
    j["stummel"] = toJson(c.stummel);
    j["bounded"] = toJson(c.bounded);
    return j;
  }

  Json toJson(const HypothesisChecklist& c)
  {
    Json j;
    j["theorem"] = theoremIdName(c.theorem);
    j["statement"] = c.statement;
    Json items = Json::array();
    for (const auto& it : c.items)
      items.push_back({ { "description", it.description },
                        { "status", verdictName(it.status) },
                        { "certificate", optNumber(it.certificate) } });
    j["items"] = items;
    j["conclusion"] = conclusionName(c.conclusion);
    if (!c.note.empty())
      j["note"] = c.note;
    return j;
  }

  Json toJson(const ClaimRow& r)
  {
    Json j;
    j["claim_id"] = r.claimId;
    j["paper_anchor"] = r.anchor;
    Json params = Json::object();
    for (const auto& [k, v] : r.params)
      params[k] = jsonNumber(v);
    j["params"] = params;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["agrees"] = r.agrees;
    j["flagged"] = r.flagged;
    j["note"] = r.note;
    return j;
  }

  Json toJson(const std::vector<ClaimRow>& rows)
  {
    Json a = Json::array();
    for (const auto& r : rows)
      a.push_back(toJson(r));
    return a;
  }

}
