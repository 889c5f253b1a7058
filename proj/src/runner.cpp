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

#include "stummel/runner.hpp"
#include "stummel/errors.hpp"
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace stummel {

  namespace {
    const std::set<std::string> kCommands{ "psi-check", "modulus", "norm", "classify", "inclusion", "verify-paper" };

    const std::set<std::string> kKeys{ "command", "function", "space", "theorem", "scale",  "psi",   "scale1",
                                       "psi1",    "scale2",   "psi2",  "p",       "p1",     "p2",    "alpha",
                                       "beta",    "lambda",   "kappa", "sigma",   "n",      "grid",  "seed",
                                       "output" };

    std::optional<double> optNum(const Json& j, const char* key)
    {
      auto it = j.find(key);
      if (it == j.end() || it->is_null())
        return std::nullopt;
      return numberFromJson(*it, key);
    }

    std::optional<ScaleFunction> optScale(const Json& j, const char* a, const char* b)
    {
      if (j.contains(a) && j.contains(b))
        fail(ErrorCode::Parse, std::string("give only one of '") + a + "' and '" + b + "'");
      for (const char* k : { a, b })
        if (j.contains(k))
          return scaleFromJson(j[k]);
      return std::nullopt;
    }

    template <class T>
    T need(const std::optional<T>& v, const char* name, const std::string& cmd)
    {
      if (!v)
        fail(ErrorCode::MissingParameter, cmd + " needs '" + name + "'");
      return *v;
    }

    std::string csvField(const std::string& s)
    {
      if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
      std::string out = "\"";
      for (char c : s) {
        if (c == '"')
          out += '"';
        out += c;
      }
      return out + "\"";
    }

    std::string optText(const std::optional<double>& v) { return v ? formatDouble(*v) : std::string(); }

    std::string dump(const Json& j) { return j.dump(2) + "\n"; }

    RunResult psiCheck(const RunConfig& c)
    {
      const ScaleFunction psi = need(c.params.psi, "scale", c.command);
      const int n = c.params.n.value_or(1);
      const ConditionReport rep = checkConditions(psi, n);
      const Extended I = integralScaleOverT(psi, 1.0);
      if (c.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "condition,status,constant\n";
        os << "integrable," << verdictName(rep.integrable) << "," << (I.isFinite() ? formatDouble(I.value()) : "inf") << "\n";
        os << "doubling," << verdictName(rep.doubling) << "," << optText(rep.A1) << "\n";
        os << "almost_decreasing," << verdictName(rep.almostDecreasing) << "," << optText(rep.A2) << "\n";
        os << "right_doubling," << verdictName(rep.rightDoubling) << "," << optText(rep.A3) << "\n";
        return { os.str(), 0 };
      }
      Json j;
      j["scale"] = toJson(psi);
      j["conditions"] = toJson(rep);
      j["integral_0_1"] = jsonExtended(I);
      return { dump(j), 0 };
    }

    RunResult modulus(const RunConfig& c)
    {
      const TestFunction f = need(c.function, "function", c.command);
      const double p = need(c.params.p, "p", c.command);
      const ScaleFunction psi = need(c.params.psi, "scale", c.command);
      const ModulusCurve curve = modulusCurve(f, p, psi, c.grid.radii(), EtaOptions{ c.seed });
      if (c.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "r,eta,status\n";
        for (std::size_t i = 0; i < curve.r.size(); ++i)
          os << formatDouble(curve.r[i]) << "," << curve.values[i].str() << ","
             << (curve.values[i].isFinite() ? "finite" : "divergent") << "\n";
        return { os.str(), 0 };
      }
      Json j = toJson(curve);
      j["seed"] = c.seed;
      return { dump(j), 0 };
    }

    RunResult norm(const RunConfig& c)
    {
      const TestFunction f = need(c.function, "function", c.command);
      const SpaceSpec s = need(c.space, "space", c.command);
      const NormReport r = computeNorm(f, s);
      if (c.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "space,value,center,r,t\n";
        os << spaceFamilyName(s.family) << "," << r.value.str() << "," << optText(r.witness.center) << ","
           << optText(r.witness.r) << "," << optText(r.witness.t) << "\n";
        return { os.str(), 0 };
      }
      Json j = toJson(r);
      j["function"] = toJson(f);
      return { dump(j), 0 };
    }

    RunResult classifyCmd(const RunConfig& c)
    {
      const TestFunction f = need(c.function, "function", c.command);
      const double p = need(c.params.p, "p", c.command);
      const ScaleFunction psi = need(c.params.psi, "scale", c.command);
      const Classification cl = classify(f, p, psi, c.grid.radii(), EtaOptions{ c.seed });
      if (c.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "space,status,method,limit_estimate,lower_bound,divergent_at\n";
        for (const MembershipVerdict* v : { &cl.stummel, &cl.bounded })
          os << v->space << "," << membershipName(v->status) << "," << v->method << "," << optText(v->limitEstimate)
             << "," << optText(v->lowerBound) << "," << optText(v->divergentAt) << "\n";
        return { os.str(), 0 };
      }
      Json j = toJson(cl);
      j["seed"] = c.seed;
      return { dump(j), 0 };
    }

    RunResult inclusion(const RunConfig& c)
    {
      const std::string name = need(c.theorem, "theorem", c.command);
      std::vector<HypothesisChecklist> lists;
      Json errors = Json::array();
      if (name == "all") {
        for (TheoremId t : allTheorems()) {
          try {
            lists.push_back(checkTheorem(t, c.params));
          } catch (const Error& e) {
            if (e.code() != ErrorCode::MissingParameter)
              throw;
            errors.push_back({ { "theorem", theoremIdName(t) }, { "conclusion", "missing_parameter" }, { "error", e.what() } });
          }
        }
      } else {
        const auto id = parseTheoremId(name);
        if (!id)
          fail(ErrorCode::Parse, "unknown theorem '" + name + "'");
        lists.push_back(checkTheorem(*id, c.params));
      }
      std::optional<BoundReport> bound;
      if (name == "Thm4_1" && c.function)
        bound = verifyQuantitativeBound(*c.function, *c.params.p1, *c.params.p2, *c.params.psi1, *c.params.psi2,
                                        c.grid.radii(), EtaOptions{ c.seed });
      if (c.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "theorem,item,status,certificate,conclusion\n";
        for (const auto& l : lists)
          for (const auto& it : l.items)
            os << theoremIdName(l.theorem) << "," << csvField(it.description) << "," << verdictName(it.status) << ","
               << optText(it.certificate) << "," << conclusionName(l.conclusion) << "\n";
        for (const auto& e : errors)
          os << e["theorem"].get<std::string>() << ",,,,missing_parameter\n";
        return { os.str(), 0 };
      }
      Json j;
      Json arr = Json::array();
      for (const auto& l : lists)
        arr.push_back(toJson(l));
      for (const auto& e : errors)
        arr.push_back(e);
      j["checklists"] = arr;
      if (bound) {
        Json b;
        b["max_ratio"] = jsonNumber(bound->maxRatio);
        b["at_radius"] = bound->atRadius;
        b["refined_max_ratio"] = jsonNumber(bound->refinedMaxRatio);
        b["relative_change"] = jsonNumber(bound->relativeChange);
        b["stable"] = bound->stable;
        b["norm"] = jsonExtended(bound->norm);
        j["quantitative_bound"] = b;
      }
      return { dump(j), 0 };
    }

    RunResult verify(const RunConfig& c)
    {
      const std::vector<ClaimRow> rows = verifyPaper(EtaOptions{ c.seed });
      const int code = allAgree(rows) ? 0 : 1;
      if (c.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "claim_id,paper_anchor,expected,computed,agrees,flagged,note\n";
        for (const auto& r : rows)
          os << csvField(r.claimId) << "," << csvField(r.anchor) << "," << csvField(r.expected) << ","
             << csvField(r.computed) << "," << (r.agrees ? "true" : "false") << "," << (r.flagged ? "true" : "false")
             << "," << csvField(r.note) << "\n";
        return { os.str(), code };
      }
      return { dump(toJson(rows)), code };
    }
  }

  void GridSpec::validate() const
  {
    require(rMin > 0.0 && std::isfinite(rMax), "grid radii must be positive and finite");
    require(rMin < rMax, "grid needs r_min < r_max");
    require(points >= 8, "grid needs at least 8 points");
  }

  std::vector<double> GridSpec::radii() const
  {
    validate();
    return logGrid(rMin, rMax, points);
  }

  GridSpec parseGrid(std::string_view s)
  {
    GridSpec g;
    double v[3];
    for (int i = 0; i < 3; ++i) {
      const auto comma = s.find(',');
      if ((i < 2) == (comma == std::string_view::npos))
        fail(ErrorCode::Parse, "grid must read r_min,r_max,points");
      const std::string_view part = s.substr(0, comma);
      const auto res = std::from_chars(part.data(), part.data() + part.size(), v[i]);
      if (res.ec != std::errc() || res.ptr != part.data() + part.size())
        fail(ErrorCode::Parse, "grid must read r_min,r_max,points");
      if (i < 2)
        s.remove_prefix(comma + 1);
    }
    if (v[2] != std::floor(v[2]))
      fail(ErrorCode::Parse, "grid point count must be an integer");
    g.rMin = v[0];
    g.rMax = v[1];
    g.points = int(v[2]);
    g.validate();
    return g;
  }

  RunConfig parseRunConfig(const Json& j)
  {
    if (!j.is_object())
      fail(ErrorCode::Parse, "config must be a JSON object");
    for (const auto& [k, v] : j.items())
      if (!kKeys.count(k))
        fail(ErrorCode::Parse, "unknown config key '" + k + "'");
    RunConfig c;
    if (!j.contains("command") || !j["command"].is_string())
      fail(ErrorCode::Parse, "config needs a string 'command'");
    c.command = j["command"].get<std::string>();
    if (!kCommands.count(c.command))
      fail(ErrorCode::Parse, "unknown command '" + c.command + "'");
    if (j.contains("function"))
      c.function = functionFromJson(j["function"]);
    if (j.contains("space"))
      c.space = spaceFromJson(j["space"]);
    if (j.contains("theorem")) {
      if (!j["theorem"].is_string())
        fail(ErrorCode::Parse, "'theorem' must be a string");
      c.theorem = j["theorem"].get<std::string>();
    }
    c.params.psi = optScale(j, "scale", "psi");
    c.params.psi1 = optScale(j, "scale1", "psi1");
    c.params.psi2 = optScale(j, "scale2", "psi2");
    c.params.p = optNum(j, "p");
    c.params.p1 = optNum(j, "p1");
    c.params.p2 = optNum(j, "p2");
    c.params.alpha = optNum(j, "alpha");
    c.params.beta = optNum(j, "beta");
    c.params.lambda = optNum(j, "lambda");
    c.params.kappa = optNum(j, "kappa");
    c.params.sigma = optNum(j, "sigma");
    if (j.contains("n")) {
      if (!j["n"].is_number_integer())
        fail(ErrorCode::Parse, "'n' must be an integer");
      c.params.n = j["n"].get<int>();
      require(*c.params.n >= 1, "n must be a positive integer");
    } else if (c.function)
      c.params.n = c.function->n;
    if (c.function && c.params.n != c.function->n)
      fail(ErrorCode::InvalidArgument, "'n' does not match the function's dimension");
    if (j.contains("grid")) {
      const Json& g = j["grid"];
      if (g.is_string())
        c.grid = parseGrid(g.get<std::string>());
      else {
        c.grid.rMin = numberFromJson(g.value("r_min", Json(c.grid.rMin)), "r_min");
        c.grid.rMax = numberFromJson(g.value("r_max", Json(c.grid.rMax)), "r_max");
        const Json pts = g.value("points", Json(c.grid.points));
        if (!pts.is_number_integer())
          fail(ErrorCode::Parse, "'points' must be an integer");
        c.grid.points = pts.get<int>();
      }
    }
    c.grid.validate();
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned())
        fail(ErrorCode::Parse, "'seed' must be a nonnegative integer");
      c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("output")) {
      const Json& o = j["output"];
      if (!o.is_object())
        fail(ErrorCode::Parse, "'output' must be an object");
      if (o.contains("path")) {
        if (!o["path"].is_string())
          fail(ErrorCode::Parse, "'output.path' must be a string");
        c.outPath = o["path"].get<std::string>();
      }
      if (o.contains("format")) {
        const std::string f = o["format"].is_string() ? o["format"].get<std::string>() : "";
        if (f == "csv")
          c.format = OutputFormat::Csv;
        else if (f == "json")
          c.format = OutputFormat::Json;
        else
          fail(ErrorCode::Parse, "'output.format' must be csv or json");
      }
    }
    return c;
  }

  RunConfig parseRunConfig(std::string_view text)
  {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
    try {
      return parseRunConfig(j);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::Parse, std::string("bad config: ") + e.what());
    }
  }

  RunResult run(const RunConfig& c)
  {
    if (c.command == "psi-check")
      return psiCheck(c);
    if (c.command == "modulus")
      return modulus(c);
    if (c.command == "norm")
      return norm(c);
    if (c.command == "classify")
      return classifyCmd(c);
    if (c.command == "inclusion")
      return inclusion(c);
    if (c.command == "verify-paper")
      return verify(c);
    fail(ErrorCode::Parse, "unknown command '" + c.command + "'");
  }

}
