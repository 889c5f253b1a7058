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

#include "stummel/scale.hpp"
#include "stummel/errors.hpp"
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace stummel {

  namespace {
    constexpr double kInf = std::numeric_limits<double>::infinity();

    //Ratio bound of the slowly varying factor |ln min(t, t0)| over a doubling step.
    double logStepRatio(double t0)
    {
      const double L = std::fabs(std::log(t0));
      return L / (L + std::numbers::ln2);
    }

    RadialIntegrand asIntegrand(const std::vector<Monomial>& ms)
    {
      RadialIntegrand ig;
      for (const auto& m : ms)
        ig.add(m.overS());
      ig.canonicalize();
      return ig;
    }
  }

  const char* verdictName(Verdict v)
  {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Unknown: return "unknown";
    }
    return "unknown";
  }

  ScaleFunction ScaleFunction::purePower(double a, double c)
  {
    ScaleFunction s;
    s.kind = ScaleKind::PurePower;
    s.a = a;
    s.scaleConst = c;
    s.validate();
    return s;
  }

  ScaleFunction ScaleFunction::powerLog(double a, double b, double t0, double c)
  {
    ScaleFunction s;
    s.kind = ScaleKind::PowerLog;
    s.a = a;
    s.b = b;
    s.t0 = t0;
    s.scaleConst = c;
    s.validate();
    return s;
  }

  ScaleFunction ScaleFunction::tabulated(std::vector<std::pair<double, double>> points)
  {
    ScaleFunction s;
    s.kind = ScaleKind::Tabulated;
    s.table = std::move(points);
    s.validate();
    return s;
  }

  ScaleFunction ScaleFunction::classicalMorrey(double lambda, int n, double p)
  {
    require(p >= 1.0, "Morrey exponent p must be >= 1");
    return purePower((lambda - n) / p);
  }

  void ScaleFunction::validate() const
  {
    require(std::isfinite(a) && std::isfinite(b), "scale exponents must be finite");
    require(scaleConst > 0.0 && std::isfinite(scaleConst), "scale_const must be positive");
    if (kind == ScaleKind::PowerLog)
      require(t0 > 0.0 && t0 < 1.0, "powerlog scale requires 0 < t0 < 1");
    if (kind == ScaleKind::Tabulated) {
      require(table.size() >= 2, "tabulated scale needs at least two points");
      for (std::size_t i = 0; i < table.size(); ++i) {
        require(table[i].first > 0.0 && table[i].second > 0.0, "tabulated points must be positive");
        if (i > 0)
          require(table[i].first > table[i - 1].first, "tabulated t values must be strictly increasing");
      }
    }
  }

  double ScaleFunction::operator()(double t) const
  {
    if (!(t > 0.0))
      fail(ErrorCode::NonPositiveArgument, "scale function evaluated at t <= 0");
    switch (kind) {
    case ScaleKind::PurePower:
      return scaleConst * std::pow(t, a);
    case ScaleKind::PowerLog:
      if (t <= t0)
        return scaleConst * std::pow(t, a) * std::pow(std::fabs(std::log(t)), b);
      return scaleConst * std::pow(std::fabs(std::log(t0)), b) * std::pow(t, a);
    case ScaleKind::Tabulated: {
      if (t < table.front().first || t > table.back().first)
        fail(ErrorCode::OutOfTableRange, "t outside the tabulated range");
      auto it = std::lower_bound(table.begin(), table.end(), t,
                                 [](const auto& pt, double x) { return pt.first < x; });
      if (it->first == t)
        return it->second;
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double w = std::log(t / lo.first) / std::log(hi.first / lo.first);
      return std::exp((1.0 - w) * std::log(lo.second) + w * std::log(hi.second));
    }
    }
    return 0.0;
  }

  std::vector<Monomial> ScaleFunction::pieces() const
  {
    switch (kind) {
    case ScaleKind::PurePower:
      return { Monomial{ scaleConst, a, 0.0, 0.0, kInf } };
    case ScaleKind::PowerLog:
      if (b == 0.0)
        return { Monomial{ scaleConst, a, 0.0, 0.0, kInf } };
      return { Monomial{ scaleConst, a, b, 0.0, t0 },
               Monomial{ scaleConst * std::pow(std::fabs(std::log(t0)), b), a, 0.0, t0, kInf } };
    case ScaleKind::Tabulated: {
      std::vector<Monomial> out;
      const std::size_t m = table.size();
      auto slope = [&](std::size_t i) {
        return std::log(table[i + 1].second / table[i].second) / std::log(table[i + 1].first / table[i].first);
      };
      for (std::size_t i = 0; i + 1 < m; ++i) {
        const double s = slope(i);
        const double lo = i == 0 ? 0.0 : table[i].first;
        const double hi = i + 2 == m ? kInf : table[i + 1].first;
        out.push_back(Monomial{ table[i].second * std::pow(table[i].first, -s), s, 0.0, lo, hi });
      }
      return out;
    }
    }
    return {};
  }

  double ScaleFunction::extendedValue(double t) const
  {
    if (kind != ScaleKind::Tabulated)
      return (*this)(t);
    double v = 0.0;
    for (const auto& m : pieces())
      v += m(t);
    //piece boundaries are half-open on the left
    if (v == 0.0 && t > 0.0)
      for (const auto& m : pieces())
        if (t == m.lo)
          v = m.coef * std::pow(t, m.a);
    return v;
  }

  std::pair<double, double> ScaleFunction::exponentsAtZero() const
  {
    const auto ps = pieces();
    return { ps.front().a, ps.front().b };
  }

  double ScaleFunction::exponentAtInfinity() const
  {
    return pieces().back().a;
  }

  ConditionReport checkConditions(const ScaleFunction& psi, int n, double sampleTolerance)
  {
    psi.validate();
    require(n >= 1, "dimension must be positive");
    ConditionReport rep;
    rep.n = n;

    if (psi.kind != ScaleKind::Tabulated) {
      rep.method = CheckMethod::Analytic;
      const double a = psi.a;
      const double b = psi.kind == ScaleKind::PowerLog ? psi.b : 0.0;

      rep.integrable = (a > 0.0 || (a == 0.0 && b < -1.0)) ? Verdict::Holds : Verdict::Fails;

      const double q = b == 0.0 ? 1.0 : logStepRatio(psi.t0);
      rep.doubling = Verdict::Holds;
      rep.A1 = std::pow(2.0, std::fabs(a)) * std::pow(q, -std::fabs(b));
      rep.rightDoubling = Verdict::Holds;
      rep.A3 = std::max(1.0, std::pow(2.0, a)) * (b < 0.0 ? std::pow(q, b) : 1.0);

      if (a < n) {
        rep.almostDecreasing = Verdict::Holds;
        if (b >= 0.0) {
          rep.A2 = 1.0;
        } else {
          //Psi(t)/t^n falls on (0, t*], rises on [t*, t0], falls again after t0.
          const double tStar = std::min(psi.t0, std::exp(b / (n - a)));
          auto h = [&](double t) { return psi(t) / std::pow(t, n); };
          rep.A2 = std::max(1.0, h(psi.t0) / h(tStar));
        }
      } else if (a == n && b >= 0.0) {
        rep.almostDecreasing = Verdict::Holds;
        rep.A2 = 1.0;
      } else {
        rep.almostDecreasing = Verdict::Fails;
      }
      if (psi.kind == ScaleKind::PowerLog && b != 0.0)
        rep.note = "beyond t0 the scale continues as Psi(t0)(t/t0)^a (convention)";
      return rep;
    }

    //Sampled verdicts: never stronger than the sample supports.
    rep.method = CheckMethod::Sampled;
    const double tMin = psi.table.front().first;
    const double tMax = psi.table.back().first;
    const int m = 2000;
    std::vector<double> ts(m);
    for (int i = 0; i < m; ++i)
      ts[i] = tMin * std::pow(tMax / tMin, double(i) / (m - 1));
    ts.back() = tMax;

    double a1 = 1.0;
    double a3 = 1.0;
    for (double t : ts) {
      for (int j = 1; j <= 16; ++j) {
        const double s = t * std::pow(2.0, j / 16.0);
        if (s > tMax)
          break;
        const double ratio = psi(s) / psi(t);
        a1 = std::max({ a1, ratio, 1.0 / ratio });
        a3 = std::max(a3, ratio);
      }
    }
    double runningMin = kInf;
    double a2 = 1.0;
    for (double t : ts) {
      const double h = psi(t) / std::pow(t, n);
      runningMin = std::min(runningMin, h);
      a2 = std::max(a2, h / runningMin);
    }
    rep.integrable = Verdict::Unknown;
    rep.doubling = Verdict::Holds;
    rep.A1 = a1 * (1.0 + sampleTolerance);
    rep.rightDoubling = Verdict::Holds;
    rep.A3 = std::min(a3 * (1.0 + sampleTolerance), *rep.A1);
    rep.almostDecreasing = Verdict::Holds;
    rep.A2 = a2 * (1.0 + sampleTolerance);
    rep.note = "sampled on the tabulated range only; behaviour near 0 is not certified";
    return rep;
  }

  Extended integralScaleOverT(const ScaleFunction& psi, double r)
  {
    psi.validate();
    if (!(r > 0.0))
      fail(ErrorCode::NonPositiveArgument, "integration radius must be positive");
    return integrateRadial(asIntegrand(psi.pieces()), r);
  }

  Extended productIntegral(const ScaleFunction& psi1, double p2, const ScaleFunction& psi2, double r)
  {
    psi1.validate();
    psi2.validate();
    require(p2 >= 1.0, "p2 must be >= 1");
    if (!(r > 0.0))
      fail(ErrorCode::NonPositiveArgument, "integration radius must be positive");
    std::vector<Monomial> first;
    for (const auto& m : psi1.pieces())
      first.push_back(m.pow(p2));
    return integrateRadial(asIntegrand(multiply(first, psi2.pieces())), r);
  }

}
