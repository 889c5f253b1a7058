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

#include "stummel/inclusion.hpp"
#include "stummel/errors.hpp"
#include "stummel/geometry.hpp"
#include "stummel/parallel.hpp"
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

namespace stummel {

  namespace {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    constexpr double kOrderTolerance = 1e-12;

    constexpr std::array<TheoremId, 15> kAll{
      TheoremId::Prop3_1, TheoremId::Prop3_2, TheoremId::Cor3_2,   TheoremId::Cor3_3,   TheoremId::Cor3_5,
      TheoremId::Thm4_1,  TheoremId::Thm4_5,  TheoremId::Cor4_6,   TheoremId::Thm4_8,   TheoremId::Thm4_9,
      TheoremId::Thm4_10a, TheoremId::Thm4_10b, TheoremId::Lem5_4, TheoremId::Lem5_5, TheoremId::Thm5_6
    };

    //a <= b up to rounding in the last digits
    bool leq(double a, double b)
    {
      if (a <= b)
        return true;
      if (std::isinf(a) || std::isinf(b))
        return false;
      return a - b <= kOrderTolerance * std::max({ 1.0, std::fabs(a), std::fabs(b) });
    }

    bool lt(double a, double b) { return !leq(b, a); }

    Verdict of(bool b) { return b ? Verdict::Holds : Verdict::Fails; }

    std::string num(double v)
    {
      if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", v);
      return buf;
    }

    class Checker {
    public:
      Checker(TheoremId id, const TheoremParams& params) : m_params(params) { m_list.theorem = id; }

      template <class T>
      T need(const std::optional<T>& v, const char* name) const
      {
        if (!v)
          fail(ErrorCode::MissingParameter,
               std::string(theoremIdName(m_list.theorem)) + " needs parameter '" + name + "'");
        return *v;
      }

      int n() const
      {
        const int d = need(m_params.n, "n");
        require(d >= 1, "dimension must be a positive integer");
        return d;
      }

      void add(std::string description, Verdict status, std::optional<double> cert = std::nullopt)
      {
        m_list.items.push_back({ std::move(description), status, cert });
      }

      void pRange(double p, const char* name)
      {
        add(std::string("1 <= ") + name + " < inf", of(leq(1.0, p) && std::isfinite(p)), p);
      }

      void ordered(double lo, double hi, const char* loName, const char* hiName, bool strict)
      {
        const bool ok = leq(1.0, lo) && std::isfinite(hi) && (strict ? lt(lo, hi) : leq(lo, hi));
        add(std::string("1 <= ") + loName + (strict ? " < " : " <= ") + hiName + " < inf", of(ok), hi - lo);
      }

      void alphaRange(double alpha, int d, const char* name = "alpha")
      {
        add(std::string("0 < ") + name + " < n", of(alpha > 0.0 && lt(alpha, d)), alpha);
      }

      void integrable(const ScaleFunction& psi, const char* name, int d)
      {
        const ConditionReport rep = checkConditions(psi, d);
        std::optional<double> cert;
        const Extended I = integralScaleOverT(psi, 1.0);
        if (I.isFinite())
          cert = I.value();
        add(std::string("int_0^1 ") + name + "(t)/t dt < inf", rep.integrable, cert);
      }

      void doubling(const ScaleFunction& psi, const char* name, int d)
      {
        const ConditionReport rep = checkConditions(psi, d);
        add(std::string(name) + " doubling", rep.doubling, rep.A1);
      }

      void almostDecreasing(const ScaleFunction& psi, const char* name, int d)
      {
        const ConditionReport rep = checkConditions(psi, d);
        add(std::string(name) + "(t)/t^n almost decreasing", rep.almostDecreasing, rep.A2);
      }

      void rightDoubling(const ScaleFunction& psi, const char* name, int d)
      {
        const ConditionReport rep = checkConditions(psi, d);
        add(std::string(name) + " right doubling", rep.rightDoubling, rep.A3);
      }

      void dominated(const ScaleFunction& psi1, const ScaleFunction& psi2)
      {
        const Domination dom = dominatesNearZero(psi1, psi2);
        add("psi2 <= c psi1 on (0, delta)", dom.status, dom.c);
        if (dom.delta)
          add("delta of the domination", dom.status, dom.delta);
      }

      void productFinite(const ScaleFunction& psi1, double p2, const ScaleFunction& psi2)
      {
        const Extended I = productIntegral(psi1, p2, psi2, 1.0);
        add("int_0^1 psi1(t)^p2 psi2(t)/t dt < inf", of(I.isFinite()),
            I.isFinite() ? std::optional<double>(I.value()) : std::nullopt);
      }

      HypothesisChecklist finish(std::string statement, std::string note = {})
      {
        m_list.statement = std::move(statement);
        m_list.note = std::move(note);
        bool unknown = false;
        m_list.conclusion = Conclusion::Includes;
        for (const auto& it : m_list.items) {
          if (it.status == Verdict::Fails) {
            m_list.conclusion = Conclusion::NotApplicable;
            return m_list;
          }
          unknown = unknown || it.status == Verdict::Unknown;
        }
        if (unknown)
          m_list.conclusion = Conclusion::Unknown;
        return m_list;
      }

      const TheoremParams& params() const { return m_params; }

    private:
      const TheoremParams& m_params;
      HypothesisChecklist m_list;
    };

  }

  const char* theoremIdName(TheoremId t)
  {
    switch (t) {
    case TheoremId::Prop3_1: return "Prop3_1";
    case TheoremId::Prop3_2: return "Prop3_2";
    case TheoremId::Cor3_2: return "Cor3_2";
    case TheoremId::Cor3_3: return "Cor3_3";
    case TheoremId::Cor3_5: return "Cor3_5";
    case TheoremId::Thm4_1: return "Thm4_1";
    case TheoremId::Thm4_5: return "Thm4_5";
    case TheoremId::Cor4_6: return "Cor4_6";
    case TheoremId::Thm4_8: return "Thm4_8";
    case TheoremId::Thm4_9: return "Thm4_9";
    case TheoremId::Thm4_10a: return "Thm4_10a";
    case TheoremId::Thm4_10b: return "Thm4_10b";
    case TheoremId::Lem5_4: return "Lem5_4";
    case TheoremId::Lem5_5: return "Lem5_5";
    case TheoremId::Thm5_6: return "Thm5_6";
    }
    return "?";
  }

  std::optional<TheoremId> parseTheoremId(std::string_view s)
  {
    for (TheoremId t : kAll)
      if (s == theoremIdName(t))
        return t;
    return std::nullopt;
  }

  std::span<const TheoremId> allTheorems() { return kAll; }

  const char* conclusionName(Conclusion c)
  {
    switch (c) {
    case Conclusion::Includes: return "includes";
    case Conclusion::NotApplicable: return "not_applicable";
    case Conclusion::Unknown: return "unknown";
    }
    return "?";
  }

  Domination dominatesNearZero(const ScaleFunction& psi1, const ScaleFunction& psi2)
  {
    psi1.validate();
    psi2.validate();
    const Monomial m1 = psi1.pieces().front();
    const Monomial m2 = psi2.pieces().front();
    Domination out;
    //psi2/psi1 = k t^d |ln t|^e on (0, delta), delta <= 1/e so |ln t| >= 1
    const double delta = std::min({ m1.hi, m2.hi, std::exp(-1.0) });
    const double k = m2.coef / m1.coef;
    double d = m2.a - m1.a;
    double e = m2.b - m1.b;
    if (std::fabs(d) <= kExponentTolerance)
      d = 0.0;
    if (std::fabs(e) <= kExponentTolerance)
      e = 0.0;
    const double Ld = -std::log(delta);
    out.delta = delta;
    if (d < 0.0 || (d == 0.0 && e > 0.0)) {
      out.status = Verdict::Fails;
      out.delta.reset();
      return out;
    }
    out.status = Verdict::Holds;
    if (d == 0.0) {
      out.c = k * std::pow(Ld, e);
      return out;
    }
    //sup over L >= Ld of exp(-d L) L^e
    const double L = e > 0.0 ? std::max(Ld, e / d) : Ld;
    out.c = k * std::exp(-d * L) * std::pow(L, e);
    return out;
  }

  HypothesisChecklist checkTheorem(TheoremId id, const TheoremParams& prm)
  {
    Checker ck(id, prm);
    switch (id) {
    case TheoremId::Prop3_1: {
      const int d = ck.n();
      const double p = ck.need(prm.p, "p");
      const ScaleFunction psi1 = ck.need(prm.psi1, "psi1");
      const ScaleFunction psi2 = ck.need(prm.psi2, "psi2");
      ck.pRange(p, "p");
      ck.almostDecreasing(psi2, "psi2", d);
      ck.dominated(psi1, psi2);
      return ck.finish("S_{p,psi1} subset S_{p,psi2}");
    }
    case TheoremId::Prop3_2: {
      const int d = ck.n();
      const double p1 = ck.need(prm.p1, "p1");
      const double p2 = ck.need(prm.p2, "p2");
      const ScaleFunction psi = ck.need(prm.psi, "psi");
      ck.ordered(p2, p1, "p2", "p1", false);
      ck.integrable(psi, "psi", d);
      return ck.finish("S_{p1,psi} subset S_{p2,psi}");
    }
    case TheoremId::Cor3_2: {
      const int d = ck.n();
      const double p = ck.need(prm.p, "p");
      const double alpha = ck.need(prm.alpha, "alpha");
      const double beta = ck.need(prm.beta, "beta");
      ck.pRange(p, "p");
      ck.add("0 < alpha <= beta < n", of(alpha > 0.0 && leq(alpha, beta) && lt(beta, d)), beta - alpha);
      return ck.finish("S_{p,alpha} subset S_{p,beta}");
    }
    case TheoremId::Cor3_3: {
      const int d = ck.n();
      const double p1 = ck.need(prm.p1, "p1");
      const double p2 = ck.need(prm.p2, "p2");
      const double alpha = ck.need(prm.alpha, "alpha");
      ck.ordered(p2, p1, "p2", "p1", false);
      ck.alphaRange(alpha, d);
      return ck.finish("S_{p1,alpha} subset S_{p2,alpha}");
    }
    case TheoremId::Cor3_5: {
      const int d = ck.n();
      const double p1 = ck.need(prm.p1, "p1");
      const double p2 = ck.need(prm.p2, "p2");
      const ScaleFunction psi1 = ck.need(prm.psi1, "psi1");
      const ScaleFunction psi2 = ck.need(prm.psi2, "psi2");
      ck.ordered(p2, p1, "p2", "p1", false);
      ck.integrable(psi2, "psi2", d);
      ck.almostDecreasing(psi2, "psi2", d);
      ck.dominated(psi1, psi2);
      return ck.finish("S_{p1,psi1} subset S_{p2,psi2}");
    }
    case TheoremId::Thm4_1:
    case TheoremId::Thm4_8: {
      const bool weak = id == TheoremId::Thm4_8;
      const int d = ck.n();
      const double p1 = ck.need(prm.p1, "p1");
      const double p2 = ck.need(prm.p2, "p2");
      const ScaleFunction psi1 = ck.need(prm.psi1, "psi1");
      const ScaleFunction psi2 = ck.need(prm.psi2, "psi2");
      ck.ordered(p2, p1, "p2", "p1", weak);
      ck.doubling(psi1, "psi1", d);
      ck.rightDoubling(psi2, "psi2", d);
      ck.productFinite(psi1, p2, psi2);
      return ck.finish(weak ? "wL^{p1,psi1} subset S_{p2,psi2}" : "L^{p1,psi1} subset S_{p2,psi2}");
    }
    case TheoremId::Thm4_5: {
      const int d = ck.n();
      const double p1 = ck.need(prm.p1, "p1");
      const double p2 = ck.need(prm.p2, "p2");
      const ScaleFunction psi1 = ck.need(prm.psi1, "psi1");
      ck.ordered(p2, p1, "p2", "p1", false);
      ck.almostDecreasing(psi1, "psi1", d);
      return ck.finish("f in S_{p1,psi1} with eta_{p1,psi1} f(r) <= c psi1(r)^(1/p1) psi2(r) lies in L^{p2,psi2}",
                       "index order p2 <= p1; the weak counterpart Thm4_9 is stated with p1 <= p2");
    }
    case TheoremId::Thm4_9: {
      const int d = ck.n();
      const double p1 = ck.need(prm.p1, "p1");
      const double p2 = ck.need(prm.p2, "p2");
      const ScaleFunction psi1 = ck.need(prm.psi1, "psi1");
      ck.ordered(p1, p2, "p1", "p2", false);
      ck.almostDecreasing(psi1, "psi1", d);
      return ck.finish("f in S_{p1,psi1} with eta_{p1,psi1} f(r) <= c psi1(r)^(1/p1) psi2(r) lies in wL^{p2,psi2}",
                       "index order p1 <= p2 as stated; the strong counterpart Thm4_5 uses p2 <= p1");
    }
    case TheoremId::Cor4_6: {
      const int d = ck.n();
      const double p1 = ck.need(prm.p1, "p1");
      const double p2 = ck.need(prm.p2, "p2");
      const double alpha = ck.need(prm.alpha, "alpha");
      const double sigma = ck.need(prm.sigma, "sigma");
      ck.ordered(p2, p1, "p2", "p1", false);
      ck.alphaRange(alpha, d);
      const double top = alpha * p2 / p1;
      ck.add("0 < sigma < alpha p2 / p1", of(sigma > 0.0 && lt(sigma, top)), top);
      return ck.finish("f in S_{p1,alpha} with eta_{p1,alpha} f(r) <= c r^(sigma/p2) lies in L^{p2, n + sigma - alpha p2/p1}");
    }
    case TheoremId::Thm4_10a: {
      const int d = ck.n();
      const double p1 = ck.need(prm.p1, "p1");
      const double p2 = ck.need(prm.p2, "p2");
      const double lambda = ck.need(prm.lambda, "lambda");
      const double alpha = ck.need(prm.alpha, "alpha");
      ck.ordered(p2, p1, "p2", "p1", true);
      ck.add("0 <= lambda < n", of(lambda >= 0.0 && lt(lambda, d)), lambda);
      const double lo = (d - lambda) * p2 / p1;
      ck.add("(n - lambda) p2 / p1 < alpha < n", of(lt(lo, alpha) && lt(alpha, d)), lo);
      return ck.finish("wL^{p1,lambda} subset S_{p2,alpha}");
    }
    case TheoremId::Thm4_10b: {
      const int d = ck.n();
      const double p = ck.need(prm.p, "p");
      const double alpha = ck.need(prm.alpha, "alpha");
      const double sigma = ck.need(prm.sigma, "sigma");
      ck.pRange(p, "p");
      ck.alphaRange(alpha, d);
      ck.add("sigma > 0", of(sigma > 0.0), sigma);
      std::string note;
      if (lt(d, d - alpha + sigma))
        note = "target index n - alpha + sigma exceeds n";
      return ck.finish("f in S_{p,alpha} with eta_{p,alpha} f(r) <= c r^(sigma/p) lies in wL^{p, n - alpha + sigma}", note);
    }
    case TheoremId::Lem5_4: {
      const double kappa = ck.need(prm.kappa, "kappa");
      const double p1 = ck.need(prm.p1, "p1");
      const double p2 = ck.need(prm.p2, "p2");
      ck.add("0 < kappa <= inf", of(kappa > 0.0), kappa);
      ck.add("0 < p2 <= p1 <= inf", of(p2 > 0.0 && leq(p2, p1)), p1);
      return ck.finish("L^{p2}_kappa subset L^{p1}_kappa");
    }
    case TheoremId::Lem5_5: {
      const int d = ck.n();
      const double alpha = ck.need(prm.alpha, "alpha");
      ck.alphaRange(alpha, d);
      return ck.finish("L^1_{n/alpha} subset S~_{1,alpha}");
    }
    case TheoremId::Thm5_6: {
      const int d = ck.n();
      const double p = ck.need(prm.p, "p");
      const double alpha = ck.need(prm.alpha, "alpha");
      const double kappa = ck.need(prm.kappa, "kappa");
      ck.pRange(p, "p");
      ck.alphaRange(alpha, d);
      const double lo = d * p / alpha;
      ck.add("n p / alpha <= kappa < inf", of(alpha > 0.0 && leq(lo, kappa) && std::isfinite(kappa)), lo);
      return ck.finish("L^p_kappa subset S~_{p,alpha}");
    }
    }
    fail(ErrorCode::InvalidArgument, "unknown theorem");
  }

  namespace {
    struct Sweep {
      double max = 0.0;
      double at = 0.0;
      std::vector<double> ratios;
    };

    Sweep sweepRatio(const std::function<double(double)>& ratio, const std::vector<double>& grid)
    {
      Sweep s;
      s.ratios.resize(grid.size());
      parallelFor(grid.size(), [&](std::size_t i) { s.ratios[i] = ratio(grid[i]); });
      std::size_t arg = 0;
      for (std::size_t i = 1; i < grid.size(); ++i)
        if (s.ratios[i] > s.ratios[arg])
          arg = i;
      s.max = s.ratios[arg];
      s.at = grid[arg];
      if (!std::isfinite(s.max) || grid.size() < 2)
        return s;
      //golden section in ln r between the neighbours of the grid maximum
      double a = std::log(grid[arg > 0 ? arg - 1 : 0]);
      double b = std::log(grid[std::min(arg + 1, grid.size() - 1)]);
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = b - g * (b - a), x2 = a + g * (b - a);
      double f1 = ratio(std::exp(x1)), f2 = ratio(std::exp(x2));
      for (int it = 0; it < 40; ++it) {
        if (f1 > f2) {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - g * (b - a);
          f1 = ratio(std::exp(x1));
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + g * (b - a);
          f2 = ratio(std::exp(x2));
        }
      }
      if (f1 > s.max) {
        s.max = f1;
        s.at = std::exp(x1);
      }
      if (f2 > s.max) {
        s.max = f2;
        s.at = std::exp(x2);
      }
      return s;
    }
  }

  BoundReport verifyQuantitativeBound(const TestFunction& f, double p1, double p2, const ScaleFunction& psi1,
                                      const ScaleFunction& psi2, const std::vector<double>& grid,
                                      const EtaOptions& opt)
  {
    f.validate();
    require(grid.size() >= 2, "grid needs at least two radii");
    require(std::is_sorted(grid.begin(), grid.end()) && grid.front() > 0.0, "grid must be positive and increasing");
    TheoremParams tp;
    tp.n = f.n;
    tp.p1 = p1;
    tp.p2 = p2;
    tp.psi1 = psi1;
    tp.psi2 = psi2;
    const HypothesisChecklist cl = checkTheorem(TheoremId::Thm4_1, tp);
    if (cl.conclusion != Conclusion::Includes)
      fail(ErrorCode::InapplicableHypotheses, std::string("hypotheses of Thm4_1 are ") + conclusionName(cl.conclusion));
    BoundReport rep;
    rep.norm = morreyNorm(f, SpaceSpec::generalizedMorrey(p1, psi1)).value;
    if (rep.norm.isInfinite())
      fail(ErrorCode::InapplicableHypotheses, "f is not in L^{p1,psi1}: the norm is infinite");
    const double norm = rep.norm.value();
    auto ratio = [&](double r) {
      if (norm == 0.0)
        return 0.0;
      const Extended e = eta(f, p2, psi2, r, opt);
      if (e.isInfinite())
        return kInf;
      const double den = productIntegral(psi1, p2, psi2, 0.5 * r).root(p2).value() * norm;
      return e.value() == 0.0 ? 0.0 : e.value() / den;
    };
    const Sweep coarse = sweepRatio(ratio, grid);
    const Sweep fine = sweepRatio(ratio, logGrid(grid.front(), grid.back(), 2 * int(grid.size()) - 1));
    rep.maxRatio = coarse.max;
    rep.atRadius = coarse.at;
    rep.refinedMaxRatio = fine.max;
    rep.r = grid;
    rep.ratios = coarse.ratios;
    if (coarse.max == 0.0 && fine.max == 0.0)
      rep.relativeChange = 0.0;
    else if (std::isfinite(coarse.max) && std::isfinite(fine.max))
      rep.relativeChange = std::fabs(fine.max - coarse.max) / std::max(coarse.max, fine.max);
    else
      rep.relativeChange = kInf;
    rep.stable = rep.relativeChange <= kStabilityTolerance;
    return rep;
  }

  EnvelopeFit fitEnvelope(const ModulusCurve& curve)
  {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < curve.r.size() && int(pts.size()) < kEnvelopePoints; ++i) {
      const Extended& v = curve.values[i];
      if (v.isFinite() && v.value() > 0.0 && curve.r[i] > 0.0)
        pts.emplace_back(std::log(curve.r[i]), std::log(v.value()));
    }
    if (pts.size() < 4)
      fail(ErrorCode::UnfittableCurve, "fewer than 4 finite positive modulus values");
    const double m = double(pts.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : pts) {
      sx += x;
      sy += y;
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
      sxx += (x - mx) * (x - mx);
      sxy += (x - mx) * (y - my);
    }
    if (!(sxx > 0.0))
      fail(ErrorCode::UnfittableCurve, "fit radii are not distinct");
    EnvelopeFit fit;
    fit.slope = sxy / sxx;
    const double icpt = my - fit.slope * mx;
    fit.c = std::exp(icpt);
    fit.p = curve.p;
    fit.sigma = curve.p * fit.slope;
    fit.points = int(pts.size());
    for (const auto& [x, y] : pts)
      fit.residual = std::max(fit.residual, std::fabs(std::expm1(y - icpt - fit.slope * x)));
    return fit;
  }

  MorreyPrediction predictAndCheckMorrey(const EnvelopeFit& fit, const TestFunction& f, double p1, double p2,
                                         double alpha, int n)
  {
    require(n == f.n, "dimension does not match the function");
    require(p1 >= 1.0 && p2 >= 1.0, "indices must be >= 1");
    if (fit.residual > kMaxEnvelopeResidual)
      fail(ErrorCode::ResidualTooLarge, "envelope residual " + num(fit.residual) + " exceeds 1e-3");
    if (!(fit.sigma > 0.0))
      fail(ErrorCode::InapplicableHypotheses, "fitted sigma " + num(fit.sigma) + " is not positive");
    MorreyPrediction out;
    out.lambda = n + fit.sigma - alpha * p2 / p1;
    if (!lt(out.lambda, n)) {
      out.boundary = true;
      out.lambda = n;
      out.note = "sigma at the endpoint alpha p2/p1: lambda = n";
    }
    out.lambda = std::max(out.lambda, 0.0);
    out.strong = morreyNorm(f, SpaceSpec::classicalMorrey(p2, out.lambda));
    out.strongFinite = out.strong.value.isFinite();
    if (p1 == p2) {
      double lw = n - alpha + fit.sigma;
      if (lt(n, lw)) {
        out.weakLambda = lw;
        if (!out.note.empty())
          out.note += "; ";
        out.note += "weak index n - alpha + sigma exceeds n, not evaluated";
      } else {
        lw = std::clamp(lw, 0.0, double(n));
        out.weakLambda = lw;
        out.weak = weakMorreyNorm(f, SpaceSpec::classicalWeakMorrey(p1, lw));
        out.weakFinite = out.weak->value.isFinite();
      }
    }
    return out;
  }

  namespace {
    using Params = std::vector<std::pair<std::string, double>>;

    ClaimRow row(std::string id, std::string anchor, Params params, std::string expected, std::string computed,
                 bool agrees, std::string note = {})
    {
      ClaimRow r;
      r.claimId = std::move(id);
      r.anchor = std::move(anchor);
      r.params = std::move(params);
      r.expected = std::move(expected);
      r.computed = std::move(computed);
      r.agrees = agrees;
      r.note = std::move(note);
      return r;
    }

    std::string ext(const Extended& e) { return e.isInfinite() ? "inf" : num(e.value()); }

    using Claim = std::function<std::vector<ClaimRow>(const EtaOptions&)>;

    //(chi_B / (|y|^beta ln^2 |y|))^(1/p), B = B(0, e^(-2/beta))
    std::vector<ClaimRow> properAlphaBeta(const EtaOptions& o, int n, double alpha, double beta)
    {
      const TestFunction f = TestFunction::radialPowerLog(n, beta, 2.0, std::exp(-2.0 / beta));
      const Params prm{ { "n", n }, { "p", 1.0 }, { "alpha", alpha }, { "beta", beta } };
      const std::string id = n == 1 ? "cor3_2_remark" : "cor3_2_remark_n" + std::to_string(n);
      const Classification in = classify(f, 1.0, ScaleFunction::purePower(beta), defaultGrid(), o);
      const Classification out = classify(f, 1.0, ScaleFunction::purePower(alpha), defaultGrid(), o);
      const std::string a = membershipName(in.stummel.status);
      const std::string b = membershipName(out.bounded.status);
      return {
        row(id + ".member_beta", "Cor3_2 remark", prm, "member of S_{1,beta}", a,
            in.stummel.status == Membership::Member, in.stummel.method),
        row(id + ".nonmember_alpha", "Cor3_2 remark", prm, "non_member of S~_{1,alpha}", b,
            out.bounded.status == Membership::NonMember, out.bounded.method),
      };
    }

    std::vector<ClaimRow> properP(const EtaOptions& o)
    {
      const double gamma = 0.3, alpha = 0.5;
      const TestFunction f = TestFunction::radialPowerLog(1, gamma, 0.0, kInf);
      const Params prm{ { "n", 1 }, { "p1", 2.0 }, { "p2", 1.0 }, { "alpha", alpha }, { "gamma", gamma } };
      const ScaleFunction psi = ScaleFunction::purePower(alpha);
      const Classification c1 = classify(f, 1.0, psi, defaultGrid(), o);
      const Classification c2 = classify(f, 2.0, psi, defaultGrid(), o);
      return {
        row("cor3_3_remark.member_p2", "Cor3_3 remark", prm, "member of S_{1,0.5}", membershipName(c1.stummel.status),
            c1.stummel.status == Membership::Member, c1.stummel.method),
        row("cor3_3_remark.nonmember_p1", "Cor3_3 remark", prm, "non_member of S~_{2,0.5}",
            membershipName(c2.bounded.status), c2.bounded.status == Membership::NonMember, c2.bounded.method),
      };
    }

    std::vector<ClaimRow> example43(const EtaOptions& o)
    {
      const ScaleFunction psi2 = ScaleFunction::purePower(0.5);
      const TestFunction f = TestFunction::radialPowerLog(1, 0.5, 2.0, std::exp(-4.0));
      const Params prm{ { "n", 1 }, { "p1", 1.0 }, { "p2", 1.0 }, { "delta", std::exp(-4.0) }, { "lambda1", 0.75 } };
      double err = 0.0;
      for (int k = 9; k <= 16; ++k) {
        const Extended e = eta(f, 1.0, psi2, std::exp(-double(k)), o);
        err = std::max(err, e.isFinite() ? std::fabs(e.value() * k / 2.0 - 1.0) : kInf);
      }
      const Classification c = classify(f, 1.0, psi2, defaultGrid(), o);
      const NormReport m = morreyNorm(f, SpaceSpec::classicalMorrey(1.0, 0.75));
      return {
        row("ex4_3.modulus_closed_form", "Ex4_3", prm, "eta(e^-k) = 2/k for k = 9..16",
            "max relative error " + num(err), err <= 1e-6),
        row("ex4_3.member", "Ex4_3", prm, "member of S_{1,t^0.5}", membershipName(c.stummel.status),
            c.stummel.status == Membership::Member, c.stummel.method),
        row("ex4_3.not_morrey", "Ex4_3", prm, "inf", ext(m.value), m.value.isInfinite(), m.witness.note),
      };
    }

    std::vector<ClaimRow> example52(const EtaOptions& o, int n, double alpha, int K)
    {
      const TestFunction V = TestFunction::bumpSum(n, alpha, K);
      const Params prm{ { "n", n }, { "p", 1.0 }, { "alpha", alpha }, { "K", K } };
      const std::string id = n == 1 ? "ex5_2" : "ex5_2_n" + std::to_string(n);
      const Classification c = classify(V, 1.0, ScaleFunction::purePower(alpha), defaultGrid(), o);
      const double expectedBound = Geometry::of(n).omega / alpha;
      const double lb = c.stummel.lowerBound.value_or(0.0);
      return {
        row(id + ".bounded_member", "Ex5_2", prm, "member of S~_{1,alpha}", membershipName(c.bounded.status),
            c.bounded.status == Membership::Member, c.bounded.method),
        row(id + ".stummel_nonmember", "Ex5_2", prm, "non_member of S_{1,alpha}, eta >= " + num(expectedBound),
            std::string(membershipName(c.stummel.status)) + ", eta >= " + num(lb),
            c.stummel.status == Membership::NonMember && lb >= expectedBound * (1.0 - 1e-12), c.stummel.method),
      };
    }

    std::vector<ClaimRow> weakMorreyRemark(const EtaOptions& o, int n)
    {
      const TestFunction f = TestFunction::radialPowerLog(n, double(n), 0.0, kInf);
      const std::string id = n == 1 ? "thm4_10_remark" : "thm4_10_remark_n" + std::to_string(n);
      const double vn = Geometry::of(n).v_n;
      const NormReport w0 = weakMorreyNorm(f, SpaceSpec::classicalWeakMorrey(1.0, 0.0));
      const double alpha = 0.5 * n;
      const ModulusCurve curve = modulusCurve(f, 1.0, ScaleFunction::purePower(alpha), defaultGrid(), o);
      bool allDivergent = true;
      for (const auto& v : curve.values)
        allDivergent = allDivergent && v.isInfinite();
      std::vector<ClaimRow> rows{
        row(id + ".weak_lambda0", "Thm4_10a remark", { { "n", n }, { "p", 1.0 }, { "lambda", 0.0 } }, num(vn),
            ext(w0.value), w0.value.isFinite() && std::fabs(w0.value.value() / vn - 1.0) <= 1e-9),
        row(id + ".not_stummel", "Thm4_10a remark", { { "n", n }, { "p", 1.0 }, { "alpha", alpha } },
            "eta divergent at every r", allDivergent ? "divergent at every grid radius" : "finite somewhere",
            allDivergent),
      };
      if (n == 1) {
        const NormReport wl = weakMorreyNorm(f, SpaceSpec::classicalWeakMorrey(1.0, 0.5));
        ClaimRow r = row(id + ".weak_lambda_half", "Thm4_10a remark", { { "n", n }, { "p", 1.0 }, { "lambda", 0.5 } },
                         "finite", ext(wl.value), wl.value.isFinite(),
                         "the quotient at centre 0 is v_n r^(-lambda), unbounded as r -> 0; membership holds only at lambda = 0");
        r.flagged = true;
        rows.push_back(r);
      }
      return rows;
    }

    std::vector<ClaimRow> lorentzToBounded(const EtaOptions& o)
    {
      const double alpha = 0.5;
      const TestFunction f = TestFunction::radialPowerLog(1, 0.25, 0.0, 1.0);
      const Params prm{ { "n", 1 }, { "alpha", alpha }, { "kappa", 2.0 } };
      const Extended L = lorentzNorm(f, 2.0, 1.0);
      const Classification c = classify(f, 1.0, ScaleFunction::purePower(alpha), defaultGrid(), o);
      return {
        row("lem5_5.instance", "Lem5_5", prm, "finite L^1_2 norm and member of S~_{1,0.5}",
            "L^1_2 norm " + ext(L) + ", " + membershipName(c.bounded.status),
            L.isFinite() && c.bounded.status == Membership::Member),
      };
    }

    std::vector<ClaimRow> tailLorentz(const EtaOptions&, int n, double alpha)
    {
      const TestFunction f = TestFunction::tailPower(n, alpha);
      const std::string id = n == 1 ? "thm5_6_remark" : "thm5_6_remark_n" + std::to_string(n);
      const double edge = n / alpha;
      const double kappa = edge + 1.0;
      const Extended a = lorentzNorm(f, kappa, 1.0);
      const Extended b = lorentzNorm(f, edge, 1.0);
      return {
        row(id + ".finite_above", "Thm5_6 remark", { { "n", n }, { "alpha", alpha }, { "kappa", kappa } }, "finite",
            ext(a), a.isFinite()),
        row(id + ".infinite_at_edge", "Thm5_6 remark", { { "n", n }, { "alpha", alpha }, { "kappa", edge } }, "inf",
            ext(b), b.isInfinite()),
      };
    }

    std::vector<ClaimRow> classicalReduction(const EtaOptions&)
    {
      std::vector<ClaimRow> rows;
      for (double alpha : { 0.75, 0.5 }) {
        TheoremParams tp;
        tp.n = 1;
        tp.p1 = 1.0;
        tp.p2 = 1.0;
        tp.psi1 = ScaleFunction::purePower(0.5 - 1.0);
        tp.psi2 = ScaleFunction::purePower(alpha);
        const HypothesisChecklist cl = checkTheorem(TheoremId::Thm4_1, tp);
        const bool inside = alpha > 0.5;
        const std::string want = inside ? "includes" : "not_applicable";
        rows.push_back(row(inside ? "thm4_1_remark.classical" : "thm4_1_remark.edge", "Thm4_1 remark",
                           { { "n", 1 }, { "p1", 1.0 }, { "p2", 1.0 }, { "lambda", 0.5 }, { "alpha", alpha } }, want,
                           conclusionName(cl.conclusion), want == conclusionName(cl.conclusion)));
      }
      return rows;
    }

    std::vector<ClaimRow> quantitative(const EtaOptions& o)
    {
      const TestFunction f = TestFunction::indicator(1, 1.0);
      const BoundReport rep = verifyQuantitativeBound(f, 1.0, 1.0, ScaleFunction::purePower(-0.5),
                                                      ScaleFunction::purePower(0.75), defaultGrid(), o);
      return { row("thm4_1.quantitative_bound", "Thm4_1", { { "n", 1 }, { "p1", 1.0 }, { "p2", 1.0 } },
                   "finite constant, stable within 5% under refinement",
                   "max ratio " + num(rep.maxRatio) + ", refined " + num(rep.refinedMaxRatio),
                   std::isfinite(rep.maxRatio) && rep.stable) };
    }

    std::vector<ClaimRow> envelopeRoundTrip(const EtaOptions& o)
    {
      const double gamma = 0.25, alpha = 0.5;
      const TestFunction f = TestFunction::radialPowerLog(1, gamma, 0.0, kInf);
      const ModulusCurve curve = modulusCurve(f, 1.0, ScaleFunction::purePower(alpha), defaultGrid(), o);
      const EnvelopeFit fit = fitEnvelope(curve);
      const MorreyPrediction pr = predictAndCheckMorrey(fit, f, 1.0, 1.0, alpha, 1);
      const bool ok = std::fabs(fit.sigma - (alpha - gamma)) <= 1e-4 && pr.strongFinite && pr.weakFinite;
      return { row("cor4_6.round_trip", "Cor4_6", { { "n", 1 }, { "p", 1.0 }, { "alpha", alpha }, { "gamma", gamma } },
                   "sigma = 0.25, finite L^{1,0.75} and wL^{1,0.75} norms",
                   "sigma " + num(fit.sigma) + ", strong " + ext(pr.strong.value) + ", weak " +
                     (pr.weak ? ext(pr.weak->value) : std::string("n/a")),
                   ok) };
    }

    std::vector<ClaimRow> endpointSweep(const EtaOptions&)
    {
      std::string got;
      bool ok = true;
      for (double kappa : { 2.0, 2.5, 3.0 }) {
        TheoremParams tp;
        tp.n = 1;
        tp.p = 1.0;
        tp.alpha = 0.5;
        tp.kappa = kappa;
        const Conclusion c = checkTheorem(TheoremId::Thm5_6, tp).conclusion;
        ok = ok && c == Conclusion::Includes;
        got += (got.empty() ? "" : ",") + std::string(conclusionName(c));
      }
      return { row("thm5_6.endpoint_sweep", "Thm5_6", { { "n", 1 }, { "p", 1.0 }, { "alpha", 0.5 } },
                   "includes,includes,includes", got, ok) };
    }
  }

  std::vector<ClaimRow> verifyPaper(const EtaOptions& opt)
  {
    const std::vector<Claim> claims{
      [](const EtaOptions& o) { return properAlphaBeta(o, 1, 0.25, 0.5); },
      [](const EtaOptions& o) { return properAlphaBeta(o, 2, 0.5, 1.0); },
      properP,
      example43,
      [](const EtaOptions& o) { return example52(o, 1, 0.5, 14); },
      [](const EtaOptions& o) { return example52(o, 2, 1.0, 10); },
      [](const EtaOptions& o) { return weakMorreyRemark(o, 1); },
      [](const EtaOptions& o) { return weakMorreyRemark(o, 2); },
      lorentzToBounded,
      [](const EtaOptions& o) { return tailLorentz(o, 1, 0.5); },
      [](const EtaOptions& o) { return tailLorentz(o, 2, 1.0); },
      classicalReduction,
      quantitative,
      envelopeRoundTrip,
      endpointSweep,
    };
    std::vector<std::vector<ClaimRow>> parts(claims.size());
    parallelFor(claims.size(), [&](std::size_t i) { parts[i] = claims[i](opt); });
    std::vector<ClaimRow> rows;
    for (auto& p : parts)
      for (auto& r : p)
        rows.push_back(std::move(r));
    std::sort(rows.begin(), rows.end(), [](const ClaimRow& a, const ClaimRow& b) { return a.claimId < b.claimId; });
    return rows;
  }

  bool allAgree(const std::vector<ClaimRow>& rows)
  {
    return std::all_of(rows.begin(), rows.end(), [](const ClaimRow& r) { return r.flagged || r.agrees; });
  }

}
