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

//Acceptance checks. One PASS/FAIL line per criterion; exit status is the
//number of failures.
#include "stummel/errors.hpp"
#include "stummel/inclusion.hpp"
#include "stummel/quad.hpp"
#include "stummel/spaces.hpp"
#include "stummel/stummel.hpp"
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace stummel;

namespace {

  const double kInf = INFINITY;

  struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
      if (!cond) {
        ok = false;
        detail << " [" << what << "]";
      }
    }
  };

  double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

  double seconds(std::chrono::steady_clock::time_point t0)
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  //1: modulus of the log-square example equals 2/k at r = e^-k
  void closedFormModulus(Outcome& o)
  {
    const auto t0 = std::chrono::steady_clock::now();
    const ScaleFunction psi = ScaleFunction::purePower(0.5);
    const TestFunction f = stummelNotMorreyExample(1, psi, 1.0);
    o.require(rel(f.R, std::exp(-4.0)) < 1e-12, "support radius e^-4");
    double worst = 0.0;
    for (int k = 9; k <= 16; ++k) {
      const Extended e = eta(f, 1.0, psi, std::exp(-double(k)));
      o.require(e.isFinite(), "finite at k=" + std::to_string(k));
      worst = std::max(worst, rel(e.value(), 2.0 / k));
    }
    const double dt = seconds(t0);
    o.require(worst <= 1e-6, "relative error");
    o.require(dt < 1.0, "runtime");
    o.detail << " max rel err " << worst << ", " << dt << " s";
  }

  //2: bump sum separates S from S~
  void bumpSeparation(Outcome& o)
  {
    const auto t0 = std::chrono::steady_clock::now();
    const int K = 14;
    const TestFunction f = TestFunction::bumpSum(1, 0.5, K);
    const ScaleFunction psi = ScaleFunction::purePower(0.5);
    const Classification c = classify(f, 1.0, psi, defaultGrid());
    o.require(c.bounded.status == Membership::Member, "S~ member");
    o.require(c.stummel.status == Membership::NonMember, "S non_member");
    o.require(c.stummel.lowerBound && *c.stummel.lowerBound >= 4.0 - 1e-9, "certified lower bound");
    double lowest = kInf;
    for (std::size_t i = 0; i < c.curve.r.size(); ++i)
      if (c.curve.r[i] >= std::pow(8.0, -K))
        lowest = std::min(lowest, c.curve.values[i].value());
    o.require(lowest >= 4.0 - 1e-9, "eta >= 4 on the grid");
    const double dt = seconds(t0);
    o.require(dt < 10.0, "runtime");
    o.detail << " min eta " << lowest << ", bound " << c.stummel.lowerBound.value_or(0.0) << ", " << dt << " s";
  }

  //3: proper inclusions via divergence certificates
  void properInclusions(Outcome& o)
  {
    const std::vector<double> grid = defaultGrid();
    const double beta = 0.5, alpha = 0.25;
    const TestFunction f = TestFunction::radialPowerLog(1, beta, 2.0, std::exp(-2.0 / beta));
    const Classification inBeta = classify(f, 1.0, ScaleFunction::purePower(beta), grid);
    const Classification inAlpha = classify(f, 1.0, ScaleFunction::purePower(alpha), grid);
    o.require(inBeta.stummel.status == Membership::Member, "(a) S_beta member");
    o.require(inAlpha.bounded.status == Membership::NonMember && inAlpha.bounded.divergentAt.has_value(),
              "(a) S~_alpha divergent");

    const TestFunction g = TestFunction::radialPowerLog(1, 0.3, 0.0, kInf);
    const Classification p2 = classify(g, 1.0, ScaleFunction::purePower(0.5), grid);
    const Classification p1 = classify(g, 2.0, ScaleFunction::purePower(0.5), grid);
    o.require(p2.stummel.status == Membership::Member, "(b) S_{1,0.5} member");
    o.require(p1.bounded.status == Membership::NonMember && p1.bounded.divergentAt.has_value(),
              "(b) S~_{2,0.5} divergent");
  }

  //4: Morrey-to-Stummel quantitative bound
  void quantitativeBound(Outcome& o)
  {
    const ScaleFunction psi1 = ScaleFunction::purePower(-0.5), psi2 = ScaleFunction::purePower(0.75);
    const std::vector<double> grid = defaultGrid();
    //|y|^-1/4 has infinite L^{1,psi1} norm on R; its restriction to B(0,1) is used
    const TestFunction fs[] = { TestFunction::indicator(1, 1.0), TestFunction::radialPowerLog(1, 0.25, 0.0, 1.0) };
    const char* names[] = { "indicator", "|y|^-1/4 on B(0,1)" };
    for (int i = 0; i < 2; ++i) {
      const BoundReport b = verifyQuantitativeBound(fs[i], 1.0, 1.0, psi1, psi2, grid);
      o.require(std::isfinite(b.maxRatio) && b.maxRatio > 0.0, std::string(names[i]) + " finite max");
      o.require(b.relativeChange <= kStabilityTolerance, std::string(names[i]) + " stable");
      o.detail << " " << names[i] << ": max " << b.maxRatio << " (refined " << b.refinedMaxRatio << ")";
    }
    bool refused = false;
    try {
      verifyQuantitativeBound(TestFunction::radialPowerLog(1, 0.25, 0.0, kInf), 1.0, 1.0, psi1, psi2, grid);
    } catch (const Error& e) {
      refused = e.code() == ErrorCode::InapplicableHypotheses;
    }
    o.require(refused, "untruncated |y|^-1/4 refused");
  }

  //5: envelope fit and Morrey round trip
  void envelopeRoundTrip(Outcome& o)
  {
    const TestFunction f = TestFunction::radialPowerLog(1, 0.25, 0.0, kInf);
    const ModulusCurve c = modulusCurve(f, 1.0, ScaleFunction::purePower(0.5), defaultGrid());
    const EnvelopeFit fit = fitEnvelope(c);
    o.require(std::abs(fit.sigma - 0.25) <= 1e-4, "sigma");
    const MorreyPrediction m = predictAndCheckMorrey(fit, f, 1.0, 1.0, 0.5, 1);
    o.require(std::abs(m.lambda - 0.75) <= 1e-4 && m.strongFinite, "strong norm finite");
    o.require(m.weak.has_value() && m.weakFinite, "weak norm finite");

    //classical L^{1,1/2} norm of |y|^-1/2 against a brute-force sup over (centre, r)
    const TestFunction h = TestFunction::radialPowerLog(1, 0.5, 0.0, kInf);
    const double norm = morreyNorm(h, SpaceSpec::classicalMorrey(1.0, 0.5)).value.value();
    double gridSup = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double r = std::pow(10.0, -6.0 + 0.3 * i);
      for (int j = 0; j <= 20; ++j) {
        const double c0 = r * j / 10.0;
        gridSup = std::max(gridSup, std::pow(r, -0.5) * ballLpPower(h, 1.0, c0, r).value());
      }
    }
    o.require(rel(norm, 4.0) <= 1e-6 && rel(gridSup, 4.0) <= 1e-6, "L^{1,1/2} norm 4");
    o.detail << " sigma " << fit.sigma << ", norm " << norm << ", grid sup " << gridSup;
  }

  //6: |y|^-1 in n = 1
  void weakCounterexample(Outcome& o)
  {
    const TestFunction f = TestFunction::radialPowerLog(1, 1.0, 0.0, kInf);
    const double w = weakLebesgueNorm(f, 1.0).value();
    o.require(rel(w, 2.0) <= 1e-9, "wL^1 norm 2");
    const ModulusCurve c = modulusCurve(f, 1.0, ScaleFunction::purePower(0.5), defaultGrid());
    bool allDivergent = true;
    for (const Extended& e : c.values)
      allDivergent = allDivergent && e.isInfinite();
    o.require(allDivergent, "eta divergent everywhere");
    o.require(weakMorreyNorm(f, SpaceSpec::classicalWeakMorrey(1.0, 0.5)).value.isInfinite(), "lambda 0.5 infinite");
    const std::vector<ClaimRow> rows = verifyPaper();
    int flagged = 0;
    for (const ClaimRow& r : rows)
      if (r.flagged) {
        ++flagged;
        o.require(!r.agrees && r.computed == "inf", "flagged row computes inf");
      }
    o.require(flagged == 1, "exactly one flagged row");
    o.require(allAgree(rows), "other rows agree");
    o.detail << " wL^1 " << w << ", " << rows.size() << " claim rows";
  }

  double integrateProfile(const std::function<double(double)>& g, std::vector<double> cuts, double end)
  {
    cuts.push_back(0.0);
    cuts.push_back(end);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (!(cuts[i + 1] <= end))
        break;
      s += cuts[i] == 0.0 ? integrateDyadicFromZero(g, cuts[i + 1]) : integrateGK(g, cuts[i], cuts[i + 1]);
    }
    return s;
  }

  //7: rearrangement, layer cake, Lorentz values, empirical CDF
  void rearrangement(Outcome& o)
  {
    const TestFunction fs[] = { TestFunction::indicator(1, 1.0), TestFunction::radialPowerLog(1, 0.5, 0.0, 1.0),
                                TestFunction::bumpSum(1, 0.5, 4) };
    double worst = 0.0;
    for (const TestFunction& f : fs) {
      const double direct = lebesgueNorm(f, 1.0).value();
      const RearrangementProfile fst = decreasingRearrangement(f);
      const double support = fst.totalSupport.value();
      const double viaStar = integrateProfile([&](double t) { return fst(t); }, fst.breakpoints(), support);
      //int_0^inf D_f(sigma) d sigma, cut at the jump levels of f
      std::vector<double> levels;
      for (const RearrangementPiece& p : fst.pieces)
        if (p.kind == RearrangementKind::Constant)
          levels.push_back(p.value);
      const double top = supNorm(f);
      double viaD;
      auto D = [&](double s) { return distributionFunction(f, s).value(); };
      if (std::isfinite(top)) {
        viaD = integrateProfile(D, levels, top);
      } else {
        viaD = integrateProfile(D, levels, 1.0) + integrateDyadicToInfinity(D, 1.0);
      }
      worst = std::max({ worst, rel(viaStar, direct), rel(viaD, direct) });
    }
    o.require(worst <= 1e-8, "layer cake");

    const double l12 = lorentzNorm(TestFunction::indicator(1, 1.0), 2.0, 1.0).value();
    const double linf = lorentzNorm(TestFunction::radialPowerLog(1, 0.5, 0.0, kInf), 2.0, kInf).value();
    o.require(rel(l12, 2.0 * std::sqrt(2.0)) <= 1e-8, "L^1_2 of the indicator");
    o.require(rel(linf, std::sqrt(2.0)) <= 1e-8, "L^inf_2 of |y|^-1/2");

    //empirical CDF: 10^6 uniform samples over a box containing the support
    double worstMc = 0.0;
    const std::pair<TestFunction, double> boxes[] = { { fs[0], 1.0 }, { fs[1], 1.0 }, { fs[2], 0.25 } };
    for (const auto& [f, half] : boxes) {
      const std::size_t N = 1000000;
      std::mt19937_64 rng(20261018);
      std::uniform_real_distribution<double> u(-half, half);
      std::vector<double> v(N);
      for (double& x : v) {
        double y = u(rng);
        if (y == 0.0)
          y = 1e-300;
        x = evalFunction(f, std::span<const double>(&y, 1));
      }
      std::sort(v.begin(), v.end(), std::greater<>());
      const RearrangementProfile fst = decreasingRearrangement(f);
      const double cell = 2.0 * half / double(N);
      for (int i = 0; i <= 200; ++i) {
        const double t = 0.01 * std::pow(1000.0, i / 200.0);
        const double exact = fst(t);
        const std::size_t idx = std::size_t(t / cell);
        const double emp = idx < N ? v[idx] : 0.0;
        worstMc = std::max(worstMc, exact == 0.0 ? std::abs(emp) : rel(emp, exact));
      }
    }
    o.require(worstMc <= 0.02, "empirical f*");
    o.detail << " layer cake " << worst << ", L^1_2 " << l12 << ", L^inf_2 " << linf << ", mc sup err " << worstMc;
  }

  //8: Lorentz endpoint
  void lorentzEndpoint(Outcome& o)
  {
    TheoremParams t;
    t.n = 1;
    t.p = 1.0;
    t.alpha = 0.5;
    for (double kappa : { 2.0, 2.5, 3.0 }) {
      t.kappa = kappa;
      o.require(checkTheorem(TheoremId::Thm5_6, t).conclusion == Conclusion::Includes,
                "includes at kappa " + std::to_string(kappa));
    }
    const TestFunction f = TestFunction::tailPower(1, 0.5);
    const Extended k3 = lorentzNorm(f, 3.0, 1.0), k2 = lorentzNorm(f, 2.0, 1.0);
    o.require(k3.isFinite(), "L^1_3 finite");
    o.require(k2.isInfinite(), "L^1_2 infinite");
    o.detail << " L^1_3 " << k3.str() << ", L^1_2 " << k2.str();
  }

  //9: property suites
  void properties(Outcome& o)
  {
    const std::vector<double> grid = logGrid(1e-10, 10.0, 24);
    const std::pair<TestFunction, ScaleFunction> cases[] = {
      { TestFunction::radialPowerLog(1, 0.25, 0.0, kInf), ScaleFunction::purePower(0.5) },
      { TestFunction::indicator(2, 1.0), ScaleFunction::purePower(1.0) },
      { TestFunction::tailPower(1, 2.0), ScaleFunction::purePower(0.5) },
      { TestFunction::bumpSum(1, 0.5, 8), ScaleFunction::purePower(0.5) },
      { TestFunction::radialPowerLog(3, 0.5, 0.0, 1.0), ScaleFunction::powerLog(1.0, -2.0) },
    };
    bool monotone = true;
    double worstDoubling = 0.0;
    for (const auto& [f, psi] : cases) {
      const ModulusCurve c = modulusCurve(f, 1.0, psi, grid);
      for (std::size_t i = 1; i < c.values.size(); ++i)
        monotone = monotone && c.values[i].value() >= c.values[i - 1].value() * (1 - 1e-9);
      worstDoubling = std::max(worstDoubling, doublingCheck(c).maxRatio);
    }
    o.require(monotone, "monotone");
    o.require(std::isfinite(worstDoubling) && worstDoubling < 16.0, "doubling bounded");

    //origin sup versus Monte-Carlo at random centres
    const std::pair<TestFunction, ScaleFunction> radial[] = {
      { TestFunction::radialPowerLog(1, 0.25, 0.0, 1.0), ScaleFunction::purePower(0.5) },
      { TestFunction::indicator(2, 1.0), ScaleFunction::purePower(1.0) },
      { TestFunction::radialPowerLog(3, 0.5, 0.0, 1.0), ScaleFunction::purePower(1.5) },
    };
    std::mt19937_64 rng(77);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int excess = 0, originMismatch = 0;
    const double r = 0.5;
    for (const auto& [f, psi] : radial) {
      const int n = f.n;
      const double origin = ballIntegralAt(f, 1.0, psi, 0.0, r).value();
      auto kernel = [&, n](std::span<const double> x) {
        return [&, n, x0 = std::vector<double>(x.begin(), x.end())](std::span<const double> y) {
          double d2 = 0.0;
          for (int j = 0; j < n; ++j)
            d2 += (y[j] - x0[j]) * (y[j] - x0[j]);
          const double d = std::sqrt(d2);
          return evalFunction(f, y) * psi(d) / std::pow(d, n);
        };
      };
      const std::array<double, 3> zero{};
      const McEstimate at0 = integrateBallMc(kernel(std::span<const double>(zero.data(), n)),
                                             std::span<const double>(zero.data(), n), r, 1000000, 5);
      if (std::abs(at0.value - origin) > 4 * at0.stdError)
        ++originMismatch;
      for (int k = 0; k < 200; ++k) {
        std::array<double, 3> x{};
        double norm = 0.0;
        for (int j = 0; j < n; ++j) {
          x[j] = gauss(rng);
          norm += x[j] * x[j];
        }
        const double len = 1.5 * unit(rng) / std::sqrt(norm);
        for (int j = 0; j < n; ++j)
          x[j] *= len;
        const std::span<const double> xs(x.data(), n);
        const McEstimate e = integrateBallMc(kernel(xs), xs, r, 4000, 1000 + k);
        if (e.value > origin + 4 * e.stdError)
          ++excess;
      }
    }
    o.require(originMismatch == 0, "origin Monte-Carlo");
    o.require(excess == 0, "no centre beats the origin");

    //Hoelder ratio, p2 = 1 < p1 = 2
    const ScaleFunction psi = ScaleFunction::purePower(0.5);
    const double bound = std::pow(2.0, 1.0 - 0.5);//omega^(1/p2 - 1/p1)
    bool holderOk = true;
    for (const TestFunction& f : { TestFunction::radialPowerLog(1, 0.2, 0.0, kInf), TestFunction::indicator(1, 1.0) }) {
      double maxes[2] = { 0.0, 0.0 };
      for (int refine = 0; refine < 2; ++refine) {
        const std::vector<double> g = logGrid(1e-8, 10.0, refine ? 47 : 24);
        const ModulusCurve c1 = modulusCurve(f, 1.0, psi, g), c2 = modulusCurve(f, 2.0, psi, g);
        for (std::size_t i = 0; i < g.size(); ++i) {
          const double denom = c2.values[i].value() * std::pow(integralScaleOverT(psi, g[i]).value(), 0.5);
          maxes[refine] = std::max(maxes[refine], c1.values[i].value() / denom);
        }
      }
      holderOk = holderOk && maxes[0] <= bound * (1 + 1e-9) && maxes[1] <= bound * (1 + 1e-9) &&
                 rel(maxes[0], maxes[1]) <= kStabilityTolerance;
    }
    o.require(holderOk, "Hoelder ratio");

    //sampled doubling certificate
    int outside = 0;
    std::uniform_real_distribution<double> lr(std::log(1e-12), std::log(10.0)), us(1.0, 2.0);
    for (auto [a, b] : { std::pair{ 0.5, -2.0 }, std::pair{ 0.0, -2.0 }, std::pair{ 1.0, 1.0 } }) {
      const ScaleFunction s = ScaleFunction::powerLog(a, b);
      const ConditionReport rep = checkConditions(s, 1);
      if (rep.doubling != Verdict::Holds || !rep.A1) {
        ++outside;
        continue;
      }
      for (int i = 0; i < 10000; ++i) {
        const double x = std::exp(lr(rng)), y = x * us(rng);
        const double q = s(y) / s(x);
        if (q > *rep.A1 * (1 + 1e-12) || q < 1.0 / *rep.A1 * (1 - 1e-12))
          ++outside;
      }
    }
    o.require(outside == 0, "doubling certificate");
    o.detail << " max doubling ratio " << worstDoubling;
  }

}

int main()
{
  const std::pair<const char*, void (*)(Outcome&)> criteria[] = {
    { "closed-form modulus 2/k", closedFormModulus },
    { "bump sum separates S and S~", bumpSeparation },
    { "proper inclusions by divergence", properInclusions },
    { "quantitative Morrey bound", quantitativeBound },
    { "envelope fit round trip", envelopeRoundTrip },
    { "weak Morrey counterexample", weakCounterexample },
    { "rearrangement and Lorentz", rearrangement },
    { "Lorentz endpoint", lorentzEndpoint },
    { "property suites", properties },
  };
  int failures = 0;
  int id = 0;
  for (const auto& [name, check] : criteria) {
    ++id;
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " threw: " << e.what();
    }
    std::printf("[%s] %d %s:%s\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.str().c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures;
}
