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

#include "support.hpp"
#include "stummel/errors.hpp"
#include "stummel/inclusion.hpp"
#include <doctest.h>
#include <cmath>
#include <random>

using namespace stummel;

namespace {
  const double kInf = INFINITY;

  TheoremParams base()
  {
    TheoremParams t;
    t.n = 1;
    return t;
  }
}

TEST_CASE("theorem names round trip")
{
  CHECK(allTheorems().size() == 15);
  for (TheoremId id : allTheorems())
    CHECK(parseTheoremId(theoremIdName(id)) == id);
  CHECK_FALSE(parseTheoremId("Thm9_9"));
}

TEST_CASE("missing parameters are reported")
{
  CHECK_THROWS_AS(checkTheorem(TheoremId::Thm4_1, base()), Error);
  try {
    checkTheorem(TheoremId::Cor3_2, base());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingParameter);
  }
}

TEST_CASE("one-exponent statements")
{
  TheoremParams t = base();
  t.p = 1;
  t.alpha = 0.25;
  t.beta = 0.5;
  CHECK(checkTheorem(TheoremId::Cor3_2, t).conclusion == Conclusion::Includes);
  t.beta = 0.2;
  CHECK(checkTheorem(TheoremId::Cor3_2, t).conclusion == Conclusion::NotApplicable);

  TheoremParams c = base();
  c.p1 = 2;
  c.p2 = 1;
  c.alpha = 0.5;
  CHECK(checkTheorem(TheoremId::Cor3_3, c).conclusion == Conclusion::Includes);
  c.p2 = 3;
  CHECK(checkTheorem(TheoremId::Cor3_3, c).conclusion == Conclusion::NotApplicable);

  TheoremParams l = base();
  l.alpha = 0.5;
  l.p = 1;
  for (double kappa : { 2.0, 2.5, 3.0 }) {
    l.kappa = kappa;
    CHECK(checkTheorem(TheoremId::Thm5_6, l).conclusion == Conclusion::Includes);
  }
  l.kappa = 1.5;
  CHECK(checkTheorem(TheoremId::Thm5_6, l).conclusion == Conclusion::NotApplicable);
}

TEST_CASE("morrey to stummel hypotheses")
{
  TheoremParams t = base();
  t.p1 = 1;
  t.p2 = 1;
  t.psi1 = ScaleFunction::purePower(-0.5);
  t.psi2 = ScaleFunction::purePower(0.75);
  const HypothesisChecklist h = checkTheorem(TheoremId::Thm4_1, t);
  CHECK(h.conclusion == Conclusion::Includes);
  for (const HypothesisItem& it : h.items)
    CHECK(it.status == Verdict::Holds);
  t.psi2 = ScaleFunction::purePower(0.5);//product integral diverges
  CHECK(checkTheorem(TheoremId::Thm4_1, t).conclusion == Conclusion::NotApplicable);
  t.psi2 = ScaleFunction::purePower(0.75);
  CHECK(checkTheorem(TheoremId::Thm4_8, t).conclusion == Conclusion::NotApplicable);//needs p2 < p1
  t.p1 = 2;
  CHECK(checkTheorem(TheoremId::Thm4_8, t).conclusion == Conclusion::Includes);
}

TEST_CASE("printed index orders are kept apart")
{
  TheoremParams t = base();
  t.psi1 = ScaleFunction::purePower(-0.5);
  t.p1 = 1;
  t.p2 = 2;
  CHECK(checkTheorem(TheoremId::Thm4_9, t).conclusion == Conclusion::Includes);
  CHECK(checkTheorem(TheoremId::Thm4_5, t).conclusion == Conclusion::NotApplicable);
  CHECK_FALSE(checkTheorem(TheoremId::Thm4_9, t).note.empty());
}

TEST_CASE("near-zero domination")
{
  const Domination d = dominatesNearZero(ScaleFunction::purePower(-0.5), ScaleFunction::purePower(0.75));
  CHECK(d.status == Verdict::Holds);
  REQUIRE(d.c);
  REQUIRE(d.delta);
  for (double t = *d.delta * 0.999; t > 1e-12; t *= 0.7)
    CHECK(std::pow(t, 0.75) <= *d.c * std::pow(t, -0.5) * (1 + 1e-12));
  CHECK(dominatesNearZero(ScaleFunction::purePower(0.75), ScaleFunction::purePower(-0.5)).status == Verdict::Fails);
  const ScaleFunction l1 = ScaleFunction::powerLog(0.5, 1.0), l2 = ScaleFunction::powerLog(0.5, -1.0);
  const Domination e = dominatesNearZero(l1, l2);
  CHECK(e.status == Verdict::Holds);
  for (double t = *e.delta * 0.999; t > 1e-12; t *= 0.7)
    CHECK(l2(t) <= *e.c * l1(t) * (1 + 1e-12));
  CHECK(dominatesNearZero(l2, l1).status == Verdict::Fails);
}

TEST_CASE("quantitative bound needs its hypotheses")
{
  const std::vector<double> grid = logGrid(1e-6, 10.0, 16);
  const ScaleFunction psi1 = ScaleFunction::purePower(-0.5), psi2 = ScaleFunction::purePower(0.75);
  const BoundReport b = verifyQuantitativeBound(TestFunction::indicator(1, 1.0), 1, 1, psi1, psi2, grid);
  CHECK(std::isfinite(b.maxRatio));
  CHECK(b.stable);
  CHECK(verifyQuantitativeBound(TestFunction::zero(1), 1, 1, psi1, psi2, grid).maxRatio == 0.0);
  CHECK_THROWS_AS(verifyQuantitativeBound(TestFunction::radialPowerLog(1, 0.25, 0, kInf), 1, 1, psi1, psi2, grid),
                  Error);
  CHECK_THROWS_AS(verifyQuantitativeBound(TestFunction::indicator(1, 1.0), 1, 1, psi1,
                                          ScaleFunction::purePower(0.5), grid),
                  Error);
}

TEST_CASE("envelope fit and morrey prediction")
{
  const TestFunction f = TestFunction::radialPowerLog(1, 0.25, 0, kInf);
  const ModulusCurve c = modulusCurve(f, 1, ScaleFunction::purePower(0.5), defaultGrid());
  const EnvelopeFit fit = fitEnvelope(c);
  CHECK(fit.points == kEnvelopePoints);
  CHECK(std::abs(fit.sigma - 0.25) < 1e-4);
  CHECK(fit.residual >= 0.0);
  const MorreyPrediction m = predictAndCheckMorrey(fit, f, 1, 1, 0.5, 1);
  CHECK(m.strongFinite);
  CHECK(m.weakFinite);
  CHECK(std::abs(m.lambda - 0.75) < 1e-4);
  EnvelopeFit rough = fit;
  rough.residual = 0.1;
  CHECK_THROWS_AS(predictAndCheckMorrey(rough, f, 1, 1, 0.5, 1), Error);
  ModulusCurve few = c;
  few.r.resize(3);
  few.values.resize(3);
  CHECK_THROWS_AS(fitEnvelope(few), Error);
}

TEST_CASE("strong prediction implies weak")
{
  for (double gamma : { 0.1, 0.2, 0.3, 0.4 })
    for (double alpha : { 0.5, 0.7, 0.9 }) {
      if (gamma >= alpha)
        continue;
      const TestFunction f = TestFunction::radialPowerLog(1, gamma, 0, kInf);
      const EnvelopeFit fit = fitEnvelope(modulusCurve(f, 1, ScaleFunction::purePower(alpha), logGrid(1e-12, 1e-2, 16)));
      const MorreyPrediction m = predictAndCheckMorrey(fit, f, 1, 1, alpha, 1);
      if (m.strongFinite)
        CHECK(m.weakFinite);
    }
}

TEST_CASE("kernel domination between alpha and beta moduli")
{
  const std::vector<double> grid = logGrid(1e-8, 1.0, 12);
  const TestFunction fs[] = { TestFunction::radialPowerLog(1, 0.2, 0, kInf), TestFunction::indicator(1, 0.5),
                              TestFunction::bumpSum(1, 0.25, 6) };
  for (const TestFunction& f : fs) {
    const ModulusCurve a = modulusCurve(f, 1, ScaleFunction::purePower(0.3), grid);
    const ModulusCurve b = modulusCurve(f, 1, ScaleFunction::purePower(0.6), grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
      CHECK(b.values[i].value() <= std::pow(grid[i], 0.3) * a.values[i].value() * (1 + 1e-9));
  }
}

TEST_CASE("soundness sweep: includes never meets a non-member")
{
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> ua1(-0.9, -0.05), ua2(0.05, 1.5), up(1.0, 3.0), ug(0.05, 0.9);
  const std::vector<double> grid = logGrid(1e-12, 10.0, 12);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    TheoremParams t;
    t.n = 1;
    t.p1 = up(rng);
    t.p2 = std::min(*t.p1, up(rng));
    t.psi1 = ScaleFunction::purePower(ua1(rng));
    t.psi2 = ScaleFunction::purePower(ua2(rng));
    if (checkTheorem(TheoremId::Thm4_1, t).conclusion != Conclusion::Includes)
      continue;
    const TestFunction f = i % 2 ? TestFunction::indicator(1, 1.0)
                                 : TestFunction::radialPowerLog(1, ug(rng) / *t.p1, 0, 1.0);
    if (!morreyNorm(f, SpaceSpec::generalizedMorrey(*t.p1, *t.psi1)).value.isFinite())
      continue;
    ++checked;
    const Classification c = classify(f, *t.p2, *t.psi2, grid);
    CHECK(c.stummel.status != Membership::NonMember);
  }
  CHECK(checked > 20);
}
