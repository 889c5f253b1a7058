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
#include "stummel/catalog.hpp"
#include "stummel/errors.hpp"
#include "stummel/geometry.hpp"
#include <doctest.h>
#include <array>
#include <cmath>
#include <random>
#include <variant>

using namespace stummel;

TEST_CASE("geometry constants")
{
  for (int n = 1; n <= 6; ++n) {
    const Geometry g = Geometry::of(n);
    CHECK(g.v_n > 0);
    CHECK_REL(g.omega, n * g.v_n, 1e-12);
  }
  CHECK_REL(Geometry::of(3).v_n, 4.0 * M_PI / 3.0, 1e-14);
  CHECK_REL(ballBallOverlap(3, 1.0, 1.0, 0.0), 4.0 * M_PI / 3.0, 1e-12);
  CHECK(ballBallOverlap(2, 1.0, 1.0, 2.5) == 0.0);
}

TEST_CASE("bump supports are disjoint")
{
  for (int K = 3; K <= 40; ++K)
    CHECK(bumpSupportsDisjoint(K));
  const auto b = bumps(TestFunction::bumpSum(1, 0.5, 4));
  REQUIRE(b.size() == 2);
  CHECK(b[0].k == 3);
  CHECK_REL(b[0].height, std::pow(8.0, 1.5), 1e-14);
  CHECK_REL(b[1].radius, std::pow(8.0, -4), 1e-15);
  CHECK(defaultBumpCount(1e-12) == 16);
}

TEST_CASE("local integrability gate")
{
  CHECK(locallyIntegrable(TestFunction::radialPowerLog(1, 0.5, 0, INFINITY), 1.0));
  CHECK_FALSE(locallyIntegrable(TestFunction::radialPowerLog(1, 1.0, 0, INFINITY), 1.0));
  CHECK_FALSE(locallyIntegrable(TestFunction::radialPowerLog(1, 0.6, 0, INFINITY), 2.0));
  CHECK(locallyIntegrable(TestFunction::radialPowerLog(2, 1.5, 0, INFINITY), 1.0));
  //|y|^-1 |ln|y||^-2 near 0 in n = 1
  CHECK(locallyIntegrable(TestFunction::radialPowerLog(1, 1.0, 2.0, 0.1), 1.0));
  CHECK(locallyIntegrable(TestFunction::tailPower(1, 0.5), 1.0));
  CHECK(locallyIntegrable(TestFunction::bumpSum(1, 0.5, 10), 1.0));
}

TEST_CASE("eval agrees with the radial profile")
{
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const TestFunction fs[] = {
    TestFunction::radialPowerLog(1, 0.5, 0, INFINITY),
    TestFunction::radialPowerLog(2, 1.0, 2.0, 0.1, 2.0),
    TestFunction::radialPowerLog(3, 0.25, -1.0, 0.5),
    TestFunction::tailPower(2, 1.5),
    TestFunction::indicator(3, 1.0),
  };
  for (const TestFunction& f : fs) {
    const RadialProfile prof = std::get<RadialProfile>(radialProfile(f));
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
      std::array<double, 3> y{ u(rng), u(rng), u(rng) };
      double s = 0;
      for (int j = 0; j < f.n; ++j)
        s += y[j] * y[j];
      s = std::sqrt(s);
      const double v = evalFunction(f, std::span<const double>(y.data(), f.n));
      if (!testing::close(v, prof(s), 1e-12))
        ++bad;
    }
    CHECK(bad == 0);
  }
  CHECK(std::holds_alternative<NotRadial>(radialProfile(TestFunction::bumpSum(1, 0.5, 5))));
}

TEST_CASE("singular points and validation")
{
  const double origin[1] = { 0.0 };
  CHECK_THROWS_AS(evalFunction(TestFunction::radialPowerLog(1, 0.5, 0, 1.0), origin), Error);
  CHECK(evalFunction(TestFunction::indicator(1, 1.0), origin) == 1.0);
  CHECK_THROWS_AS(TestFunction::radialPowerLog(0, 0.5, 0, 1).validate(), Error);
  CHECK_THROWS_AS(TestFunction::radialPowerLog(1, 0.5, 1.0, 2.0).validate(), Error);
  CHECK(std::isinf(supNorm(TestFunction::radialPowerLog(1, 0.5, 0, 1.0))));
  CHECK_REL(supNorm(TestFunction::tailPower(1, 0.5)), 1.0, 1e-12);
}

TEST_CASE("tail power never takes the origin path")
{
  const RadialProfile prof = std::get<RadialProfile>(radialProfile(TestFunction::tailPower(1, 0.5)));
  CHECK_FALSE(prof.nonincreasing);
}

TEST_CASE("log-square support radius is e^(-2/beta) for pure powers")
{
  for (double beta : { 0.25, 0.5, 1.0, 2.0 })
    CHECK_REL(nondecreasingLogSquareRadius(ScaleFunction::purePower(beta)), std::exp(-2.0 / beta), 1e-12);
  const TestFunction f = stummelNotMorreyExample(1, ScaleFunction::purePower(0.5), 1.0);
  CHECK(f.kind == FunctionKind::RadialPowerLog);
  CHECK_REL(f.R, std::exp(-4.0), 1e-12);
  CHECK_REL(f.g, 0.5, 1e-15);
  CHECK_REL(f.h, 2.0, 1e-15);
}
