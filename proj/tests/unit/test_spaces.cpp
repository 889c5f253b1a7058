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

#include "oracles/oracle_values.hpp"
#include "support.hpp"
#include "stummel/errors.hpp"
#include "stummel/geometry.hpp"
#include "stummel/quad.hpp"
#include "stummel/spaces.hpp"
#include <doctest.h>
#include <cmath>

using namespace stummel;

namespace {
  const double kInf = INFINITY;
}

TEST_CASE("morrey norms against brute-force sups")
{
  const NormReport t = morreyNorm(TestFunction::tailPower(1, 2.0), SpaceSpec::classicalMorrey(1, 0.5));
  REQUIRE(t.value.isFinite());
  CHECK_REL(t.value.value(), oracle::kMorreyTailHalf, 1e-6);
  const NormReport w = weakMorreyNorm(TestFunction::radialPowerLog(1, 0.25, 0, kInf), SpaceSpec::classicalWeakMorrey(1, 0.75));
  CHECK_REL(w.value.value(), oracle::kWeakMorreyQuarter, 1e-9);
  CHECK_REL(morreyNorm(TestFunction::radialPowerLog(1, 0.5, 0, kInf), SpaceSpec::classicalMorrey(1, 0.5)).value.value(),
            4.0, 1e-12);
  CHECK(morreyNorm(TestFunction::radialPowerLog(1, 0.5, 0, kInf), SpaceSpec::classicalMorrey(1, 0.25)).value.isInfinite());
  CHECK(weakMorreyNorm(TestFunction::radialPowerLog(1, 1.0, 0, kInf), SpaceSpec::classicalWeakMorrey(1, 0.5))
          .value.isInfinite());
  CHECK_REL(weakMorreyNorm(TestFunction::radialPowerLog(1, 1.0, 0, kInf), SpaceSpec::classicalWeakMorrey(1, 0.0))
              .value.value(),
            2.0, 1e-12);
}

TEST_CASE("lorentz norms against reference values")
{
  CHECK_REL(lorentzNorm(TestFunction::tailPower(1, 0.5), 3, 1).value(), oracle::kLorentzTailN1, 1e-8);
  CHECK_REL(lorentzNorm(TestFunction::tailPower(2, 1.0), 3, 1).value(), oracle::kLorentzTailN2, 1e-8);
  CHECK_REL(lorentzNorm(TestFunction::bumpSum(1, 0.5, 4), 2, 1).value(), oracle::kLorentzBumpK4, 1e-10);
  CHECK_REL(lorentzNorm(TestFunction::radialPowerLog(1, 0.25, 0, 1.0), 2, 1).value(), oracle::kLorentzQuarter, 1e-8);
  CHECK_REL(lorentzNorm(TestFunction::tailPower(1, 0.5), 3, kInf).value(), oracle::kLorentzTailN1Sup, 1e-8);
  CHECK(lorentzNorm(TestFunction::tailPower(1, 0.5), 2, 1).isInfinite());
}

TEST_CASE("layer cake")
{
  const TestFunction fs[] = {
    TestFunction::indicator(1, 1.0),
    TestFunction::radialPowerLog(1, 0.5, 0, 1.0),
    TestFunction::radialPowerLog(2, 1.0, 0, 0.5, 2.0),
    TestFunction::tailPower(1, 2.0),
    TestFunction::bumpSum(1, 0.5, 4),
  };
  for (const TestFunction& f : fs) {
    const double p = 1.0;
    const double direct = std::pow(lebesgueNorm(f, p).value(), p);
    const RearrangementProfile fs = decreasingRearrangement(f);
    std::vector<double> br = fs.breakpoints();
    const double tail = fs.totalSupport.isFinite() ? fs.totalSupport.value() : kInf;
    double viaStar = 0.0;
    std::vector<double> cuts{ 0.0 };
    for (double b : br)
      if (b > 0 && b < tail)
        cuts.push_back(b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      viaStar += integrateGK([&](double t) { return fs(t); }, cuts[i], cuts[i + 1]);
    const double last = cuts.back();
    if (std::isfinite(tail))
      viaStar += last == 0.0 ? integrateDyadicFromZero([&](double t) { return fs(t); }, tail)
                             : integrateGK([&](double t) { return fs(t); }, last, tail);
    else
      viaStar += (last == 0.0 ? integrateDyadicFromZero([&](double t) { return fs(t); }, 1.0) : 0.0) +
                 integrateDyadicToInfinity([&](double t) { return fs(t); }, last == 0.0 ? 1.0 : last);
    CHECK_REL(viaStar, direct, 1e-8);
  }
}

TEST_CASE("rearrangement shape")
{
  const RearrangementProfile fs = decreasingRearrangement(TestFunction::bumpSum(1, 0.5, 6));
  double prev = INFINITY;
  for (double t = 1e-9; t < 1.0; t *= 1.3) {
    CHECK(fs(t) <= prev);
    prev = fs(t);
  }
  REQUIRE(fs.totalSupport.isFinite());
  CHECK(fs(fs.totalSupport.value()) == 0.0);
  CHECK(fs(2.0 * fs.totalSupport.value()) == 0.0);
  //right-continuous at the first breakpoint
  const double b = fs.pieces.front().tHi;
  CHECK(fs(b) == fs.pieces[1].value);
  CHECK_REL(distributionFunction(TestFunction::tailPower(1, 0.5), 0.5).value(), 6.0, 1e-14);
}

TEST_CASE("weak morrey never exceeds morrey")
{
  const TestFunction fs[] = {
    TestFunction::radialPowerLog(1, 0.25, 0, kInf),
    TestFunction::radialPowerLog(1, 0.5, 0, 1.0),
    TestFunction::indicator(1, 1.0),
    TestFunction::tailPower(1, 2.0),
    TestFunction::radialPowerLog(2, 0.5, 0, kInf),
  };
  for (const TestFunction& f : fs)
    for (double lambda : { 0.0, 0.25, 0.5, 0.75, 1.0 }) {
      if (lambda > f.n)
        continue;
      const Extended s = morreyNorm(f, SpaceSpec::classicalMorrey(1, lambda)).value;
      if (!s.isFinite())
        continue;
      const Extended w = weakMorreyNorm(f, SpaceSpec::classicalWeakMorrey(1, lambda)).value;
      REQUIRE(w.isFinite());
      CHECK(w.value() <= s.value() * (1 + 1e-9));
    }
}

TEST_CASE("lorentz second index nesting")
{
  const TestFunction fs[] = {
    TestFunction::tailPower(1, 0.5),
    TestFunction::radialPowerLog(1, 0.25, 0, 1.0),
    TestFunction::bumpSum(1, 0.5, 6),
    TestFunction::indicator(2, 1.0),
  };
  const double ps[] = { 0.5, 1.0, 2.0, 4.0, kInf };
  for (const TestFunction& f : fs)
    for (double kappa : { 1.5, 2.0, 3.0, 5.0 })
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i; j < 5; ++j)
          if (lorentzNorm(f, kappa, ps[i]).isFinite())
            CHECK(lorentzNorm(f, kappa, ps[j]).isFinite());
}

TEST_CASE("classical and generalized morrey differ by v_n^(1/p)")
{
  const TestFunction f = TestFunction::radialPowerLog(2, 0.5, 0, 1.0);
  for (auto [p, lambda] : { std::pair{ 1.0, 1.5 }, std::pair{ 2.0, 1.0 }, std::pair{ 1.5, 2.0 } }) {
    const SpaceSpec cl = SpaceSpec::classicalMorrey(p, lambda);
    const SpaceSpec gen = SpaceSpec::generalizedMorrey(p, cl.equivalentScale(2));
    const double a = morreyNorm(f, cl).value.value(), b = morreyNorm(f, gen).value.value();
    CHECK_REL(a, cl.classicalFactor(2) * b, 1e-10);
    CHECK_REL(cl.classicalFactor(2), std::pow(M_PI, 1.0 / p), 1e-14);
  }
}

TEST_CASE("lebesgue and ball norms")
{
  CHECK_REL(lebesgueNorm(TestFunction::radialPowerLog(1, 0.5, 0, 1.0), 1).value(), 4.0, 1e-12);
  CHECK(lebesgueNorm(TestFunction::radialPowerLog(1, 0.5, 0, 1.0), 2).isInfinite());
  CHECK_REL(weakLebesgueNorm(TestFunction::radialPowerLog(1, 1.0, 0, kInf), 1).value(), 2.0, 1e-12);
  //lens area of two unit disks at distance 1
  CHECK_REL(ballLpPower(TestFunction::indicator(2, 1.0), 1, 1.0, 1.0).value(), 2 * M_PI / 3 - std::sqrt(3.0) / 2, 1e-9);
  CHECK_REL(ballLpPower(TestFunction::indicator(3, 1.0), 2, 0.5, 1.0).value(), ballBallOverlap(3, 1.0, 1.0, 0.5), 1e-9);
}

TEST_CASE("space validation")
{
  CHECK_THROWS_AS(SpaceSpec::classicalMorrey(1, 1.5).validate(1), Error);
  CHECK_THROWS_AS(SpaceSpec::lorentz(0.0, 1).validate(1), Error);
  CHECK_NOTHROW(SpaceSpec::lorentz(2.0, kInf).validate(1));
}
