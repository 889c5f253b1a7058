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

#include "stummel/errors.hpp"
#include "stummel/json_io.hpp"
#include "stummel/runner.hpp"
#include <doctest.h>
#include <cmath>

using namespace stummel;

TEST_CASE("scale descriptors round trip")
{
  const ScaleFunction ss[] = {
    ScaleFunction::purePower(0.5, 2.0),
    ScaleFunction::powerLog(0.0, -2.0),
    ScaleFunction::powerLog(0.75, 1.0, 0.05, 3.0),
    ScaleFunction::tabulated({ { 0.01, 0.2 }, { 0.1, 0.5 }, { 1.0, 1.0 } }),
  };
  for (const ScaleFunction& s : ss) {
    CHECK(scaleFromJson(toJson(s)) == s);
    CHECK(scaleFromJson(Json::parse(toJson(s).dump())) == s);
  }
}

TEST_CASE("function descriptors round trip")
{
  const TestFunction fs[] = {
    TestFunction::radialPowerLog(1, 0.5, 0, INFINITY),
    TestFunction::radialPowerLog(2, 0.0, 2.0, 0.0183156, 2.0),
    TestFunction::tailPower(3, 1.5),
    TestFunction::bumpSum(1, 0.5, 12),
    TestFunction::indicator(2, 1.0),
    TestFunction::zero(1),
  };
  for (const TestFunction& f : fs)
    CHECK(functionFromJson(Json::parse(toJson(f).dump())) == f);
}

TEST_CASE("space descriptors round trip")
{
  const SpaceSpec ss[] = {
    SpaceSpec::classicalMorrey(1, 0.5),
    SpaceSpec::generalizedWeakMorrey(2, ScaleFunction::purePower(-0.25)),
    SpaceSpec::lorentz(2, INFINITY),
    SpaceSpec::lebesgue(1.5),
    SpaceSpec::weakLebesgue(1),
  };
  for (const SpaceSpec& s : ss)
    CHECK(spaceFromJson(Json::parse(toJson(s).dump())) == s);
}

TEST_CASE("infinite values")
{
  CHECK(jsonNumber(INFINITY) == "inf");
  CHECK(std::isinf(numberFromJson(Json("infinite"), "x")));
  CHECK(jsonExtended(Extended::infinite()) == "infinite");
  CHECK_THROWS_AS(numberFromJson(Json("big"), "x"), Error);
}

TEST_CASE("malformed descriptors")
{
  CHECK_THROWS_AS(scaleFromJson(Json::parse(R"({"kind":"spline"})")), Error);
  CHECK_THROWS_AS(functionFromJson(Json::parse(R"({"kind":"bumpsum","n":1})")), Error);
  CHECK_THROWS_AS(functionFromJson(Json::parse(R"({"kind":"bumpsum","n":1.5,"alpha":0.5,"K":4})")), Error);
}

TEST_CASE("run configs")
{
  const RunConfig c = parseRunConfig(std::string_view(
    R"({"command":"modulus","function":{"kind":"indicator","n":1,"R":1},"scale":{"kind":"purepower","a":0.5},"p":1,"grid":"1e-4,1,8","seed":7})"));
  CHECK(c.command == "modulus");
  CHECK(c.grid.points == 8);
  CHECK(c.seed == 7);
  CHECK_THROWS_AS(parseRunConfig(std::string_view(R"({"command":"modulus","bogus":1})")), Error);
  CHECK_THROWS_AS(parseRunConfig(std::string_view(R"({"command":"modulus","grid":"1,0.1,8"})")), Error);
  CHECK_THROWS_AS(parseRunConfig(std::string_view(R"({"command":"modulus","grid":"1e-3,1,4"})")), Error);
  CHECK_THROWS_AS(parseRunConfig(std::string_view("{not json")), Error);
  CHECK_THROWS_AS(run(parseRunConfig(std::string_view(R"({"command":"modulus"})"))), Error);
}

TEST_CASE("runs are deterministic")
{
  const char* cfg =
    R"({"command":"modulus","function":{"kind":"bumpsum","n":2,"alpha":1,"K":5},"scale":{"kind":"purepower","a":1},"p":1,"grid":"1e-4,1,8","seed":3,"output":{"format":"csv"}})";
  const RunResult a = run(parseRunConfig(std::string_view(cfg)));
  const RunResult b = run(parseRunConfig(std::string_view(cfg)));
  CHECK(a.text == b.text);
  CHECK(a.text.rfind("r,eta,status\n", 0) == 0);
}
