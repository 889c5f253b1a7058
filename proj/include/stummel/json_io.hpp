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

#ifndef STUMMEL_JSON_IO_HPP
#define STUMMEL_JSON_IO_HPP

#include "stummel/catalog.hpp"
#include "stummel/inclusion.hpp"
#include "stummel/scale.hpp"
#include "stummel/spaces.hpp"
#include "stummel/stummel.hpp"
#include <json.hpp>
#include <string>
#include <vector>

namespace stummel {

  using Json = nlohmann::ordered_json;

  //Doubles travel as JSON numbers; +-inf as the strings "inf" / "-inf".
  Json jsonNumber(double);
  //Accepts numbers and "inf", "-inf", "infinite". Throws Parse.
  double numberFromJson(const Json&, const char* what);
  //A finite value as a number, an infinite one as "infinite".
  Json jsonExtended(const Extended&);

  Json toJson(const ScaleFunction&);
  ScaleFunction scaleFromJson(const Json&);

  Json toJson(const TestFunction&);
  TestFunction functionFromJson(const Json&);

  Json toJson(const SpaceSpec&);
  SpaceSpec spaceFromJson(const Json&);

  Json toJson(const ConditionReport&);
  Json toJson(const NormReport&);
  Json toJson(const ModulusCurve&);
  Json toJson(const MembershipVerdict&);
  Json toJson(const Classification&);
  Json toJson(const HypothesisChecklist&);
  Json toJson(const ClaimRow&);
  Json toJson(const std::vector<ClaimRow>&);

}

#endif
