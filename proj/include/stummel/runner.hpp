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

#ifndef STUMMEL_RUNNER_HPP
#define STUMMEL_RUNNER_HPP

#include "stummel/inclusion.hpp"
#include "stummel/json_io.hpp"
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stummel {

  enum class OutputFormat { Csv, Json };

  struct GridSpec {
    double rMin = 1e-12;
    double rMax = 1e2;
    int points = 48;

    //r_min > 0, r_min < r_max, points >= 8
    void validate() const;
    std::vector<double> radii() const;
  };

  //"r_min,r_max,points"
  GridSpec parseGrid(std::string_view);

  /// One analyzer invocation. Commands: psi-check, modulus, norm, classify,
  /// inclusion, verify-paper.
  struct RunConfig {
    std::string command;
    std::optional<TestFunction> function;
    std::optional<SpaceSpec> space;
    std::optional<std::string> theorem;//a TheoremId name or "all"
    TheoremParams params;//scale / scale1 / scale2 land in psi / psi1 / psi2
    GridSpec grid;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::string> outPath;
    OutputFormat format = OutputFormat::Json;
  };

  //Throws Parse or InvalidArgument on a malformed config.
  RunConfig parseRunConfig(const Json&);
  RunConfig parseRunConfig(std::string_view text);

  struct RunResult {
    std::string text;
    int exitCode = 0;//0 success, 1 disagreement
  };

  //Throws MissingParameter when the command lacks an input.
  RunResult run(const RunConfig&);

}

#endif
