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
#include "stummel/extended.hpp"
#include <cmath>
#include <cstdio>

namespace stummel {

  const char* errorCodeName(ErrorCode c) noexcept
  {
    switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::OutOfTableRange: return "OutOfTableRange";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NonconvergentQuadrature: return "NonconvergentQuadrature";
    case ErrorCode::UndefinedOnDivergent: return "UndefinedOnDivergent";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::InapplicableHypotheses: return "InapplicableHypotheses";
    case ErrorCode::UnfittableCurve: return "UnfittableCurve";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::Parse: return "Parse";
    }
    return "InvalidArgument";
  }

  std::string formatDouble(double v)
  {
    if (std::isinf(v))
      return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
      return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

}
