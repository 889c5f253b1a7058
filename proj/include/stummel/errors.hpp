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

#ifndef STUMMEL_ERRORS_HPP
#define STUMMEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stummel {

  enum class ErrorCode {
    InvalidArgument,
    NonPositiveArgument,
    OutOfTableRange,
    SingularPoint,
    DimensionTooLarge,
    NonconvergentQuadrature,
    UndefinedOnDivergent,
    MissingParameter,
    InapplicableHypotheses,
    UnfittableCurve,
    ResidualTooLarge,
    Parse
  };

  const char* errorCodeName(ErrorCode) noexcept;

  class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), m_code(code) {}
    ErrorCode code() const noexcept { return m_code; }
  private:
    ErrorCode m_code;
  };

  [[noreturn]] inline void fail(ErrorCode code, const std::string& msg)
  {
    throw Error(code, msg);
  }

  inline void require(bool cond, const std::string& msg)
  {
    if (!cond)
      throw Error(ErrorCode::InvalidArgument, msg);
  }

}

#endif
