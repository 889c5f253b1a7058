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

#ifndef STUMMEL_TEST_SUPPORT_HPP
#define STUMMEL_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>

namespace testing {

  inline double relErr(double got, double want)
  {
    if (got == want)
      return 0.0;
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
  }

  inline bool close(double got, double want, double rel)
  {
    return relErr(got, want) <= rel;
  }

}

#define CHECK_REL(got, want, rel) CHECK_MESSAGE(::testing::close((got), (want), (rel)), \
  "got " << (got) << " want " << (want) << " rel " << ::testing::relErr((got), (want)))

#endif
