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

#ifndef STUMMEL_PARALLEL_HPP
#define STUMMEL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace stummel {

  //Worker count: STUMMEL_THREADS when set (>= 1), else the hardware
  //concurrency capped at 8.
  unsigned workerCount();

  //Runs body(i) for i in [0, count). Each index writes only its own output
  //slot, so results do not depend on scheduling. The first exception thrown
  //by any worker is rethrown on the calling thread.
  void parallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}

#endif
