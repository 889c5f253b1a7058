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

#include "stummel/parallel.hpp"
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace stummel {

  unsigned workerCount()
  {
    if (const char* env = std::getenv("STUMMEL_THREADS")) {
      try {
        const long v = std::stol(env);
        if (v >= 1)
          return static_cast<unsigned>(std::min<long>(v, 256));
      } catch (...) {
      }
    }
    return std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  }

  void parallelFor(std::size_t count, const std::function<void(std::size_t)>& body)
  {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(workerCount(), count));
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i)
        body(i);
      return;
    }
    std::atomic<std::size_t> next{ 0 };
    std::exception_ptr error;
    std::mutex errorMutex;
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count)
          return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(errorMutex);
          if (!error)
            error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
    if (error)
      std::rethrow_exception(error);
  }

}
