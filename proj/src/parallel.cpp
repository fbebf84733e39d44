// Copyright 2026 The otgroups authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "otgroups/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace otg {

int thread_limit() {
  static const int limit = [] {
    if (const char* env = std::getenv("OTGROUPS_THREADS")) {
      try {
        int n = std::stoi(env);
        if (n >= 1) return n;
      } catch (...) {
        // fall through to the OpenMP default
      }
    }
    return omp_get_max_threads();
  }();
  return limit;
}

}  // namespace otg
