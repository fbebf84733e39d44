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

#ifndef OTGROUPS_PARALLEL_HPP
#define OTGROUPS_PARALLEL_HPP

namespace otg {

/// Execution policy for the data-parallel kernels. Every parallel kernel
/// has a serial twin producing identical results; Serial is the reference
/// path used in tests and benchmarks.
enum class Exec { Serial, Parallel };

/// Number of OpenMP threads parallel kernels may use. Honors the
/// OTGROUPS_THREADS environment variable when set, otherwise the OpenMP
/// default. Always at least 1.
int thread_limit();

}  // namespace otg

#endif  // OTGROUPS_PARALLEL_HPP
