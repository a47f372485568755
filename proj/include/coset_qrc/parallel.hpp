// Copyright 2026 The coset-qrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COSET_QRC_PARALLEL_HPP_
#define COSET_QRC_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace coset_qrc {

// Worker count: COSET_QRC_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
int thread_budget();

// Runs fn(i) for i in [0, count) on up to num_threads workers. Exceptions are
// captured and the first one rethrown after all workers join. num_threads < 1
// means thread_budget().
void parallel_for(std::size_t count, int num_threads, const std::function<void(std::size_t)>& fn);

}  // namespace coset_qrc

#endif  // COSET_QRC_PARALLEL_HPP_
