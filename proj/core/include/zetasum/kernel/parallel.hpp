// Copyright 2026 The zetasum Authors
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
// Minimal fork-join helper. Work is split statically by index, so which thread
// runs an index never affects results; reductions stay deterministic as long
// as callers write per-index outputs and combine them in index order.

#pragma once

#include <functional>

#include "zetasum/common.hpp"

namespace zetasum::kernel {

/// Worker count for subsequent parallel_for calls (process-wide). Values < 1
/// select std::thread::hardware_concurrency().
void set_thread_count(int threads);
int thread_count();

/// Calls body(i) for every i in [0, n). Nested calls run serially on the
/// calling thread. The first exception thrown by any worker is rethrown.
void parallel_for(Index n, const std::function<void(Index)>& body);

}  // namespace zetasum::kernel
