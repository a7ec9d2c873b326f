// Copyright (c) 2026, the edgeplan authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace edgeplan {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define EDGEPLAN_DEFINE_ERROR(NAME) \
  struct NAME : Error {             \
    using Error::Error;             \
  }

EDGEPLAN_DEFINE_ERROR(DuplicateId);
EDGEPLAN_DEFINE_ERROR(DanglingEdge);
EDGEPLAN_DEFINE_ERROR(CycleDetected);
EDGEPLAN_DEFINE_ERROR(MultipleSources);
EDGEPLAN_DEFINE_ERROR(MultipleSinks);
EDGEPLAN_DEFINE_ERROR(NotDecomposable);
EDGEPLAN_DEFINE_ERROR(UnhostableNode);
EDGEPLAN_DEFINE_ERROR(NoRoute);
EDGEPLAN_DEFINE_ERROR(NoFeasiblePlan);
EDGEPLAN_DEFINE_ERROR(MissingMetrics);
EDGEPLAN_DEFINE_ERROR(NonChainPlan);
EDGEPLAN_DEFINE_ERROR(PipelineTooDeep);
EDGEPLAN_DEFINE_ERROR(UnschedulableTask);
EDGEPLAN_DEFINE_ERROR(DeadDevice);
EDGEPLAN_DEFINE_ERROR(DeadlinePassed);
EDGEPLAN_DEFINE_ERROR(InputError);
EDGEPLAN_DEFINE_ERROR(UsageError);

#undef EDGEPLAN_DEFINE_ERROR

}  // namespace edgeplan
