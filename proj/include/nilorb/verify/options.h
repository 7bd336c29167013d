// Copyright 2026 The nilorb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILORB_VERIFY_OPTIONS_H
#define NILORB_VERIFY_OPTIONS_H

#include <cstdint>

#include "nilorb/perm/parallel.h"
#include "nilorb/verify/bounds.h"

namespace nilorb {

struct VerifyOptions {
    unsigned jobs = 1;
    Deadline deadline;
    BoundConstants bounds;
    /// Largest ambient order handed to nilpotent subgroup enumeration.
    std::uint64_t nilpotent_cap = 1'000'000;
};

}  // namespace nilorb

#endif
