// Copyright 2026 The gmacwt Authors.
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

// Umbrella header: coalitional secrecy games on the multiple-access wiretap
// channel with adversarial jamming, in evaluation order.

#include "gmacwt/model.hpp"       // parameters, coalitions, faults
#include "gmacwt/value.hpp"       // coalition value functions
#include "gmacwt/game.hpp"        // tabulated games, core, emptiness tests
#include "gmacwt/allocation.hpp"  // the fair split and its axioms
#include "gmacwt/region.hpp"      // rate regions and polygon exports
#include "gmacwt/oracle.hpp"      // independent cross-checks
