// Copyright 2026 The purespinor Authors
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

// Library umbrella (everything except the CLI front end).

#pragma once

#include "purespinor/clifford.hpp"
#include "purespinor/error.hpp"
#include "purespinor/four_qubit.hpp"
#include "purespinor/lie_symmetry.hpp"
#include "purespinor/numeric.hpp"
#include "purespinor/pure_spinor.hpp"
#include "purespinor/qubit_geometry.hpp"
