// Copyright 2026 The tanglesim Authors
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

#include "tanglesim/bath.hpp"
#include "tanglesim/cmatrix.hpp"
#include "tanglesim/dynamics.hpp"
#include "tanglesim/error.hpp"
#include "tanglesim/esd.hpp"
#include "tanglesim/layout.hpp"
#include "tanglesim/linalg.hpp"
#include "tanglesim/measures.hpp"
#include "tanglesim/parallel.hpp"
#include "tanglesim/roof.hpp"
#include "tanglesim/state.hpp"
