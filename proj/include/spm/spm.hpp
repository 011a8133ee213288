// Copyright 2026 The Authors.
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

#include "spm/approx.hpp"
#include "spm/auxiliary.hpp"
#include "spm/brute.hpp"
#include "spm/dispatch.hpp"
#include "spm/error.hpp"
#include "spm/graph.hpp"
#include "spm/io.hpp"
#include "spm/matching.hpp"
#include "spm/matroid.hpp"
#include "spm/random.hpp"
#include "spm/reductions.hpp"
#include "spm/regular.hpp"
#include "spm/solution.hpp"
