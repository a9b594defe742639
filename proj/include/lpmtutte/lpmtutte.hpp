// Copyright 2026 The lpmtutte Authors.
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

#include "lpmtutte/bigint.hpp"
#include "lpmtutte/diagram.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/io.hpp"
#include "lpmtutte/lattice_path.hpp"
#include "lpmtutte/minor.hpp"
#include "lpmtutte/multifan.hpp"
#include "lpmtutte/polynomial.hpp"
#include "lpmtutte/render.hpp"
#include "lpmtutte/snake.hpp"
#include "lpmtutte/tutte.hpp"
#include "lpmtutte/verifier.hpp"
