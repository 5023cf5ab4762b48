// Copyright 2026 The mmd Authors.
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

#ifndef MMD_MMD_HPP_
#define MMD_MMD_HPP_

#include "mmd/arena.hpp"
#include "mmd/designer.hpp"
#include "mmd/errors.hpp"
#include "mmd/game_core.hpp"
#include "mmd/learners.hpp"
#include "mmd/lp_engine.hpp"
#include "mmd/lrca_player.hpp"
#include "mmd/rational.hpp"
#include "mmd/verifier.hpp"

#endif  // MMD_MMD_HPP_
