// Copyright 2026 The qdiscord Authors
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

#pragma once

#include "qdiscord/classical.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/entropy.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/linalg.hpp"
#include "qdiscord/measurement.hpp"
#include "qdiscord/minimize.hpp"
#include "qdiscord/nelder_mead.hpp"
#include "qdiscord/property_check.hpp"
#include "qdiscord/propositions.hpp"
#include "qdiscord/separability.hpp"
#include "qdiscord/state_io.hpp"
#include "qdiscord/states.hpp"
#include "qdiscord/sweep.hpp"
#include "qdiscord/tolerances.hpp"
