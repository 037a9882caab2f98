// Copyright 2026 The prol Authors
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

#include "prol/core.hpp"
#include "prol/ring.hpp"
#include "prol/nc_series.hpp"
#include "prol/comm_series.hpp"
#include "prol/word.hpp"
#include "prol/magnus.hpp"
#include "prol/aut.hpp"
#include "prol/braid.hpp"
#include "prol/johnson.hpp"
#include "prol/gassner.hpp"
#include "prol/alexander.hpp"
#include "prol/cyclotomic.hpp"
#include "prol/ihara.hpp"
#include "prol/sample.hpp"
