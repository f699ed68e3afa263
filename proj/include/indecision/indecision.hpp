// Copyright 2026 The Indecision Modeling Authors.
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

#ifndef INDECISION_INDECISION_HPP_
#define INDECISION_INDECISION_HPP_

#include "indecision/config.hpp"
#include "indecision/distribution.hpp"
#include "indecision/evaluate.hpp"
#include "indecision/fitting.hpp"
#include "indecision/io.hpp"
#include "indecision/likelihood.hpp"
#include "indecision/param_space.hpp"
#include "indecision/random.hpp"
#include "indecision/response.hpp"
#include "indecision/response_function.hpp"
#include "indecision/scores.hpp"
#include "indecision/simulate.hpp"
#include "indecision/sobol.hpp"
#include "indecision/stats.hpp"
#include "indecision/types.hpp"

#endif  // INDECISION_INDECISION_HPP_
