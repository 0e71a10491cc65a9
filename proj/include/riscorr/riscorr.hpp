// SPDX-License-Identifier: Apache-2.0
//
// riscorr — Monte Carlo simulation and closed-form analytics for the
// correlation between cascade channels sharing a common BS-RIS link
// Copyright (C) 2026 the riscorr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISCORR_RISCORR_HPP
#define RISCORR_RISCORR_HPP

#include "riscorr/analytics.hpp"
#include "riscorr/channel.hpp"
#include "riscorr/config.hpp"
#include "riscorr/experiments.hpp"
#include "riscorr/geometry.hpp"
#include "riscorr/numerics.hpp"
#include "riscorr/output.hpp"
#include "riscorr/phases.hpp"
#include "riscorr/random.hpp"
#include "riscorr/stats.hpp"
#include "riscorr/version.hpp"

#endif  // RISCORR_RISCORR_HPP
