// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbl/activation.hpp"
#include "pbl/charging.hpp"
#include "pbl/core.hpp"
#include "pbl/discharging.hpp"
#include "pbl/geometry.hpp"
#include "pbl/multicopy.hpp"
#include "pbl/numeric.hpp"
#include "pbl/sampling.hpp"
#include "pbl/spectrum.hpp"
#include "pbl/state.hpp"
