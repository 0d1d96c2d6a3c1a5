// SPDX-License-Identifier: MIT
#pragma once

#include "analysis.hpp"
#include "boolfn.hpp"
#include "circuit.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "reversible.hpp"
#include "synth.hpp"
