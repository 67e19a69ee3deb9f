// bral.hpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// Umbrella header.

#pragma once

#include "bral/abstraction.hpp"
#include "bral/generate.hpp"
#include "bral/lab.hpp"
#include "bral/metrics.hpp"
#include "bral/reduce.hpp"
#include "bral/syntax.hpp"
#include "bral/term.hpp"
