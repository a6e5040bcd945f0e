#pragma once

// Umbrella header.

#include "edmc/bench.hpp"
#include "edmc/bounds.hpp"
#include "edmc/construct.hpp"
#include "edmc/eigensolver.hpp"
#include "edmc/generate.hpp"
#include "edmc/io.hpp"
#include "edmc/matrix.hpp"
#include "edmc/mds.hpp"
#include "edmc/metrics.hpp"
#include "edmc/operators.hpp"
#include "edmc/optimize.hpp"
#include "edmc/random.hpp"
#include "edmc/tree.hpp"
#include "edmc/types.hpp"
#include "edmc/version.hpp"
